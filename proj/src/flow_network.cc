// Copyright 2026 The ymcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "flow_network.h"

#include <deque>
#include <utility>

#include "ymcert/errors.h"

namespace ymcert::internal {

FlowNetwork::FlowNetwork(int node_count) : node_count_(node_count), incident_(node_count) {}

int FlowNetwork::AddArc(int from, int to, Rational lower, Rational upper) {
  if (lower > 0 || upper < 0 || lower > upper) {
    throw InvariantViolation("flow network arc bounds must bracket zero");
  }
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({from, to, std::move(lower), std::move(upper)});
  incident_[from].push_back(id);
  incident_[to].push_back(id);
  return id;
}

Rational FlowNetwork::Residual(int arc, bool forward) const {
  const Arc& a = arcs_[arc];
  return forward ? Rational(a.upper - a.flow) : Rational(a.flow - a.lower);
}

Rational FlowNetwork::MaxFlow(int source, int target) {
  Rational total = 0;
  for (;;) {
    // parent[v] = (arc, forward) used to reach v.
    std::vector<std::pair<int, bool>> parent(node_count_, {-1, true});
    std::vector<bool> seen(node_count_, false);
    std::deque<int> queue{source};
    seen[source] = true;
    while (!queue.empty() && !seen[target]) {
      const int u = queue.front();
      queue.pop_front();
      for (int id : incident_[u]) {
        const bool forward = arcs_[id].from == u;
        const int v = forward ? arcs_[id].to : arcs_[id].from;
        if (seen[v] || Residual(id, forward) <= 0) continue;
        seen[v] = true;
        parent[v] = {id, forward};
        queue.push_back(v);
      }
    }
    if (!seen[target]) break;

    Rational bottleneck = -1;
    for (int v = target; v != source;) {
      const auto [id, forward] = parent[v];
      const Rational r = Residual(id, forward);
      if (bottleneck < 0 || r < bottleneck) bottleneck = r;
      v = forward ? arcs_[id].from : arcs_[id].to;
    }
    for (int v = target; v != source;) {
      const auto [id, forward] = parent[v];
      arcs_[id].flow += forward ? bottleneck : Rational(-bottleneck);
      v = forward ? arcs_[id].from : arcs_[id].to;
    }
    total += bottleneck;
  }
  return total;
}

std::vector<bool> FlowNetwork::ResidualReachable(int source) const {
  std::vector<bool> seen(node_count_, false);
  std::deque<int> queue{source};
  seen[source] = true;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int id : incident_[u]) {
      const bool forward = arcs_[id].from == u;
      const int v = forward ? arcs_[id].to : arcs_[id].from;
      if (!seen[v] && Residual(id, forward) > 0) {
        seen[v] = true;
        queue.push_back(v);
      }
    }
  }
  return seen;
}

}  // namespace ymcert::internal
