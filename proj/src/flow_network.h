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

// Internal exact max-flow engine shared by the X-flow and bar X-flow solvers.

#ifndef YMCERT_SRC_FLOW_NETWORK_H_
#define YMCERT_SRC_FLOW_NETWORK_H_

#include <vector>

#include "ymcert/rational.h"

namespace ymcert::internal {

// Directed network whose arcs carry a flow constrained to [lower, upper]
// with lower <= 0 <= upper. An undirected edge of capacity c is a single arc
// with bounds [-c, c]. Max flow uses shortest augmenting paths (BFS), which
// terminates on rational capacities; neighbours are scanned in arc insertion
// order so results are deterministic.
class FlowNetwork {
 public:
  explicit FlowNetwork(int node_count);

  int AddArc(int from, int to, Rational lower, Rational upper);

  // Augments from the current flow (initially zero) until no s-t path
  // remains. Returns the total flow out of `source`.
  Rational MaxFlow(int source, int target);

  const Rational& FlowOn(int arc) const { return arcs_[arc].flow; }

  // Nodes reachable from `source` along arcs with positive residual capacity.
  std::vector<bool> ResidualReachable(int source) const;

 private:
  struct Arc {
    int from;
    int to;
    Rational lower;
    Rational upper;
    Rational flow = 0;
  };
  // Residual capacity of traversing `arc` forwards (from->to) or backwards.
  Rational Residual(int arc, bool forward) const;

  int node_count_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> incident_;  // arc ids touching each node
};

}  // namespace ymcert::internal

#endif  // YMCERT_SRC_FLOW_NETWORK_H_
