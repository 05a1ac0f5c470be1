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

#include "ymcert/xgraph.h"

#include <algorithm>
#include <limits>
#include <sstream>

#include "ymcert/errors.h"

namespace ymcert {

const char* VertexKindName(VertexKind kind) {
  return kind == VertexKind::kBoundary ? "boundary" : "charge";
}

void WeightedGraph::AddVertex(VertexId id, VertexKind kind) {
  if (!kinds_.emplace(id, kind).second) {
    throw InvalidInput("duplicate vertex id " + std::to_string(id));
  }
}

void WeightedGraph::SetEdge(VertexId a, VertexId b, const Rational& weight) {
  SetDirected(a, b, weight);
  if (a != b) SetDirected(b, a, -weight);
}

void WeightedGraph::AddToEdge(VertexId a, VertexId b, const Rational& weight) {
  SetDirected(a, b, Weight(a, b) + weight);
  if (a != b) SetDirected(b, a, Weight(b, a) - weight);
}

void WeightedGraph::SetDirected(VertexId a, VertexId b, const Rational& weight) {
  if (!HasVertex(a) || !HasVertex(b)) {
    throw InvalidInput("edge (" + std::to_string(a) + "," + std::to_string(b) +
                       ") references an unknown vertex");
  }
  weights_[{a, b}] = weight;
}

VertexKind WeightedGraph::Kind(VertexId id) const {
  auto it = kinds_.find(id);
  if (it == kinds_.end()) throw InvalidInput("unknown vertex " + std::to_string(id));
  return it->second;
}

std::vector<Vertex> WeightedGraph::Vertices() const {
  std::vector<Vertex> out;
  out.reserve(kinds_.size());
  for (const auto& [id, kind] : kinds_) out.push_back({id, kind});
  return out;
}

std::vector<VertexId> WeightedGraph::VertexIds() const {
  std::vector<VertexId> out;
  out.reserve(kinds_.size());
  for (const auto& [id, kind] : kinds_) out.push_back(id);
  return out;
}

std::vector<VertexId> WeightedGraph::BoundaryIds() const {
  std::vector<VertexId> out;
  for (const auto& [id, kind] : kinds_) {
    if (kind == VertexKind::kBoundary) out.push_back(id);
  }
  return out;
}

Rational WeightedGraph::Weight(VertexId a, VertexId b) const {
  auto it = weights_.find({a, b});
  return it == weights_.end() ? Rational(0) : it->second;
}

std::vector<EdgeKey> WeightedGraph::UndirectedEdges() const {
  std::vector<EdgeKey> out;
  for (const auto& [key, w] : weights_) {
    if (key.first <= key.second || !weights_.count({key.second, key.first})) {
      out.push_back(key.first <= key.second ? key : EdgeKey{key.second, key.first});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexId> WeightedGraph::Neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (auto it = weights_.lower_bound({v, std::numeric_limits<VertexId>::min()});
       it != weights_.end() && it->first.first == v; ++it) {
    out.push_back(it->first.second);
  }
  return out;
}

Rational WeightedGraph::Flux(VertexId v) const {
  if (!HasVertex(v)) throw InvalidInput("unknown vertex " + std::to_string(v));
  Rational total = 0;
  for (const auto& [key, w] : weights_) {
    if (key.second == v && key.first != v) total += w;
  }
  return total;
}

XGraph::XGraph(WeightedGraph g) : WeightedGraph(std::move(g)) {
  if (BoundaryIds().size() != 1) {
    throw InvalidInput("an X-graph needs exactly one boundary vertex, found " +
                       std::to_string(BoundaryIds().size()));
  }
}

VertexId XGraph::Boundary() const { return BoundaryIds().front(); }

BarXGraph::BarXGraph(WeightedGraph g) : WeightedGraph(std::move(g)) {
  if (BoundaryIds().empty()) throw InvalidInput("a bar X-graph needs a boundary vertex");
}

bool ValidationReport::Has(const std::string& rule) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.rule == rule; });
}

std::string ValidationReport::Summary() const {
  if (valid()) return "valid";
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out << "; ";
    out << violations[i].rule << ": " << violations[i].detail;
  }
  return out.str();
}

Rational Flux(const WeightedGraph& g, VertexId v) { return g.Flux(v); }

int IncidentSign(const WeightedGraph& g, VertexId v) {
  int sign = 0;
  for (const auto& [key, w] : g.DirectedEdges()) {
    if (key.second != v || key.first == v || w == 0) continue;
    int s = Sign(w);
    if (sign == 0) {
      sign = s;
    } else if (sign != s) {
      return 0;
    }
  }
  return sign;
}

namespace {

std::string EdgeName(const EdgeKey& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

// Checks shared by both graph kinds. `loop_ok` says whether a loop is allowed
// at a vertex (with non-negative weight).
template <typename LoopOk>
void CheckEdges(const WeightedGraph& g, LoopOk loop_ok, ValidationReport& report) {
  for (const auto& [key, w] : g.DirectedEdges()) {
    const auto [a, b] = key;
    if (a == b) {
      if (!loop_ok(a)) {
        report.violations.push_back({"loop", "loop at vertex " + std::to_string(a) + " is not allowed"});
      } else if (w < 0) {
        report.violations.push_back({"loop", "loop weight at " + std::to_string(a) + " is negative"});
      }
      continue;
    }
    if (!g.HasEdge(b, a)) {
      report.violations.push_back({"symmetric-edges", "edge " + EdgeName(key) + " has no reverse"});
    } else if (a < b && g.Weight(b, a) != -w) {
      report.violations.push_back({"antisymmetry", "w" + EdgeName(key) + " = " + FormatRational(w) +
                                                       " but w" + EdgeName({b, a}) + " = " +
                                                       FormatRational(g.Weight(b, a))});
    }
  }
}

// Integer flux and sign coherence at a charge vertex; fills the partition.
void CheckChargeVertex(const WeightedGraph& g, VertexId v, ValidationReport& report,
                       SignedPartition& partition) {
  const Rational fl = g.Flux(v);
  report.fluxes[v] = fl;
  if (!IsInteger(fl)) {
    report.violations.push_back(
        {"integer-flux", "fl(" + std::to_string(v) + ") = " + FormatRational(fl) + " is not an integer"});
  }
  bool pos = false, neg = false;
  for (VertexId a : g.Neighbors(v)) {
    if (a == v) continue;
    const Rational w = g.Weight(a, v);
    pos |= w > 0;
    neg |= w < 0;
  }
  if (pos && neg) {
    report.violations.push_back({"sign-coherence", "vertex " + std::to_string(v) +
                                                       " has incident weights of both signs (fl = " +
                                                       FormatRational(fl) + ")"});
  } else if (pos) {
    partition.positive.push_back(v);
  } else if (neg) {
    partition.negative.push_back(v);
  } else {
    partition.zero.push_back(v);
  }
}

}  // namespace

ValidationReport ValidateXGraph(const XGraph& g) {
  ValidationReport report;
  const VertexId boundary = g.Boundary();
  CheckEdges(g, [&](VertexId v) { return v == boundary; }, report);
  SignedPartition partition;
  for (VertexId v : g.VertexIds()) {
    if (v != boundary) CheckChargeVertex(g, v, report, partition);
  }
  const Rational fl = g.Flux(boundary);
  report.fluxes[boundary] = fl;
  if (fl != -1) {
    report.violations.push_back({"boundary-flux", "fl(boundary) = " + FormatRational(fl) + ", expected -1"});
  }
  if (report.valid()) report.partition = std::move(partition);
  return report;
}

ValidationReport ValidateBarXGraph(const BarXGraph& g) {
  ValidationReport report;
  CheckEdges(g, [](VertexId) { return false; }, report);
  SignedPartition partition;
  Rational boundary_total = 0;
  for (VertexId v : g.VertexIds()) {
    if (g.IsBoundary(v)) {
      report.fluxes[v] = g.Flux(v);
      boundary_total += report.fluxes[v];
    } else {
      CheckChargeVertex(g, v, report, partition);
    }
  }
  if (boundary_total != 0) {
    report.violations.push_back(
        {"boundary-flux", "total boundary flux " + FormatRational(boundary_total) + ", expected 0"});
  }
  if (report.valid()) report.partition = std::move(partition);
  return report;
}

}  // namespace ymcert
