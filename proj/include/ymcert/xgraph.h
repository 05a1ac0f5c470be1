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

#ifndef YMCERT_XGRAPH_H_
#define YMCERT_XGRAPH_H_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ymcert/rational.h"

namespace ymcert {

using VertexId = int;

enum class VertexKind { kBoundary, kCharge };

const char* VertexKindName(VertexKind kind);

struct Vertex {
  VertexId id;
  VertexKind kind;
};

// Directed edge key (tail, head).
using EdgeKey = std::pair<VertexId, VertexId>;

// Finite graph with a weight on every directed edge. Both orientations of an
// edge are stored, so the symmetric-edge-set and antisymmetry conditions can
// be checked (and violated) explicitly. Vertices are kept sorted by id.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  // Throws InvalidInput if the id is already present.
  void AddVertex(VertexId id, VertexKind kind);

  // Sets w(a,b) = weight and w(b,a) = -weight. For a loop (a == b) only the
  // single entry is stored. Throws InvalidInput on unknown vertices.
  void SetEdge(VertexId a, VertexId b, const Rational& weight);

  // Adds `weight` to w(a,b) and subtracts it from w(b,a), creating the edge
  // if needed. Used to merge parallel arcs.
  void AddToEdge(VertexId a, VertexId b, const Rational& weight);

  // Sets only the (a,b) entry; the raw form used when reading files that
  // list both orientations explicitly.
  void SetDirected(VertexId a, VertexId b, const Rational& weight);

  bool HasVertex(VertexId id) const { return kinds_.count(id) > 0; }
  VertexKind Kind(VertexId id) const;
  std::vector<Vertex> Vertices() const;
  std::vector<VertexId> VertexIds() const;
  std::vector<VertexId> BoundaryIds() const;
  std::size_t VertexCount() const { return kinds_.size(); }

  bool HasEdge(VertexId a, VertexId b) const { return weights_.count({a, b}) > 0; }
  // Zero when the edge is absent.
  Rational Weight(VertexId a, VertexId b) const;

  // Every stored directed entry, ordered by (tail, head).
  const std::map<EdgeKey, Rational>& DirectedEdges() const { return weights_; }

  // Unordered edges {a, b} with a <= b, each listed once.
  std::vector<EdgeKey> UndirectedEdges() const;

  // Heads of stored entries with the given tail, sorted.
  std::vector<VertexId> Neighbors(VertexId v) const;

  // fl(v) = sum over a != v of w(a, v). Loops never contribute.
  // Throws InvalidInput for an unknown vertex.
  Rational Flux(VertexId v) const;

 private:
  std::map<VertexId, VertexKind> kinds_;
  std::map<EdgeKey, Rational> weights_;
};

// Weighted antisymmetric graph with a single distinguished boundary vertex.
class XGraph : public WeightedGraph {
 public:
  XGraph() = default;
  // Throws InvalidInput unless `g` has exactly one boundary vertex.
  explicit XGraph(WeightedGraph g);

  VertexId Boundary() const;
};

// Variant with a set of boundary vertices and no loops.
class BarXGraph : public WeightedGraph {
 public:
  BarXGraph() = default;
  // Throws InvalidInput unless `g` has at least one boundary vertex.
  explicit BarXGraph(WeightedGraph g);

  std::vector<VertexId> Boundary() const { return BoundaryIds(); }
  bool IsBoundary(VertexId v) const { return Kind(v) == VertexKind::kBoundary; }
};

// Charge vertices split by the common sign of their incident weights.
struct SignedPartition {
  std::vector<VertexId> positive;
  std::vector<VertexId> negative;
  std::vector<VertexId> zero;  // all incident weights vanish
};

struct Violation {
  std::string rule;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::map<VertexId, Rational> fluxes;
  std::optional<SignedPartition> partition;  // set when valid

  bool valid() const { return violations.empty(); }
  bool Has(const std::string& rule) const;
  std::string Summary() const;
};

ValidationReport ValidateXGraph(const XGraph& g);
ValidationReport ValidateBarXGraph(const BarXGraph& g);

// fl(v); throws InvalidInput for an unknown vertex.
Rational Flux(const WeightedGraph& g, VertexId v);

// Sign of the nonzero incident weights of v (0 if none, or if mixed).
int IncidentSign(const WeightedGraph& g, VertexId v);

}  // namespace ymcert

#endif  // YMCERT_XGRAPH_H_
