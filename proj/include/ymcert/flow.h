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

#ifndef YMCERT_FLOW_H_
#define YMCERT_FLOW_H_

#include <map>
#include <optional>
#include <vector>

#include "ymcert/rational.h"
#include "ymcert/xgraph.h"

namespace ymcert {

// Edge function on the edge set of a graph, stored in both orientations.
struct Flow {
  std::map<EdgeKey, Rational> values;
  std::optional<VertexId> sink;  // X-flows only
  Rational value = 0;            // sum of f(boundary, y), y != boundary

  Rational At(VertexId a, VertexId b) const;
};

// Edges separating the boundary from the sink, oriented (near, far).
struct Cut {
  std::vector<EdgeKey> edges;
  std::vector<VertexId> near_side;  // includes the boundary vertex
  Rational value = 0;               // sum of |w| over `edges`
};

struct MaxFlowResult {
  Flow flow;
  Cut cut;
  // Total flow carried by boundary edges (out along positive ones, back in
  // along negative ones). Equals flow.value when every boundary edge points
  // out of the boundary, which is the case for graphs built from fields.
  Rational throughput = 0;
  bool saturating = false;  // f = w on every boundary edge
};

// One entry of the recursion into the branch where the maximum flow value
// lies strictly between 0 and 1.
struct CutStep {
  int depth = 0;
  VertexId sink = 0;
  Rational flow_value = 0;
  Rational s_plus = 0;
  Rational s_minus = 0;
  std::size_t near_vertices = 0;
  std::size_t far_vertices = 0;
};

struct SolveTrace {
  std::vector<CutStep> cut_steps;
  int saturated_steps = 0;
  int zero_value_steps = 0;
  int base_cases = 0;
  // Sink candidates abandoned because their branch did not lead to a
  // saturating flow of the contracted graph.
  int backtracks = 0;
  int zeroflow_violations = 0;
  int glue_checks = 0;
  int bar_splits = 0;
  int max_depth = 0;
};

// Maximum X-flow into `sink` together with a minimum cut read off the
// residual network. Requires a valid X-graph and sink in V+.
// Throws InvalidInput / PreconditionError otherwise.
MaxFlowResult MaxXFlow(const XGraph& g, VertexId sink);

// The vertex of V+ with the largest flux, ties broken by smallest id.
VertexId DefaultSink(const XGraph& g);

// A value-one X-flow that equals w on every boundary edge, built by the
// recursive cut-and-contract construction. Throws InvalidInput for invalid
// graphs, NoSolution if the graph admits no saturating flow (only possible
// when boundary edges have mixed signs), InvariantViolation on internal bugs.
Flow SaturatingXFlow(const XGraph& g, SolveTrace* trace = nullptr);

// Sum of |w(a,b)| over boundary vertices a and their edges.
Rational BoundaryWeight(const BarXGraph& g);

// A bar X-flow equal to w on every boundary edge. Requires a graph passing
// every bar X-graph rule except sign coherence, which the construction does
// not use, and a BoundaryWeight below one; throws InvalidInput or
// PreconditionError otherwise.
Flow SaturatingBarXFlow(const BarXGraph& g, SolveTrace* trace = nullptr);

// Independent checkers for every flow invariant. With `require_saturating`
// the flow must also equal w on all boundary edges (and have value 1 for
// X-flows).
ValidationReport VerifyXFlow(const XGraph& g, const Flow& f, bool require_saturating = true);
ValidationReport VerifyBarXFlow(const BarXGraph& g, const Flow& f, bool require_saturating = true);

}  // namespace ymcert

#endif  // YMCERT_FLOW_H_
