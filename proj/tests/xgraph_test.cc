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

#include <gtest/gtest.h>

#include "support/random_graphs.h"
#include "ymcert/errors.h"

namespace ymcert {
namespace {

Rational Q(const char* text) { return ParseRational(text); }

XGraph Minimal() {
  WeightedGraph g;
  g.AddVertex(0, VertexKind::kBoundary);
  g.AddVertex(1, VertexKind::kCharge);
  g.SetEdge(0, 1, 1);
  return XGraph(std::move(g));
}

// Boundary 0, n = 1, p1 = 2, p2 = 3.
XGraph FourVertex() {
  WeightedGraph g;
  g.AddVertex(0, VertexKind::kBoundary);
  for (int v = 1; v <= 3; ++v) g.AddVertex(v, VertexKind::kCharge);
  g.SetEdge(0, 2, Q("1/2"));
  g.SetEdge(0, 3, Q("1/2"));
  g.SetEdge(1, 2, Q("1/2"));
  g.SetEdge(1, 3, Q("1/2"));
  return XGraph(std::move(g));
}

TEST(ValidateXGraph, MinimalGraphIsValid) {
  const ValidationReport r = ValidateXGraph(Minimal());
  ASSERT_TRUE(r.valid()) << r.Summary();
  EXPECT_EQ(r.fluxes.at(1), 1);
  EXPECT_EQ(r.partition->positive, std::vector<VertexId>{1});
  EXPECT_TRUE(r.partition->negative.empty());
}

TEST(ValidateXGraph, MixedSignsAtZeroFluxVertex) {
  WeightedGraph g;
  g.AddVertex(0, VertexKind::kBoundary);
  g.AddVertex(1, VertexKind::kCharge);  // a
  g.AddVertex(2, VertexKind::kCharge);  // b
  g.SetEdge(0, 1, Q("1/2"));
  g.SetEdge(2, 1, Q("-1/2"));
  g.SetEdge(0, 2, Q("1/2"));
  const ValidationReport r = ValidateXGraph(XGraph(std::move(g)));
  EXPECT_FALSE(r.valid());
  EXPECT_TRUE(r.Has("sign-coherence"));
  EXPECT_EQ(r.fluxes.at(1), 0);
  EXPECT_FALSE(r.partition.has_value());
}

TEST(ValidateXGraph, FourVertexExample) {
  const XGraph g = FourVertex();
  const ValidationReport r = ValidateXGraph(g);
  ASSERT_TRUE(r.valid()) << r.Summary();
  EXPECT_EQ(r.fluxes.at(2), 1);
  EXPECT_EQ(r.fluxes.at(3), 1);
  EXPECT_EQ(r.fluxes.at(1), -1);
  EXPECT_EQ(r.fluxes.at(0), -1);
  EXPECT_EQ(r.partition->positive, (std::vector<VertexId>{2, 3}));
  EXPECT_EQ(r.partition->negative, std::vector<VertexId>{1});
}

TEST(ValidateXGraph, ReportsEachBrokenRule) {
  WeightedGraph g;
  g.AddVertex(0, VertexKind::kBoundary);
  g.AddVertex(1, VertexKind::kCharge);
  g.AddVertex(2, VertexKind::kCharge);
  g.SetDirected(0, 1, Q("1/2"));
  g.SetDirected(1, 0, Q("-1/3"));
  g.SetDirected(1, 2, 1);
  g.SetDirected(2, 2, 1);
  g.SetDirected(0, 0, -1);
  const ValidationReport r = ValidateXGraph(XGraph(std::move(g)));
  EXPECT_TRUE(r.Has("antisymmetry"));
  EXPECT_TRUE(r.Has("symmetric-edges"));
  EXPECT_TRUE(r.Has("loop"));
  EXPECT_TRUE(r.Has("integer-flux"));
  EXPECT_TRUE(r.Has("boundary-flux"));
}

TEST(ValidateXGraph, BoundaryLoopIsAllowedAndExcludedFromFlux) {
  WeightedGraph g;
  g.AddVertex(0, VertexKind::kBoundary);
  g.AddVertex(1, VertexKind::kCharge);
  g.SetEdge(0, 1, 1);
  g.SetEdge(0, 0, Q("3/7"));
  const XGraph x(std::move(g));
  EXPECT_TRUE(ValidateXGraph(x).valid());
  EXPECT_EQ(Flux(x, 0), -1);
  EXPECT_EQ(x.Weight(0, 0), Q("3/7"));
}

TEST(Flux, Examples) {
  EXPECT_EQ(Flux(Minimal(), 1), 1);
  EXPECT_EQ(Flux(Minimal(), 0), -1);
  EXPECT_EQ(Flux(FourVertex(), 1), -1);
  EXPECT_THROW(Flux(Minimal(), 7), InvalidInput);
}

TEST(XGraph, RequiresExactlyOneBoundary) {
  WeightedGraph none;
  none.AddVertex(1, VertexKind::kCharge);
  EXPECT_THROW(XGraph{none}, InvalidInput);
  WeightedGraph two;
  two.AddVertex(0, VertexKind::kBoundary);
  two.AddVertex(1, VertexKind::kBoundary);
  EXPECT_THROW(XGraph{two}, InvalidInput);
  EXPECT_NO_THROW(BarXGraph{two});
}

TEST(ValidateBarXGraph, RejectsLoopsAndUnbalancedBoundary) {
  WeightedGraph g;
  g.AddVertex(0, VertexKind::kBoundary);
  g.AddVertex(1, VertexKind::kBoundary);
  g.AddVertex(2, VertexKind::kCharge);
  g.AddVertex(3, VertexKind::kCharge);
  g.SetEdge(0, 2, Q("1/4"));
  g.SetEdge(3, 2, Q("3/4"));
  g.SetEdge(3, 1, Q("1/4"));
  EXPECT_TRUE(ValidateBarXGraph(BarXGraph(g)).valid()) << ValidateBarXGraph(BarXGraph(g)).Summary();
  g.SetEdge(0, 0, Q("1/8"));
  EXPECT_TRUE(ValidateBarXGraph(BarXGraph(g)).Has("loop"));
  WeightedGraph h;
  h.AddVertex(0, VertexKind::kBoundary);
  h.AddVertex(1, VertexKind::kCharge);
  h.SetEdge(0, 1, 1);
  EXPECT_TRUE(ValidateBarXGraph(BarXGraph(h)).Has("boundary-flux"));
}

TEST(ValidateBarXGraph, ZeroFluxRelayBreaksSignCoherence) {
  WeightedGraph g;
  g.AddVertex(0, VertexKind::kBoundary);
  g.AddVertex(1, VertexKind::kBoundary);
  g.AddVertex(2, VertexKind::kCharge);
  g.SetEdge(0, 2, Q("1/4"));
  g.SetEdge(1, 2, Q("-1/4"));
  const ValidationReport r = ValidateBarXGraph(BarXGraph(std::move(g)));
  EXPECT_EQ(r.fluxes.at(2), 0);
  EXPECT_TRUE(r.Has("sign-coherence"));
}

TEST(WeightedGraph, AddToEdgeMergesAntisymmetrically) {
  WeightedGraph g;
  g.AddVertex(0, VertexKind::kBoundary);
  g.AddVertex(1, VertexKind::kCharge);
  g.AddToEdge(0, 1, Q("1/3"));
  g.AddToEdge(1, 0, Q("-2/3"));
  EXPECT_EQ(g.Weight(0, 1), 1);
  EXPECT_EQ(g.Weight(1, 0), -1);
  EXPECT_THROW(g.AddVertex(1, VertexKind::kCharge), InvalidInput);
  EXPECT_THROW(g.SetEdge(0, 5, 1), InvalidInput);
}

// Property: charge fluxes of every valid X-graph sum to +1, and every edge
// is antisymmetric.
TEST(ValidateXGraph, RandomGraphsHaveUnitChargeTotal) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const XGraph g = testing::RandomFieldXGraph(seed);
    const ValidationReport r = ValidateXGraph(g);
    ASSERT_TRUE(r.valid()) << "seed " << seed << ": " << r.Summary();
    Rational total = 0;
    for (VertexId v : g.VertexIds()) {
      if (v != g.Boundary()) total += Flux(g, v);
    }
    EXPECT_EQ(total, 1) << "seed " << seed;
    for (const auto& [key, w] : g.DirectedEdges()) {
      if (key.first != key.second) EXPECT_EQ(g.Weight(key.second, key.first), -w);
    }
    EXPECT_LE(g.VertexCount(), 10u);
  }
}

}  // namespace
}  // namespace ymcert
