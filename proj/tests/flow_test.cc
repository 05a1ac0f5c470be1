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

#include "ymcert/flow.h"

#include <gtest/gtest.h>

#include "oracles/lp_oracle.h"
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

TEST(MaxXFlow, MinimalGraph) {
  const MaxFlowResult r = MaxXFlow(Minimal(), 1);
  EXPECT_EQ(r.flow.value, 1);
  EXPECT_TRUE(r.saturating);
  EXPECT_EQ(r.cut.edges, (std::vector<EdgeKey>{{0, 1}}));
  EXPECT_EQ(r.cut.value, 1);
}

TEST(MaxXFlow, FourVertexUsesReversedRoute) {
  const XGraph g = FourVertex();
  const MaxFlowResult r = MaxXFlow(g, 2);
  EXPECT_EQ(r.flow.value, 1);
  EXPECT_EQ(r.flow.At(1, 3), Q("-1/2"));
  EXPECT_EQ(r.flow.At(1, 2), Q("1/2"));
  EXPECT_EQ(r.flow.At(0, 3), Q("1/2"));
  EXPECT_EQ(oracle::MaxXFlowValueLp(g, 2), 1);
  EXPECT_TRUE(VerifyXFlow(g, r.flow).valid());
}

TEST(MaxXFlow, DisconnectedSinkHasValueZeroAndEmptyCut) {
  WeightedGraph w;
  w.AddVertex(0, VertexKind::kBoundary);
  w.AddVertex(1, VertexKind::kCharge);
  w.AddVertex(2, VertexKind::kCharge);
  w.AddVertex(3, VertexKind::kCharge);
  w.SetEdge(0, 1, 1);
  w.SetEdge(2, 3, 1);
  const XGraph g(std::move(w));
  const MaxFlowResult r = MaxXFlow(g, 3);
  EXPECT_EQ(r.flow.value, 0);
  EXPECT_TRUE(r.cut.edges.empty());
  EXPECT_EQ(r.cut.value, 0);
  EXPECT_TRUE(VerifyXFlow(g, r.flow, false).valid());
}

TEST(MaxXFlow, RejectsSinkOutsidePositiveSet) {
  EXPECT_THROW(MaxXFlow(FourVertex(), 1), PreconditionError);
  EXPECT_THROW(MaxXFlow(FourVertex(), 0), PreconditionError);
}

TEST(DefaultSink, LargestFluxThenSmallestId) {
  EXPECT_EQ(DefaultSink(FourVertex()), 2);
  WeightedGraph w;
  w.AddVertex(0, VertexKind::kBoundary);
  for (int v = 1; v <= 3; ++v) w.AddVertex(v, VertexKind::kCharge);
  w.SetEdge(0, 3, 1);
  w.SetEdge(1, 3, 1);
  w.SetEdge(1, 2, 1);
  EXPECT_EQ(DefaultSink(XGraph(std::move(w))), 3);
}

TEST(SaturatingXFlow, MinimalGraphTakesWeights) {
  const XGraph g = Minimal();
  const Flow f = SaturatingXFlow(g);
  EXPECT_EQ(f.At(0, 1), 1);
  EXPECT_EQ(f.At(1, 0), -1);
  EXPECT_EQ(f.sink, 1);
  EXPECT_EQ(f.value, 1);
}

TEST(SaturatingXFlow, FourVertexWithSinkP1) {
  const XGraph g = FourVertex();
  const Flow f = SaturatingXFlow(g);
  EXPECT_EQ(f.sink, 2);
  EXPECT_EQ(f.value, 1);
  const ValidationReport r = VerifyXFlow(g, f);
  EXPECT_TRUE(r.valid()) << r.Summary();
  EXPECT_TRUE(oracle::SaturatingXFlowFeasibleLp(g));
}

TEST(SaturatingXFlow, LoopNeverCarriesFlow) {
  WeightedGraph w;
  w.AddVertex(0, VertexKind::kBoundary);
  w.AddVertex(1, VertexKind::kCharge);
  w.SetEdge(0, 1, 1);
  w.SetEdge(0, 0, Q("1/5"));
  const XGraph g(std::move(w));
  const Flow f = SaturatingXFlow(g);
  EXPECT_EQ(f.At(0, 0), 0);
  EXPECT_TRUE(VerifyXFlow(g, f).valid());
}

TEST(SaturatingXFlow, RejectsInvalidGraph) {
  WeightedGraph w;
  w.AddVertex(0, VertexKind::kBoundary);
  w.AddVertex(1, VertexKind::kCharge);
  w.SetEdge(0, 1, Q("1/2"));
  EXPECT_THROW(SaturatingXFlow(XGraph(std::move(w))), InvalidInput);
}

// Boundary edges of mixed sign: p has flux 2, q has flux -1, and no sink can
// absorb the boundary's unit while q sends its charge back into it.
TEST(SaturatingXFlow, MixedBoundaryCanHaveNoSolution) {
  WeightedGraph w;
  w.AddVertex(0, VertexKind::kBoundary);
  w.AddVertex(1, VertexKind::kCharge);  // p
  w.AddVertex(2, VertexKind::kCharge);  // q
  w.SetEdge(0, 1, Q("3/2"));
  w.SetEdge(2, 1, Q("1/2"));
  w.SetEdge(0, 2, Q("-1/2"));
  const XGraph g(std::move(w));
  ASSERT_TRUE(ValidateXGraph(g).valid());
  EXPECT_FALSE(oracle::SaturatingXFlowFeasibleLp(g));
  EXPECT_THROW(SaturatingXFlow(g), NoSolution);
}

// Property: every random field-type X-graph gets a verified value-one flow,
// max-flow value equals min-cut value, and small instances agree with the
// LP oracle.
TEST(SaturatingXFlow, RandomGraphsAreSaturated) {
  SolveTrace trace;
  int oracle_checked = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const XGraph g = testing::RandomFieldXGraph(seed);
    const Flow f = SaturatingXFlow(g, &trace);
    const ValidationReport r = VerifyXFlow(g, f);
    ASSERT_TRUE(r.valid()) << "seed " << seed << ": " << r.Summary();
    ASSERT_EQ(f.value, 1);
    const ValidationReport report = ValidateXGraph(g);
    for (VertexId sink : report.partition->positive) {
      const MaxFlowResult m = MaxXFlow(g, sink);
      EXPECT_EQ(m.flow.value, m.cut.value) << "seed " << seed << " sink " << sink;
      EXPECT_TRUE(VerifyXFlow(g, m.flow, false).valid());
      if (g.VertexCount() <= 8) {
        EXPECT_EQ(m.flow.value, oracle::MaxXFlowValueLp(g, sink)) << "seed " << seed << " sink " << sink;
      }
    }
    if (g.VertexCount() <= 8) {
      EXPECT_TRUE(oracle::SaturatingXFlowFeasibleLp(g)) << "seed " << seed;
      ++oracle_checked;
    }
  }
  EXPECT_GT(oracle_checked, 100);
  EXPECT_FALSE(trace.cut_steps.empty());
  EXPECT_EQ(trace.zeroflow_violations, 0);
  for (const CutStep& step : trace.cut_steps) {
    EXPECT_EQ(step.s_plus, step.s_minus);
    EXPECT_GT(step.flow_value, 0);
    EXPECT_LT(step.flow_value, 1);
  }
}

BarXGraph SingleRelay() {
  WeightedGraph w;
  w.AddVertex(0, VertexKind::kBoundary);  // u
  w.AddVertex(1, VertexKind::kBoundary);  // v
  w.AddVertex(2, VertexKind::kCharge);    // m
  w.SetEdge(0, 2, Q("1/4"));
  w.SetEdge(1, 2, Q("-1/4"));
  return BarXGraph(std::move(w));
}

TEST(SaturatingBarXFlow, BoundaryOnlyTakesWeights) {
  WeightedGraph w;
  w.AddVertex(0, VertexKind::kBoundary);
  w.AddVertex(1, VertexKind::kBoundary);
  w.SetEdge(0, 1, Q("1/3"));
  const BarXGraph g(std::move(w));
  const Flow f = SaturatingBarXFlow(g);
  EXPECT_EQ(f.At(0, 1), Q("1/3"));
  EXPECT_TRUE(VerifyBarXFlow(g, f).valid());
}

TEST(SaturatingBarXFlow, OneInteriorVertex) {
  const BarXGraph g = SingleRelay();
  EXPECT_EQ(BoundaryWeight(g), Q("1/2"));
  const Flow f = SaturatingBarXFlow(g);
  EXPECT_EQ(f.At(0, 2), Q("1/4"));
  EXPECT_EQ(f.At(2, 1), Q("1/4"));
  EXPECT_TRUE(VerifyBarXFlow(g, f).valid());
}

TEST(SaturatingBarXFlow, RejectsLargeBoundaryWeight) {
  WeightedGraph w;
  w.AddVertex(0, VertexKind::kBoundary);
  w.AddVertex(1, VertexKind::kBoundary);
  w.AddVertex(2, VertexKind::kCharge);
  w.SetEdge(0, 2, Q("1/2"));
  w.SetEdge(1, 2, Q("-1/2"));
  EXPECT_THROW(SaturatingBarXFlow(BarXGraph(std::move(w))), PreconditionError);
}

TEST(SaturatingBarXFlow, RandomSmallFluxGraphsAreSaturated) {
  SolveTrace trace;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const BarXGraph g = testing::RandomBarXGraph(seed, true);
    ASSERT_TRUE(ValidateBarXGraph(g).valid()) << "seed " << seed;
    ASSERT_LT(BoundaryWeight(g), 1);
    const Flow f = SaturatingBarXFlow(g, &trace);
    const ValidationReport r = VerifyBarXFlow(g, f);
    ASSERT_TRUE(r.valid()) << "seed " << seed << ": " << r.Summary();
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const BarXGraph g = testing::RandomBarXGraph(seed, false);
    ASSERT_GE(BoundaryWeight(g), 1);
    EXPECT_THROW(SaturatingBarXFlow(g), PreconditionError) << "seed " << seed;
  }
}

TEST(VerifyXFlow, ZeroFlowIsNotSaturating) {
  const XGraph g = FourVertex();
  Flow f;
  for (const auto& [key, w] : g.DirectedEdges()) f.values[key] = 0;
  f.sink = 2;
  const ValidationReport r = VerifyXFlow(g, f);
  ASSERT_FALSE(r.valid());
  EXPECT_TRUE(r.Has("saturation"));
  EXPECT_NE(r.Summary().find("value 0, not saturating"), std::string::npos);
}

TEST(VerifyXFlow, NamesVertexWithBrokenConservation) {
  const XGraph g = FourVertex();
  Flow f = SaturatingXFlow(g);
  f.values[{1, 3}] = 0;
  f.values[{3, 1}] = 0;
  const ValidationReport r = VerifyXFlow(g, f);
  ASSERT_TRUE(r.Has("conservation"));
  EXPECT_NE(r.Summary().find("vertex 1"), std::string::npos);
  EXPECT_NE(r.Summary().find("vertex 3"), std::string::npos);
}

TEST(VerifyXFlow, CatchesCapacityAndSignErrors) {
  const XGraph g = FourVertex();
  Flow f = SaturatingXFlow(g);
  f.values[{0, 3}] = Q("-1/2");
  f.values[{3, 0}] = Q("1/2");
  EXPECT_TRUE(VerifyXFlow(g, f).Has("boundary-sign"));
  f = SaturatingXFlow(g);
  f.values[{1, 2}] = 1;
  f.values[{2, 1}] = -1;
  EXPECT_TRUE(VerifyXFlow(g, f).Has("capacity"));
  f = SaturatingXFlow(g);
  f.values[{1, 2}] = Q("1/2");
  f.values[{2, 1}] = Q("1/2");
  EXPECT_TRUE(VerifyXFlow(g, f).Has("flow-antisymmetry"));
}

}  // namespace
}  // namespace ymcert
