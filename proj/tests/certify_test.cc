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

#include "ymcert/certify.h"

#include <gtest/gtest.h>

#include <cmath>

#include "ymcert/errors.h"
#include "ymcert/generators.h"
#include "ymcert/sphere.h"

namespace ymcert {
namespace {

Point E(int axis, double scale = 1.0, int dim = 5) {
  Point p(dim, 0.0);
  p[axis] = scale;
  return p;
}

// Charge -1 at e1/2 feeding charges +1 at +-e0/2; the arc to -e0/2 bends
// through e2/2. Boundary atoms of weight 1/2 at +-e0.
ChargedField ThreeCharge() {
  ChargedField f;
  const Point n = E(1, 0.5), p1 = E(0, 0.5), p2 = E(0, -0.5);
  f.charges = {{n, -1}, {p1, 1}, {p2, 1}};
  f.measure.arcs = {
      {{E(0, 1.0), p1}, Rational(1, 2)},
      {{E(0, -1.0), p2}, Rational(1, 2)},
      {{n, p1}, Rational(1, 2)},
      {{n, E(2, 0.5), p2}, Rational(1, 2)},
  };
  return f;
}

TEST(Certify, RadialFieldIsOptimalConsistent) {
  const Certificate c = Certify(RadialField());
  EXPECT_EQ(c.verdict, "optimal-consistent");
  EXPECT_NEAR(c.mass, 1.0, 1e-9);
  EXPECT_NEAR(c.chord_bound, 1.0, 1e-9);
  EXPECT_NEAR(c.optimal_sink_bound, 1.0, 1e-12);
  EXPECT_EQ(c.flow_value, 1);
  EXPECT_EQ(c.paths, 100u);
  EXPECT_TRUE(c.antipodal);
  EXPECT_TRUE(c.tight);
  for (const ChainLink& l : c.chain) EXPECT_TRUE(l.holds) << l.name;
}

TEST(Certify, DetourIsStrictlySuboptimal) {
  const Certificate c = Certify(DetourField(3));
  EXPECT_EQ(c.verdict, "strictly-suboptimal");
  EXPECT_GT(c.mass, 1.0 + 1e-3);
  EXPECT_NEAR(c.chord_bound, 1.0, 1e-9);
  // The slack sits in the length-versus-chord link.
  EXPECT_GT(c.chain[2].slack, 1e-3);
  EXPECT_NEAR(c.chain[0].slack, 0.0, 1e-12);
}

// Hand trace: f = w on every class except n -> p2, which the flow into the
// sink p1 reverses. Paths: e0 -> p1 (length 1/2) and
// -e0 -> p2 -> e2/2 -> n -> p1 (length 1/2 + 3 sqrt(1/2)), weight 1/2 each.
TEST(Certify, ThreeChargeHandTrace) {
  const Certificate c = Certify(ThreeCharge());
  const double mass = 0.5 + 1.5 * std::sqrt(0.5);
  EXPECT_EQ(c.sink, 2);
  EXPECT_EQ(c.sink_point, E(0, 0.5));
  EXPECT_NEAR(c.mass, mass, 1e-15);
  EXPECT_NEAR(c.reweighted_mass, mass, 1e-15);
  EXPECT_NEAR(c.path_mass, 0.5 * 0.5 + 0.5 * (0.5 + 3 * std::sqrt(0.5)), 1e-15);
  EXPECT_NEAR(c.chord_bound, 0.5 * 0.5 + 0.5 * 1.5, 1e-15);
  EXPECT_NEAR(c.discrete_minimum, 1.0, 1e-15);
  EXPECT_EQ(c.paths, 2u);
  EXPECT_EQ(c.verdict, "strictly-suboptimal");
  ASSERT_EQ(c.chain.size(), 5u);
  EXPECT_NEAR(c.chain[2].slack, mass - 1.0, 1e-15);
  EXPECT_NEAR(c.lower_bound, 1.0, 1e-12);
}

TEST(Certify, OffCentreSamplingFallsBackToTheDiscreteMinimum) {
  ChargedField f;
  f.charges = {{Point(5, 0.0), 1}};
  f.measure.arcs = {{{E(0), Point(5, 0.0)}, 1}};
  const Certificate c = Certify(f);
  EXPECT_FALSE(c.antipodal);
  EXPECT_FALSE(c.chain.back().holds);
  EXPECT_NEAR(c.discrete_minimum, 0.0, 1e-12);
  EXPECT_NEAR(c.lower_bound, c.discrete_minimum, 0.0);
  EXPECT_EQ(c.verdict, "strictly-suboptimal");
}

TEST(Certify, InvalidFieldThrows) {
  ChargedField f = RadialField();
  f.charges[0].d = 2;
  EXPECT_THROW(Certify(f), InvalidInput);
  const Json j = CertificateToJson(InvalidInputCertificate("fnv1a64:0", "bad", 1e-9));
  EXPECT_EQ(j["verdict"], "invalid-input");
  EXPECT_EQ(j["error"], "bad");
}

TEST(Certify, ReportsAreDeterministic) {
  const ChargedField f = MultiChargeRandomField(11);
  EXPECT_EQ(CertificateToJson(Certify(f)).dump(), CertificateToJson(Certify(f)).dump());
  EXPECT_EQ(FieldDigest(f), FieldDigest(FieldFromJson(FieldToJson(f))));
  EXPECT_NE(FieldDigest(f), FieldDigest(MultiChargeRandomField(12)));
}

// Every number of the chain is recomputable from the input with the
// independent pieces.
TEST(Certify, ChainIsSelfVerifyingOnRandomFields) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const ChargedField f = MultiChargeRandomField(seed);
    const Certificate c = Certify(f);
    EXPECT_EQ(c.mass, Mass(f.measure));
    const XGraph g = GraphFromField(f);
    const Flow flow = SaturatingXFlow(g);
    EXPECT_TRUE(VerifyXFlow(g, flow).valid());
    const ArcMeasure m = Reweight(f, AlphaFromFlow(PartitionClasses(f), flow));
    EXPECT_EQ(c.reweighted_mass, Mass(m));
    const Recomposition r = Recompose(m, c.sink_point);
    EXPECT_EQ(c.chord_bound, ChordBound(r.paths, c.sink_point));
    for (const ChainLink& l : c.chain) EXPECT_TRUE(l.holds) << "seed " << seed << ": " << l.name;
    EXPECT_GE(c.mass, 1.0 - 1e-9);
    EXPECT_EQ(c.verdict, c.mass <= c.lower_bound + c.tolerance ? "optimal-consistent" : "strictly-suboptimal");
  }
}

TEST(MinimizeDiscreteChord, FindsTheGeometricMedian) {
  // Three atoms at the vertices of an equilateral triangle: the median is
  // the centre, value 3.
  const double s = std::sqrt(3.0) / 2;
  const std::vector<Point> atoms = {{1, 0}, {-0.5, s}, {-0.5, -s}};
  const DiscreteMinimum m = MinimizeDiscreteChord(atoms, {1, 1, 1}, {0.3, 0.2});
  EXPECT_NEAR(m.value, 3.0, 1e-12);
  EXPECT_NEAR(Norm(m.point), 0.0, 1e-9);
  // A heavy atom wins outright.
  const DiscreteMinimum h = MinimizeDiscreteChord(atoms, {5, 1, 1}, {0.0, 0.0});
  EXPECT_LE(h.value, 2 * std::sqrt(3.0) + 1e-9);
  EXPECT_THROW(MinimizeDiscreteChord({}, {}, {0, 0}), InvalidInput);
}

}  // namespace
}  // namespace ymcert
