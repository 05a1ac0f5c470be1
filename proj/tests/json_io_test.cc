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

#include "ymcert/json_io.h"

#include <gtest/gtest.h>

#include "ymcert/errors.h"
#include "ymcert/flow.h"
#include "ymcert/generators.h"

namespace ymcert {
namespace {

constexpr const char* kTriangle = R"({
  "vertices": [{"id": 0, "kind": "boundary"}, {"id": 1, "kind": "charge"}, {"id": 2, "kind": "charge"}],
  "edges": [{"a": 0, "b": 1, "w": "1/2"}, {"a": 0, "b": 2, "w": "0.5"}, {"a": 2, "b": 1, "w": 1}]
})";

TEST(GraphJson, ReadsRationalsDecimalsAndNumbers) {
  const WeightedGraph g = GraphFromJson(ParseJson(kTriangle));
  EXPECT_EQ(g.VertexCount(), 3u);
  EXPECT_EQ(g.Kind(0), VertexKind::kBoundary);
  EXPECT_EQ(g.Weight(0, 1), Rational(1, 2));
  EXPECT_EQ(g.Weight(0, 2), Rational(1, 2));
  EXPECT_EQ(g.Weight(1, 2), -1);
  EXPECT_EQ(g.Flux(1), Rational(3, 2));
}

TEST(GraphJson, RoundTrips) {
  const WeightedGraph g = GraphFromJson(ParseJson(kTriangle));
  const WeightedGraph h = GraphFromJson(GraphToJson(g));
  EXPECT_EQ(g.DirectedEdges(), h.DirectedEdges());
  EXPECT_EQ(GraphToJson(g), GraphToJson(h));
  EXPECT_EQ(GraphToJson(g)["edges"][2]["w"], "-1");
}

TEST(GraphJson, AcceptsBothOrientationsWhenConsistent) {
  Json j = ParseJson(kTriangle);
  j["edges"].push_back({{"a", 1}, {"b", 0}, {"w", "-1/2"}});
  EXPECT_EQ(GraphFromJson(j).Weight(0, 1), Rational(1, 2));
  j["edges"].push_back({{"a", 1}, {"b", 0}, {"w", "1/2"}});
  EXPECT_THROW(GraphFromJson(j), InvalidInput);
}

TEST(GraphJson, RejectsMalformedDocuments) {
  EXPECT_THROW(ParseJson("{\"vertices\": ["), InvalidInput);
  EXPECT_THROW(GraphFromJson(ParseJson("{\"edges\": []}")), InvalidInput);
  EXPECT_THROW(GraphFromJson(ParseJson(R"({"vertices":[{"id":0,"kind":"sink"}],"edges":[]})")), InvalidInput);
  EXPECT_THROW(GraphFromJson(ParseJson(R"({"vertices":[{"id":0,"kind":"boundary"}],"edges":[{"a":0,"b":1,"w":"1"}]})")),
               InvalidInput);
  EXPECT_THROW(GraphFromJson(ParseJson(R"({"vertices":[{"id":0,"kind":"boundary"},{"id":1,"kind":"charge"}],
                                           "edges":[{"a":0,"b":1,"w":"1/0"}]})")),
               InvalidInput);
  EXPECT_THROW(GraphFromJson(ParseJson(R"({"vertices":[{"id":0.5,"kind":"boundary"}],"edges":[]})")), InvalidInput);
}

TEST(FlowJson, CarriesFlowValueAndSink) {
  const XGraph g(GraphFromJson(ParseJson(R"({
    "vertices": [{"id": 0, "kind": "boundary"}, {"id": 1, "kind": "charge"}],
    "edges": [{"a": 0, "b": 1, "w": "1"}]})")));
  const Flow f = SaturatingXFlow(g);
  const Json j = FlowToJson(g, f);
  EXPECT_EQ(j["value"], "1");
  EXPECT_EQ(j["sink"], 1);
  EXPECT_EQ(j["edges"][0]["f"], "1");
  EXPECT_EQ(j["edges"][0]["w"], "1");
}

TEST(FieldJson, RoundTripIsExact) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ChargedField f = MultiChargeRandomField(seed);
    const ChargedField g = FieldFromJson(ParseJson(FieldToJson(f).dump()));
    ASSERT_EQ(g.dim, f.dim);
    ASSERT_EQ(g.charges.size(), f.charges.size());
    for (std::size_t i = 0; i < f.charges.size(); ++i) {
      EXPECT_EQ(g.charges[i].p, f.charges[i].p);
      EXPECT_EQ(g.charges[i].d, f.charges[i].d);
    }
    ASSERT_EQ(g.measure.arcs.size(), f.measure.arcs.size());
    for (std::size_t i = 0; i < f.measure.arcs.size(); ++i) {
      EXPECT_EQ(g.measure.arcs[i].pts, f.measure.arcs[i].pts);
      EXPECT_EQ(g.measure.arcs[i].weight, f.measure.arcs[i].weight);
    }
  }
}

TEST(FieldJson, ReadsTheDocumentedForm) {
  const ChargedField f = FieldFromJson(ParseJson(R"({"dim":2,"charges":[{"p":[0,0],"d":1}],
      "arcs":[{"pts":[[1,0],[0,0]],"w":"1/2"},{"pts":[[-1,0],[0,0]],"w":"1/2"}]})"));
  EXPECT_EQ(f.dim, 2);
  EXPECT_EQ(f.measure.dim, 2);
  EXPECT_TRUE(ValidateField(f).valid()) << ValidateField(f).Summary();
  EXPECT_DOUBLE_EQ(Mass(f.measure), 1.0);
}

TEST(FieldJson, RejectsMalformedFields) {
  EXPECT_THROW(FieldFromJson(ParseJson(R"({"charges":[],"arcs":[]})")), InvalidInput);
  EXPECT_THROW(FieldFromJson(ParseJson(R"({"dim":2,"charges":[{"p":[0,"x"],"d":1}],"arcs":[]})")), InvalidInput);
  EXPECT_THROW(FieldFromJson(ParseJson(R"({"dim":2,"charges":[{"p":[0,0],"d":0.5}],"arcs":[]})")), InvalidInput);
  EXPECT_THROW(FieldFromJson(ParseJson(R"({"dim":2,"charges":[],"arcs":[{"pts":[[1,0]]}]})")), InvalidInput);
}

TEST(Fnv1a64, KnownVectors) {
  EXPECT_EQ(Fnv1a64(""), "cbf29ce484222325");
  EXPECT_EQ(Fnv1a64("a"), "af63dc4c8601ec8c");
  EXPECT_EQ(Fnv1a64("foobar"), "85944171f73967e8");
}

}  // namespace
}  // namespace ymcert
