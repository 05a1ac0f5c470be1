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

#ifndef YMCERT_ARC_MEASURE_H_
#define YMCERT_ARC_MEASURE_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ymcert/flow.h"
#include "ymcert/rational.h"
#include "ymcert/xgraph.h"

namespace ymcert {

using Point = std::vector<double>;

// Points with | |p| - 1 | below this count as lying on the unit sphere.
inline constexpr double kSphereTolerance = 1e-12;

double Norm(const Point& p);
double Distance(const Point& a, const Point& b);
bool OnSphere(const Point& p);

// Weighted polyline in the closed unit ball.
struct Arc {
  std::vector<Point> pts;
  Rational weight = 0;

  const Point& Start() const { return pts.front(); }
  const Point& End() const { return pts.back(); }
  double Length() const;
};

struct ArcMeasure {
  int dim = 5;
  std::vector<Arc> arcs;
};

struct Charge {
  Point p;
  int d = 0;
};

// Arc measure with integer point charges. Arcs enter through the unit sphere
// or leave negative charges, and end at positive charges; the weight entering
// through the sphere is one.
struct ChargedField {
  int dim = 5;
  std::vector<Charge> charges;
  ArcMeasure measure;
};

struct FieldReport {
  std::vector<Violation> violations;
  Rational boundary_weight = 0;         // arcs from the sphere to a charge
  Rational boundary_loop_weight = 0;    // arcs from the sphere to the sphere
  std::vector<Rational> balances;       // per charge: weight in minus weight out

  bool valid() const { return violations.empty(); }
  bool Has(const std::string& rule) const;
  std::string Summary() const;
};

FieldReport ValidateField(const ChargedField& f);

// Sum of weight times length.
double Mass(const ArcMeasure& m);

// Sum of weight times the line integral of the constant 1-form c.
double Circulation(const ArcMeasure& m, const Point& c);

// Graph vertex of an arc endpoint: 0 for the sphere, i + 1 for charges[i].
// Nullopt for any other point.
std::optional<VertexId> EndpointVertex(const ChargedField& f, const Point& p);

// Arc indices grouped by (start vertex, end vertex).
struct ClassPartition {
  std::map<EdgeKey, std::vector<std::size_t>> classes;
  std::map<EdgeKey, Rational> weights;
};

// Throws InvalidInput if an endpoint is neither a charge nor on the sphere.
ClassPartition PartitionClasses(const ChargedField& f);

// X-graph with w(a,b) the total weight of class (a,b); boundary is vertex 0
// and arcs from the sphere to the sphere form the loop. Throws InvalidInput
// if the field is invalid.
XGraph GraphFromField(const ChargedField& f);

// alpha = f / w on every class of the partition (zero where w vanishes).
std::map<EdgeKey, Rational> AlphaFromFlow(const ClassPartition& p, const Flow& flow);

// Multiplies each arc's weight by alpha of its class; negative alpha reverses
// the polyline and zero drops the arc. Throws InvalidInput if alpha is
// missing for a class or lies outside [-1, 1].
ArcMeasure Reweight(const ChargedField& f, const std::map<EdgeKey, Rational>& alpha);

struct CompositePath {
  std::vector<Point> pts;
  Rational weight = 0;
  std::size_t arc_count = 0;
  double length = 0;
};

struct Recomposition {
  std::vector<CompositePath> paths;
  Rational cancelled_weight = 0;  // total weight removed from cycles
  double cancelled_mass = 0;
  int cycles_cancelled = 0;
};

// Splits a balanced measure into weighted paths from the sphere to `sink`,
// concatenating arcs that meet at identical coordinates. Directed cycles are
// cancelled first. Throws InvalidInput when some interior point other than
// the sink is unbalanced or a path ends elsewhere than the sink.
Recomposition Recompose(const ArcMeasure& m, const Point& sink);

// Sum of weight times |start - sink|.
double ChordBound(const std::vector<CompositePath>& paths, const Point& sink);

}  // namespace ymcert

#endif  // YMCERT_ARC_MEASURE_H_
