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

#include "ymcert/generators.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ymcert/errors.h"

namespace ymcert {

double Rng::Gaussian() {
  // Box-Muller; 1 - u keeps the logarithm finite.
  const double u = 1.0 - Uniform01();
  const double v = Uniform01();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

Point Rng::UnitVector(int dim) {
  while (true) {
    Point p(dim);
    for (double& x : p) x = Gaussian();
    const double n = Norm(p);
    if (n < 1e-6) continue;
    for (double& x : p) x /= n;
    return p;
  }
}

Point Rng::InBall(int dim, double radius) {
  Point p = UnitVector(dim);
  const double r = radius * std::pow(Uniform01(), 1.0 / dim);
  for (double& x : p) x *= r;
  return p;
}

std::vector<Point> AntipodalSpherePoints(int dim, int pairs, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Point> out;
  for (int k = 0; k < pairs; ++k) out.push_back(rng.UnitVector(dim));
  for (int k = 0; k < pairs; ++k) {
    Point q = out[k];
    for (double& x : q) x = -x;
    out.push_back(std::move(q));
  }
  return out;
}

namespace {

constexpr int kRadialArcs = 100;
constexpr std::uint64_t kRadialSampleSeed = 0x5eed;

}  // namespace

ChargedField RadialField(int dim) {
  ChargedField f;
  f.dim = dim;
  f.measure.dim = dim;
  const Point origin(dim, 0.0);
  f.charges.push_back({origin, 1});
  for (const Point& x : AntipodalSpherePoints(dim, kRadialArcs / 2, kRadialSampleSeed)) {
    f.measure.arcs.push_back({{x, origin}, Rational(1, kRadialArcs)});
  }
  return f;
}

ChargedField DetourField(std::uint64_t seed, int dim) {
  ChargedField f = RadialField(dim);
  Rng rng(seed);
  for (Arc& arc : f.measure.arcs) {
    const Point& x = arc.pts.front();
    // Offset the midpoint orthogonally to the radius.
    Point u = rng.UnitVector(dim);
    double along = 0;
    for (int i = 0; i < dim; ++i) along += u[i] * x[i];
    for (int i = 0; i < dim; ++i) u[i] -= along * x[i];
    const double n = Norm(u);
    const double offset = 0.05 + 0.25 * rng.Uniform01();
    Point mid(dim);
    for (int i = 0; i < dim; ++i) mid[i] = 0.5 * x[i] + offset * u[i] / n;
    arc.pts.insert(arc.pts.begin() + 1, mid);
  }
  return f;
}

namespace {

// Polyline from a to b through up to two random interior points.
std::vector<Point> RandomPolyline(Rng& rng, const Point& a, const Point& b, int dim) {
  std::vector<Point> pts{a};
  const int bends = rng.Int(0, 2);
  for (int k = 0; k < bends; ++k) pts.push_back(rng.InBall(dim, 0.9));
  pts.push_back(b);
  return pts;
}

}  // namespace

ChargedField MultiChargeRandomField(std::uint64_t seed, int dim) {
  Rng rng(seed);
  ChargedField f;
  f.dim = dim;
  f.measure.dim = dim;

  const int npos = rng.Int(1, 4);
  const int nneg = rng.Int(0, 3);
  std::vector<int> dneg;
  int total = 1;
  for (int k = 0; k < nneg; ++k) {
    dneg.push_back(rng.Int(1, 2));
    total += dneg.back();
  }
  // Positive charges split the total flux; each gets at least one unit.
  std::vector<int> dpos(npos, 0);
  const int positive_total = std::max(total, npos);
  for (int k = 0; k < positive_total; ++k) ++dpos[k < npos ? k : rng.Int(0, npos - 1)];
  if (positive_total > total) dneg.push_back(positive_total - total);

  static const int kDenominators[] = {2, 4, 6, 8};
  const int den = kDenominators[rng.Int(0, 3)];
  for (int d : dneg) f.charges.push_back({rng.InBall(dim, 0.8), -d});
  for (int d : dpos) f.charges.push_back({rng.InBall(dim, 0.8), d});
  const int negs = static_cast<int>(dneg.size());

  // Sources: den boundary atoms of weight 1/den, then negative charges in
  // units of 1/den. Sinks: positive charges in units of 1/den.
  std::vector<int> source_units(den, 1);
  for (int d : dneg) source_units.push_back(d * den);
  std::vector<int> sink_units;
  for (int d : dpos) sink_units.push_back(d * den);
  const std::vector<Point> atoms = AntipodalSpherePoints(dim, den / 2, rng.Int(0, 1 << 30));

  std::vector<std::vector<int>> units(source_units.size(), std::vector<int>(sink_units.size(), 0));
  int remaining = 0;
  for (int s : source_units) remaining += s;
  for (; remaining > 0; --remaining) {
    std::vector<int> si, ti;
    for (int i = 0; i < static_cast<int>(source_units.size()); ++i) {
      if (source_units[i] > 0) si.push_back(i);
    }
    for (int j = 0; j < static_cast<int>(sink_units.size()); ++j) {
      if (sink_units[j] > 0) ti.push_back(j);
    }
    const int i = si[rng.Int(0, static_cast<int>(si.size()) - 1)];
    const int j = ti[rng.Int(0, static_cast<int>(ti.size()) - 1)];
    ++units[i][j];
    --source_units[i];
    --sink_units[j];
  }

  for (std::size_t i = 0; i < units.size(); ++i) {
    const bool boundary = static_cast<int>(i) < den;
    const Point& from = boundary ? atoms[i] : f.charges[i - den].p;
    for (std::size_t j = 0; j < units[i].size(); ++j) {
      int count = units[i][j];
      const Point& to = f.charges[negs + j].p;
      // Split a bundle into at most two arcs with different routes.
      while (count > 0) {
        const int part = count == 1 ? 1 : rng.Int(1, count);
        f.measure.arcs.push_back({RandomPolyline(rng, from, to, dim), Rational(part, den)});
        count -= part;
        if (f.measure.arcs.size() % 2 == 0 && count > 0) {
          f.measure.arcs.push_back({RandomPolyline(rng, from, to, dim), Rational(count, den)});
          count = 0;
        }
      }
    }
  }
  return f;
}

ChargedField GenerateField(const std::string& kind, std::uint64_t seed, int dim) {
  if (kind == "radial") return RadialField(dim);
  if (kind == "detour") return DetourField(seed, dim);
  if (kind == "multi-charge-random") return MultiChargeRandomField(seed, dim);
  throw InvalidInput("unknown example kind '" + kind + "'");
}

}  // namespace ymcert
