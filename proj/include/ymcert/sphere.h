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

#ifndef YMCERT_SPHERE_H_
#define YMCERT_SPHERE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ymcert/arc_measure.h"

namespace ymcert {

// |S^{n-1}| = 2 pi^{n/2} / Gamma(n/2). Throws InvalidInput for n < 2.
double SphereArea(int n);

// Sum by recursive halving. Splits fall on even offsets, so adjacent pairs
// are always added to each other first.
double PairwiseSum(std::span<const double> values);

// Gauss-Legendre nodes and weights on [-1, 1], exactly symmetric.
void GaussLegendre(int order, std::vector<double>& nodes, std::vector<double>& weights);

// Weighted nodes on the unit sphere S^{dim-1}. Nodes come in antipodal pairs
// (2k, 2k+1) with equal weights, so every odd moment cancels pair by pair.
struct SphereQuadrature {
  int dim = 0;
  std::string method;
  int order = 0;                 // angular order or sample count
  std::vector<double> coords;    // size() * dim, row-major
  std::vector<double> weights;

  std::size_t size() const { return weights.size(); }
  std::span<const double> Node(std::size_t i) const { return {coords.data() + i * dim, static_cast<std::size_t>(dim)}; }
};

// Product rule in hyperspherical coordinates: Gauss-Legendre of the given
// order in each polar angle (with its sine power) and the trapezoid rule with
// 2*order points in the azimuth. Has order^(dim-2) * 2*order nodes.
SphereQuadrature GaussProductQuadrature(int dim, int order);

// `pairs` uniformly random unit vectors and their negations, each weighted
// |S^{dim-1}| / (2 * pairs).
SphereQuadrature MonteCarloQuadrature(int dim, int pairs, std::uint64_t seed);

struct QuadratureCheck {
  double max_norm_error = 0;    // max | |x| - 1 |
  double weight_sum_error = 0;  // | sum w - area |
  double max_odd_moment = 0;    // max over i of | sum w x_i |
};
QuadratureCheck CheckQuadrature(const SphereQuadrature& q);

// sum w_i |x_i - a|. Throws InvalidInput unless |a| < 1 and dims agree.
double ChordIntegral(const SphereQuadrature& q, const Point& a);

// Derivative of ChordIntegral in a: -sum w_i (x_i - a) / |x_i - a|.
// Throws InvalidInput when a is outside the open ball or equals a node.
Point ChordGradient(const SphereQuadrature& q, const Point& a);

// Mass of |S^{n-1}|^{-1} x / |x|^n over the unit ball by the radial
// factorization |S^{n-1}| * int_0^1 r^{n-1} |S^{n-1}|^{-1} r^{-(n-1)} dr.
double RadialFieldMass(int n);

struct MonteCarloEstimate {
  double value = 0;
  double std_error = 0;
};

// The same mass by importance sampling: directions uniform on S^{n-1} and
// radii with density (3/2) r^{1/2}.
MonteCarloEstimate RadialFieldMassMonteCarlo(int n, int samples, std::uint64_t seed);

struct DiscreteMinimum {
  Point point;
  double value = 0;  // sum w_i |x_i - point|
  int iterations = 0;
};

// Weiszfeld descent for min_a sum w_i |x_i - a| started at `start`. The
// objective never increases along the iterates, so value is at most the
// objective at `start`. Stops when a step moves less than 1e-15 or after
// max_iterations. Throws InvalidInput on mismatched sizes or empty input.
DiscreteMinimum MinimizeDiscreteChord(const std::vector<Point>& atoms, const std::vector<double>& weights,
                                      const Point& start, int max_iterations = 10000);

}  // namespace ymcert

#endif  // YMCERT_SPHERE_H_
