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

#include "ymcert/sphere.h"

#include <cmath>
#include <numbers>

#include "ymcert/errors.h"
#include "ymcert/generators.h"

namespace ymcert {

double SphereArea(int n) {
  if (n < 2) throw InvalidInput("sphere dimension n = " + std::to_string(n) + " is below 2");
  return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n);
}

double PairwiseSum(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n == 0) return 0.0;
  if (n <= 2) return n == 1 ? values[0] : values[0] + values[1];
  std::size_t half = n / 2;
  half += half % 2;
  return PairwiseSum(values.first(half)) + PairwiseSum(values.subspan(half));
}

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> Legendre(int n, double x) {
  double p0 = 1, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return {p1, n * (x * p1 - p0) / (x * x - 1)};
}

}  // namespace

void GaussLegendre(int order, std::vector<double>& nodes, std::vector<double>& weights) {
  if (order < 1) throw InvalidInput("quadrature order must be positive");
  nodes.assign(order, 0.0);
  weights.assign(order, 0.0);
  for (int i = 0; i < (order + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = Legendre(order, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = Legendre(order, x).second;
    nodes[order - 1 - i] = x;
    nodes[i] = -x;
    weights[i] = weights[order - 1 - i] = 2.0 / ((1 - x * x) * dp * dp);
  }
  if (order % 2 == 1) nodes[order / 2] = 0.0;
}

SphereQuadrature GaussProductQuadrature(int dim, int order) {
  if (dim < 2) throw InvalidInput("sphere dimension n = " + std::to_string(dim) + " is below 2");
  if (order < 1) throw InvalidInput("quadrature order must be positive");
  SphereQuadrature q;
  q.dim = dim;
  q.method = "gauss-product";
  q.order = order;

  std::vector<double> t, tw;
  GaussLegendre(order, t, tw);
  std::vector<double> theta(order), cos_t(order), sin_t(order), theta_w(order);
  for (int i = 0; i < order; ++i) {
    theta[i] = 0.5 * std::numbers::pi * (t[i] + 1.0);
    cos_t[i] = std::cos(theta[i]);
    sin_t[i] = std::sin(theta[i]);
    theta_w[i] = 0.5 * std::numbers::pi * tw[i];
  }
  const int azimuth = 2 * order;
  const int polar = dim - 2;
  std::size_t grid = 1;
  for (int k = 0; k < polar; ++k) grid *= order;
  q.coords.reserve(grid * azimuth * dim);
  q.weights.reserve(grid * azimuth);

  std::vector<int> index(polar, 0);
  std::vector<double> x(dim);
  for (std::size_t cell = 0; cell < grid; ++cell) {
    double sines = 1.0, w = 1.0;
    for (int k = 0; k < polar; ++k) {
      const int i = index[k];
      x[k] = sines * cos_t[i];
      w *= theta_w[i] * std::pow(sin_t[i], dim - 2 - k);
      sines *= sin_t[i];
    }
    // Azimuths in [0, pi); the rest of the circle comes from negation.
    for (int j = 0; j < azimuth / 2; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / azimuth;
      x[dim - 2] = sines * std::cos(phi);
      x[dim - 1] = sines * std::sin(phi);
      const double wj = w * 2.0 * std::numbers::pi / azimuth;
      for (double v : x) q.coords.push_back(v);
      for (double v : x) q.coords.push_back(-v);
      q.weights.push_back(wj);
      q.weights.push_back(wj);
    }
    for (int k = polar - 1; k >= 0; --k) {
      if (++index[k] < order) break;
      index[k] = 0;
    }
  }
  return q;
}

SphereQuadrature MonteCarloQuadrature(int dim, int pairs, std::uint64_t seed) {
  if (pairs < 1) throw InvalidInput("Monte-Carlo quadrature needs at least one sample pair");
  SphereQuadrature q;
  q.dim = dim;
  q.method = "monte-carlo";
  q.order = 2 * pairs;
  const double w = SphereArea(dim) / (2.0 * pairs);
  Rng rng(seed);
  for (int k = 0; k < pairs; ++k) {
    const Point x = rng.UnitVector(dim);
    for (double v : x) q.coords.push_back(v);
    for (double v : x) q.coords.push_back(-v);
    q.weights.push_back(w);
    q.weights.push_back(w);
  }
  return q;
}

QuadratureCheck CheckQuadrature(const SphereQuadrature& q) {
  QuadratureCheck c;
  std::vector<double> moment(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    double n2 = 0;
    for (double v : q.Node(i)) n2 += v * v;
    c.max_norm_error = std::max(c.max_norm_error, std::abs(std::sqrt(n2) - 1.0));
  }
  c.weight_sum_error = std::abs(PairwiseSum(q.weights) - SphereArea(q.dim));
  for (int d = 0; d < q.dim; ++d) {
    for (std::size_t i = 0; i < q.size(); ++i) moment[i] = q.weights[i] * q.Node(i)[d];
    c.max_odd_moment = std::max(c.max_odd_moment, std::abs(PairwiseSum(moment)));
  }
  return c;
}

namespace {

void CheckSinkPoint(const SphereQuadrature& q, const Point& a) {
  if (static_cast<int>(a.size()) != q.dim) throw InvalidInput("point dimension does not match the quadrature");
  if (!(Norm(a) < 1.0)) throw InvalidInput("point is not in the open unit ball");
}

}  // namespace

double ChordIntegral(const SphereQuadrature& q, const Point& a) {
  CheckSinkPoint(q, a);
  std::vector<double> terms(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    const std::span<const double> x = q.Node(i);
    double d2 = 0;
    for (int k = 0; k < q.dim; ++k) d2 += (x[k] - a[k]) * (x[k] - a[k]);
    terms[i] = q.weights[i] * std::sqrt(d2);
  }
  return PairwiseSum(terms);
}

Point ChordGradient(const SphereQuadrature& q, const Point& a) {
  CheckSinkPoint(q, a);
  std::vector<double> dist(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    const std::span<const double> x = q.Node(i);
    double d2 = 0;
    for (int k = 0; k < q.dim; ++k) d2 += (x[k] - a[k]) * (x[k] - a[k]);
    if (d2 == 0) throw InvalidInput("point coincides with a quadrature node");
    dist[i] = std::sqrt(d2);
  }
  Point grad(q.dim);
  std::vector<double> terms(q.size());
  for (int k = 0; k < q.dim; ++k) {
    for (std::size_t i = 0; i < q.size(); ++i) terms[i] = -q.weights[i] * (q.Node(i)[k] - a[k]) / dist[i];
    grad[k] = PairwiseSum(terms);
  }
  return grad;
}

double RadialFieldMass(int n) {
  const double area = SphereArea(n);
  // int_0^1 r^{n-1} r^{-(n-1)} dr = 1.
  const double radial = 1.0;
  return area * (radial / area);
}

MonteCarloEstimate RadialFieldMassMonteCarlo(int n, int samples, std::uint64_t seed) {
  if (samples < 2) throw InvalidInput("Monte-Carlo estimate needs at least two samples");
  const double area = SphereArea(n);
  Rng rng(seed);
  std::vector<double> values(samples);
  for (int s = 0; s < samples; ++s) {
    const double r = std::pow(1.0 - rng.Uniform01(), 2.0 / 3.0);
    Point x = rng.UnitVector(n);
    for (double& v : x) v *= r;
    const double rx = Norm(x);
    const double field = 1.0 / (area * std::pow(rx, n - 1));
    const double density = 1.5 * std::sqrt(rx) / (area * std::pow(rx, n - 1));
    values[s] = field / density;
  }
  MonteCarloEstimate est;
  est.value = PairwiseSum(values) / samples;
  for (double& v : values) v = (v - est.value) * (v - est.value);
  est.std_error = std::sqrt(PairwiseSum(values) / (samples - 1.0) / samples);
  return est;
}

namespace {

double DiscreteChord(const std::vector<Point>& atoms, const std::vector<double>& weights, const Point& a) {
  std::vector<double> terms(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) terms[i] = weights[i] * Distance(atoms[i], a);
  return PairwiseSum(terms);
}

}  // namespace

DiscreteMinimum MinimizeDiscreteChord(const std::vector<Point>& atoms, const std::vector<double>& weights,
                                      const Point& start, int max_iterations) {
  if (atoms.empty() || atoms.size() != weights.size()) {
    throw InvalidInput("discrete chord minimum needs one weight per atom");
  }
  for (const Point& x : atoms) {
    if (x.size() != start.size()) throw InvalidInput("atom dimension differs from the start point");
  }
  DiscreteMinimum best{start, DiscreteChord(atoms, weights, start), 0};
  Point a = start;
  const std::size_t dim = start.size();
  for (int it = 1; it <= max_iterations; ++it) {
    Point num(dim, 0.0);
    double den = 0;
    bool at_atom = false;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      const double d = Distance(atoms[i], a);
      if (d < 1e-300) {
        at_atom = true;
        break;
      }
      for (std::size_t k = 0; k < dim; ++k) num[k] += weights[i] * atoms[i][k] / d;
      den += weights[i] / d;
    }
    // The plain iteration is undefined on an atom; stop there.
    if (at_atom || den <= 0) break;
    for (double& v : num) v /= den;
    const double step = Distance(num, a);
    a = num;
    const double value = DiscreteChord(atoms, weights, a);
    if (value < best.value) best = {a, value, it};
    if (step < 1e-15) break;
  }
  return best;
}

}  // namespace ymcert
