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

#include "ymcert/instanton.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numeric>

#include "ymcert/errors.h"
#include "ymcert/sphere.h"

namespace ymcert {

namespace {

using Complex = std::complex<double>;

struct Permutation {
  std::vector<int> index;
  int sign;
};

std::vector<Permutation> Permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    }
    out.push_back({p, inversions % 2 ? -1 : 1});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

const std::vector<Permutation>& Permutations4() {
  static const std::vector<Permutation> perms = Permutations(4);
  return perms;
}

const std::vector<Permutation>& Permutations5() {
  static const std::vector<Permutation> perms = Permutations(5);
  return perms;
}

int LeviCivita(const std::vector<int>& idx) {
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return 0;
    }
  }
  int inversions = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i + 1; j < idx.size(); ++j) inversions += idx[i] > idx[j];
  }
  return inversions % 2 ? -1 : 1;
}

double SquaredNorm(const Point& x) {
  double s = 0;
  for (double v : x) s += v * v;
  return s;
}

double Frobenius(const LieValue& m) { return m.norm(); }

// Chart x = xi' / (1 + xi_5) of S^4 minus its south pole.
Point ChartPoint(const Point& xi) {
  Point x(4);
  for (int m = 0; m < 4; ++m) x[m] = xi[m] / (1.0 + xi[4]);
  return x;
}

// Jacobian d x_mu / d y_i of y -> x(y / |y|), 4 x 5 row-major.
std::array<double, 20> PullbackJacobian(const Point& y) {
  const double r = Norm(y);
  Point xi(5);
  for (int i = 0; i < 5; ++i) xi[i] = y[i] / r;
  const double denom = 1.0 + xi[4];
  // d x_mu / d xi_k.
  double dx[4][5] = {};
  for (int m = 0; m < 4; ++m) {
    dx[m][m] = 1.0 / denom;
    dx[m][4] = -xi[m] / (denom * denom);
  }
  std::array<double, 20> j{};
  for (int m = 0; m < 4; ++m) {
    for (int i = 0; i < 5; ++i) {
      double s = 0;
      for (int k = 0; k < 5; ++k) s += dx[m][k] * ((k == i ? 1.0 : 0.0) - xi[k] * xi[i]) / r;
      j[m * 5 + i] = s;
    }
  }
  return j;
}

void CheckBallPoint(const Point& y) {
  if (y.size() != 5) throw InvalidInput("radial pullback needs a point of R^5");
  const double r = Norm(y);
  if (!(r > 0)) throw InvalidInput("radial pullback is undefined at the origin");
  if (r > 1.0 + kSphereTolerance) throw InvalidInput("point lies outside the closed unit ball");
}

IntegralResult Converged(const std::function<std::pair<double, std::size_t>(int)>& at_order, int order,
                         double tolerance, const char* what) {
  if (order < 2) throw InvalidInput("quadrature order must be at least 2");
  IntegralResult r;
  std::tie(r.value, r.nodes) = at_order(order);
  r.coarse_value = at_order(order / 2).first;
  r.relative_change = std::abs(r.value - r.coarse_value) / std::max(std::abs(r.value), 1e-300);
  if (!(r.relative_change <= tolerance)) {
    throw QuadratureNotConverged(std::string(what) + " changed by " + std::to_string(r.relative_change) +
                                 " relative between orders " + std::to_string(order / 2) + " and " +
                                 std::to_string(order));
  }
  return r;
}

// int_{R^4} g(x) d^4x in polar coordinates with r = s / (1 - s).
std::pair<double, std::size_t> FlatPolarIntegral(const std::function<double(const Point&)>& g, int order) {
  std::vector<double> s, sw;
  GaussLegendre(order, s, sw);
  const SphereQuadrature sphere = GaussProductQuadrature(4, std::max(8, order / 4));
  std::vector<double> terms;
  terms.reserve(order * sphere.size());
  Point x(4);
  for (int k = 0; k < order; ++k) {
    const double u = 0.5 * (s[k] + 1.0);
    const double r = u / (1.0 - u);
    const double jac = 0.5 * sw[k] / ((1.0 - u) * (1.0 - u)) * r * r * r;
    for (std::size_t i = 0; i < sphere.size(); ++i) {
      const auto node = sphere.Node(i);
      for (int m = 0; m < 4; ++m) x[m] = r * node[m];
      terms.push_back(jac * sphere.weights[i] * g(x));
    }
  }
  return {PairwiseSum(terms), terms.size()};
}

// int_{B^5} g(y) dy in polar coordinates.
std::pair<double, std::size_t> BallPolarIntegral(const std::function<double(const Point&)>& g, int order) {
  const int radial = std::max(4, order / 4);
  std::vector<double> s, sw;
  GaussLegendre(radial, s, sw);
  const SphereQuadrature sphere = GaussProductQuadrature(5, std::max(8, order / 8));
  std::vector<double> terms;
  terms.reserve(radial * sphere.size());
  Point y(5);
  for (int k = 0; k < radial; ++k) {
    const double r = 0.5 * (s[k] + 1.0);
    const double jac = 0.5 * sw[k] * std::pow(r, 4);
    for (std::size_t i = 0; i < sphere.size(); ++i) {
      const auto node = sphere.Node(i);
      for (int m = 0; m < 5; ++m) y[m] = r * node[m];
      terms.push_back(jac * sphere.weights[i] * g(y));
    }
  }
  return {PairwiseSum(terms), terms.size()};
}

}  // namespace

LieValue SuGenerator(int a) {
  const Complex i(0.0, 1.0);
  LieValue sigma;
  switch (a) {
    case 0:
      sigma << 0, 1, 1, 0;
      break;
    case 1:
      sigma << 0, -i, i, 0;
      break;
    case 2:
      sigma << 1, 0, 0, -1;
      break;
    default:
      throw InvalidInput("su(2) generator index out of range");
  }
  return -0.5 * i * sigma;
}

double EtaBar(int a, int mu, int nu) {
  if (mu < 3 && nu < 3) return LeviCivita({a, mu, nu});
  if (nu == 3 && mu < 3) return mu == a ? -1.0 : 0.0;
  if (mu == 3 && nu < 3) return nu == a ? 1.0 : 0.0;
  return 0.0;
}

double LieResidual(const LieValue& x) {
  return std::max(Frobenius(x + x.adjoint()), std::abs(x.trace()));
}

std::vector<LieValue> BpstPotential(const Point& x) {
  if (x.size() != 4) throw InvalidInput("instanton chart points have four coordinates");
  const double scale = 2.0 / (1.0 + SquaredNorm(x));
  std::vector<LieValue> a(4, LieValue::Zero());
  for (int mu = 0; mu < 4; ++mu) {
    for (int g = 0; g < 3; ++g) {
      double c = 0;
      for (int nu = 0; nu < 4; ++nu) c += EtaBar(g, mu, nu) * x[nu];
      a[mu] += scale * c * SuGenerator(g);
    }
  }
  return a;
}

GaugeSample BpstConnection(const Point& x) {
  GaugeSample s;
  s.point = x;
  s.a = BpstPotential(x);
  const double q = 1.0 + SquaredNorm(x);
  const double scale = -4.0 / (q * q);
  s.f.assign(16, LieValue::Zero());
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      for (int g = 0; g < 3; ++g) s.F(mu, nu) += scale * EtaBar(g, mu, nu) * SuGenerator(g);
    }
  }
  s.metric_factor = 2.0 / q;
  return s;
}

std::vector<LieValue> CurvatureByFiniteDifferences(const PotentialFn& potential, const Point& x, double h) {
  const int n = static_cast<int>(x.size());
  const std::vector<LieValue> a = potential(x);
  // d_mu A_nu at steps h and h/2, combined as (4 D(h/2) - D(h)) / 3.
  std::vector<LieValue> d(n * n, LieValue::Zero());
  for (int mu = 0; mu < n; ++mu) {
    std::vector<LieValue> coarse, fine;
    for (double step : {h, 0.5 * h}) {
      Point xp = x, xm = x;
      xp[mu] += step;
      xm[mu] -= step;
      const std::vector<LieValue> ap = potential(xp), am = potential(xm);
      std::vector<LieValue>& out = step == h ? coarse : fine;
      for (int nu = 0; nu < n; ++nu) out.push_back((ap[nu] - am[nu]) / (2.0 * step));
    }
    for (int nu = 0; nu < n; ++nu) d[mu * n + nu] = (4.0 * fine[nu] - coarse[nu]) / 3.0;
  }
  std::vector<LieValue> f(n * n);
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = 0; nu < n; ++nu) {
      f[mu * n + nu] = d[mu * n + nu] - d[nu * n + mu] + a[mu] * a[nu] - a[nu] * a[mu];
    }
  }
  return f;
}

double CurvatureDistance(const std::vector<LieValue>& f, const std::vector<LieValue>& g) {
  double worst = 0;
  for (std::size_t i = 0; i < f.size(); ++i) worst = std::max(worst, Frobenius(f[i] - g[i]));
  return worst;
}

std::vector<LieValue> HodgeStar4(const GaugeSample& s) {
  std::vector<LieValue> star(16, LieValue::Zero());
  for (const Permutation& p : Permutations4()) {
    const auto& i = p.index;
    star[i[0] * 4 + i[1]] += 0.5 * p.sign * s.F(i[2], i[3]);
  }
  return star;
}

double AsdResidual(const GaugeSample& s) {
  const std::vector<LieValue> star = HodgeStar4(s);
  double worst = 0;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) worst = std::max(worst, Frobenius(star[mu * 4 + nu] + s.F(mu, nu)));
  }
  return worst;
}

double NormSquared(const GaugeSample& s, double c) {
  double total = 0;
  for (int i = 0; i < s.dim(); ++i) {
    for (int j = i + 1; j < s.dim(); ++j) total -= (s.F(i, j) * s.F(i, j)).trace().real();
  }
  return c * total;
}

double ChernDensity(const GaugeSample& s) {
  double total = 0;
  for (const Permutation& p : Permutations4()) {
    const auto& i = p.index;
    total += p.sign * (s.F(i[0], i[1]) * s.F(i[2], i[3])).trace().real();
  }
  return 0.25 * total;
}

double CalibrateNorm(const Point& reference) {
  const GaugeSample s = BpstConnection(reference);
  return ChernDensity(s) / NormSquared(s);
}

double GaugeRotationChange(const GaugeSample& s, const Eigen::Matrix2cd& g) {
  GaugeSample rotated = s;
  const Eigen::Matrix2cd inverse = g.adjoint();  // g is unitary
  for (LieValue& f : rotated.f) f = g * f * inverse;
  return NormSquared(rotated) - NormSquared(s);
}

IntegralResult ChernIntegral(int order, double tolerance) {
  return Converged(
      [](int n) { return FlatPolarIntegral([](const Point& x) { return ChernDensity(BpstConnection(x)); }, n); },
      order, tolerance, "Chern integral");
}

IntegralResult FlatEnergy(int order, double tolerance) {
  return Converged(
      [](int n) { return FlatPolarIntegral([](const Point& x) { return NormSquared(BpstConnection(x)); }, n); },
      order, tolerance, "flat energy");
}

double SphereEnergyDensity(const Point& xi, double c) {
  const GaugeSample s = BpstConnection(ChartPoint(xi));
  return NormSquared(s, c) / std::pow(s.metric_factor, 4);
}

double SphereChartEnergy(int order, double c) {
  const SphereQuadrature q = GaussProductQuadrature(5, order);
  std::vector<double> terms(q.size());
  Point xi(5);
  for (std::size_t i = 0; i < q.size(); ++i) {
    const auto node = q.Node(i);
    std::copy(node.begin(), node.end(), xi.begin());
    terms[i] = q.weights[i] * SphereEnergyDensity(xi, c);
  }
  return PairwiseSum(terms);
}

std::vector<LieValue> RadialPullbackPotential(const Point& y) {
  const double r = Norm(y);
  Point xi(5);
  for (int i = 0; i < 5; ++i) xi[i] = y[i] / r;
  const std::vector<LieValue> a = BpstPotential(ChartPoint(xi));
  const std::array<double, 20> j = PullbackJacobian(y);
  std::vector<LieValue> out(5, LieValue::Zero());
  for (int i = 0; i < 5; ++i) {
    for (int m = 0; m < 4; ++m) out[i] += j[m * 5 + i] * a[m];
  }
  return out;
}

GaugeSample RadialPullback(const Point& y) {
  CheckBallPoint(y);
  const double r = Norm(y);
  Point xi(5);
  for (int i = 0; i < 5; ++i) xi[i] = y[i] / r;
  const GaugeSample flat = BpstConnection(ChartPoint(xi));
  const std::array<double, 20> j = PullbackJacobian(y);
  GaugeSample s;
  s.point = y;
  s.a = RadialPullbackPotential(y);
  s.f.assign(25, LieValue::Zero());
  for (int i = 0; i < 5; ++i) {
    for (int k = i + 1; k < 5; ++k) {
      LieValue v = LieValue::Zero();
      for (int m = 0; m < 4; ++m) {
        for (int n = 0; n < 4; ++n) {
          const double c = j[m * 5 + i] * j[n * 5 + k];
          if (c != 0) v += c * flat.F(m, n);
        }
      }
      s.F(i, k) = v;
      s.F(k, i) = -v;
    }
  }
  return s;
}

double OmegaAsdResidual(const GaugeSample& s) {
  const double r = Norm(s.point);
  Point omega(5);
  for (int i = 0; i < 5; ++i) omega[i] = s.point[i] / r;
  double worst = 0;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      for (int k = j + 1; k < 5; ++k) {
        LieValue wedge = s.F(i, j) * omega[k] + s.F(j, k) * omega[i] + s.F(k, i) * omega[j];
        LieValue star = LieValue::Zero();
        for (int l = 0; l < 5; ++l) {
          for (int m = 0; m < 5; ++m) {
            const int e = LeviCivita({i, j, k, l, m});
            if (e) star += 0.5 * e * s.F(l, m);
          }
        }
        worst = std::max(worst, Frobenius(wedge + star));
      }
    }
  }
  return worst;
}

double RadialContraction(const GaugeSample& s) {
  const double r = Norm(s.point);
  double worst = 0;
  for (int i = 0; i < s.dim(); ++i) {
    LieValue v = LieValue::Zero();
    for (int j = 0; j < s.dim(); ++j) v += s.F(i, j) * (s.point[j] / r);
    worst = std::max(worst, Frobenius(v));
  }
  return worst;
}

Point ChernDual(const GaugeSample& s) {
  Point x(5, 0.0);
  for (const Permutation& p : Permutations5()) {
    const auto& i = p.index;
    x[i[0]] += 0.25 * p.sign * (s.F(i[1], i[2]) * s.F(i[3], i[4])).trace().real();
  }
  return x;
}

double ChernFlux(double radius, int order) {
  if (!(radius > 0 && radius <= 1)) throw InvalidInput("flux radius must lie in (0, 1]");
  const SphereQuadrature q = GaussProductQuadrature(5, order);
  std::vector<double> terms(q.size());
  Point y(5);
  for (std::size_t i = 0; i < q.size(); ++i) {
    const auto node = q.Node(i);
    for (int k = 0; k < 5; ++k) y[k] = radius * node[k];
    const Point x = ChernDual(RadialPullback(y));
    double normal = 0;
    for (int k = 0; k < 5; ++k) normal += x[k] * node[k];
    terms[i] = q.weights[i] * normal;
  }
  return std::pow(radius, 4) * PairwiseSum(terms);
}

RadialEnergyResult RadialEnergy(int order, double tolerance, double c) {
  RadialEnergyResult out;
  out.energy = Converged(
      [c](int n) { return BallPolarIntegral([c](const Point& y) { return NormSquared(RadialPullback(y), c); }, n); },
      order, tolerance, "radial energy");
  out.dual_mass = Converged(
      [](int n) { return BallPolarIntegral([](const Point& y) { return Norm(ChernDual(RadialPullback(y))); }, n); },
      order, tolerance, "dual field mass");
  return out;
}

}  // namespace ymcert
