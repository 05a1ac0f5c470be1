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

// Charge-one SU(2) instanton on the four-sphere and its radial extension to
// the five-ball.
//
// Conventions. su(2) generators T_a = -(i/2) sigma_a, so -tr(T_a T_b) =
// delta_ab / 2. In the flat chart x of R^4 (stereographic from the south
// pole, x = xi' / (1 + xi_5)) the potential and curvature are
//   A_mu = 2 etabar_{a mu nu} x_nu / (1 + |x|^2) T_a,
//   F_mu nu = -4 etabar_{a mu nu} / (1 + |x|^2)^2 T_a,
// with etabar_{abc} = eps_abc, etabar_{a mu 4} = -delta_{a mu},
// etabar_{a 4 nu} = delta_{a nu}. With eps_1234 = +1 and
// (*F)_mu nu = (1/2) eps_mu nu rho sigma F_rho sigma the curvature is
// anti-self-dual, and tr(F ^ F) = (1/4) eps tr(F F) d^4x is positive.
// Norms are |F|^2 = c sum_{i<j} -tr(F_ij F_ij) with the calibrated c.

#ifndef YMCERT_INSTANTON_H_
#define YMCERT_INSTANTON_H_

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Core>

#include "ymcert/arc_measure.h"

namespace ymcert {

using LieValue = Eigen::Matrix2cd;

// T_a for a in {0, 1, 2}.
LieValue SuGenerator(int a);

// etabar_{a mu nu} with zero-based indices.
double EtaBar(int a, int mu, int nu);

// Potential and curvature at a point of a chart.
struct GaugeSample {
  Point point;
  std::vector<LieValue> a;  // one component per coordinate
  std::vector<LieValue> f;  // dim * dim, row-major, antisymmetric
  double metric_factor = 1;  // conformal factor Omega of the sphere metric

  int dim() const { return static_cast<int>(point.size()); }
  const LieValue& F(int i, int j) const { return f[i * dim() + j]; }
  LieValue& F(int i, int j) { return f[i * dim() + j]; }
};

// Max Frobenius norms of X + X^dagger and of tr X.
double LieResidual(const LieValue& x);

std::vector<LieValue> BpstPotential(const Point& x);

// Closed-form potential and curvature in the flat chart; metric_factor is
// 2 / (1 + |x|^2).
GaugeSample BpstConnection(const Point& x);

using PotentialFn = std::function<std::vector<LieValue>(const Point&)>;

// F = dA + A ^ A with dA from central differences, Richardson-extrapolated
// from steps h and h/2.
std::vector<LieValue> CurvatureByFiniteDifferences(const PotentialFn& potential, const Point& x, double h = 1e-4);

// Largest Frobenius norm of a componentwise difference of two curvatures.
double CurvatureDistance(const std::vector<LieValue>& f, const std::vector<LieValue>& g);

// (*F)_mu nu = (1/2) eps_mu nu rho sigma F_rho sigma in four dimensions.
std::vector<LieValue> HodgeStar4(const GaugeSample& s);

// max |(*F + F)_mu nu|.
double AsdResidual(const GaugeSample& s);

// sum_{i<j} -tr(F_ij F_ij), times c.
double NormSquared(const GaugeSample& s, double c = 1.0);

// Coefficient of d^4x in tr(F ^ F): (1/4) eps tr(F_mu nu F_rho sigma).
double ChernDensity(const GaugeSample& s);

// c with ChernDensity = c * sum -tr(F^2) at the reference point.
double CalibrateNorm(const Point& reference);

// |F|^2 after the constant gauge rotation F -> g F g^{-1}, minus |F|^2, for
// g in SU(2).
double GaugeRotationChange(const GaugeSample& s, const Eigen::Matrix2cd& g);

struct IntegralResult {
  double value = 0;        // at the requested order
  double coarse_value = 0;  // at half the order
  double relative_change = 0;
  std::size_t nodes = 0;
};

// int_{R^4} tr(F ^ F) from a Gauss-Legendre rule of the given order in
// s = r / (1 + r) times a product rule on S^3 of order max(8, order / 4).
// Throws QuadratureNotConverged if halving the order moves the value by more
// than `tolerance` relatively.
IntegralResult ChernIntegral(int order, double tolerance);

// int_{R^4} |F|^2 d^4x with the same rule.
IntegralResult FlatEnergy(int order, double tolerance);

// int_{S^4} |F|^2 in the round metric, from sphere nodes mapped through the
// chart: |F|^2_S = Omega^{-4} |F|^2_flat. Product rule of the given order.
double SphereChartEnergy(int order, double c = 1.0);

// |F|^2 of the round sphere metric at a unit vector xi of R^5.
double SphereEnergyDensity(const Point& xi, double c = 1.0);

// Pullback of the instanton along y -> y / |y| to B^5 minus the origin.
// Throws InvalidInput unless 0 < |y| <= 1.
GaugeSample RadialPullback(const Point& y);

// Potential of the pullback, for finite-difference checks.
std::vector<LieValue> RadialPullbackPotential(const Point& y);

// max over i<j<k of |(F ^ dr + *F)_ijk| with (*F)_ijk = (1/2) eps_ijklm F_lm.
double OmegaAsdResidual(const GaugeSample& s);

// max over i of |sum_j F_ij y_j / |y||.
double RadialContraction(const GaugeSample& s);

// X_i = (1/4) eps_ijklm tr(F_jk F_lm): the vector field dual to tr(F ^ F).
Point ChernDual(const GaugeSample& s);

// Flux of ChernDual through the sphere of the given radius, from a product
// rule of the given order on S^4.
double ChernFlux(double radius, int order);

struct RadialEnergyResult {
  IntegralResult energy;     // int_{B^5} |F_rad|^2
  IntegralResult dual_mass;  // int_{B^5} |X|
};

// Both integrals over B^5 in polar coordinates: Gauss-Legendre of order
// max(4, order / 4) in r times a product rule of order max(8, order / 8) on
// S^4. Throws QuadratureNotConverged as ChernIntegral does.
RadialEnergyResult RadialEnergy(int order, double tolerance, double c = 1.0);

}  // namespace ymcert

#endif  // YMCERT_INSTANTON_H_
