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

#include "ymcert/instanton_check.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ymcert/errors.h"
#include "ymcert/generators.h"
#include "ymcert/instanton.h"
#include "ymcert/sphere.h"

namespace ymcert {
namespace {

constexpr double kEightPiSquared = 8 * std::numbers::pi * std::numbers::pi;
constexpr double kNoLimit = std::numeric_limits<double>::infinity();

Json IntegralJson(const IntegralResult& r) {
  return {{"value", r.value},
          {"coarse_value", r.coarse_value},
          {"relative_change", r.relative_change},
          {"nodes", r.nodes},
          {"over_8pi2", r.value / kEightPiSquared}};
}

double RelativeError(double value, double target) { return std::abs(value - target) / std::abs(target); }

}  // namespace

bool InstantonReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const InstantonCheckLine& c) { return c.passed; });
}

const InstantonCheckLine& InstantonReport::Check(const std::string& name) const {
  for (const InstantonCheckLine& c : checks) {
    if (c.name == name) return c;
  }
  throw InvalidInput("no check named " + name);
}

InstantonReport RunInstantonCheck(int order, int samples, std::uint64_t seed) {
  if (order < 8) throw InvalidInput("order must be at least 8");
  if (samples < 1) throw InvalidInput("samples must be positive");
  InstantonReport report;
  auto add = [&report](const std::string& name, double value, double threshold) {
    report.checks.push_back({name, value, threshold, value < threshold});
  };

  const Point reference{0.3, -0.2, 0.1, 0.5};
  const double c = CalibrateNorm(reference);

  Rng rng(seed);
  double asd = 0, lie = 0, norm_identity = 0, pointwise_excess = 0, fd = 0;
  for (int k = 0; k < samples; ++k) {
    Point x(4);
    for (double& v : x) v = 1.5 * rng.Gaussian();
    const GaugeSample s = BpstConnection(x);
    asd = std::max(asd, AsdResidual(s));
    for (const LieValue& v : s.f) lie = std::max(lie, LieResidual(v));
    const double norm = NormSquared(s, c);
    const double chern = ChernDensity(s);
    norm_identity = std::max(norm_identity, std::abs(chern - norm) / norm);
    pointwise_excess = std::max(pointwise_excess, std::abs(chern) / norm - 1);
    if (k < 20) fd = std::max(fd, CurvatureDistance(CurvatureByFiniteDifferences(BpstPotential, x), s.f));
  }
  double omega_asd = 0, contraction = 0, dual_vs_radial = 0, dual_vs_energy = 0;
  for (int k = 0; k < samples; ++k) {
    Point y = rng.InBall(5, 1.0);
    if (Norm(y) < 0.05) continue;
    const GaugeSample s = RadialPullback(y);
    const double norm = NormSquared(s, c);
    omega_asd = std::max(omega_asd, OmegaAsdResidual(s) / std::max(1.0, norm));
    contraction = std::max(contraction, RadialContraction(s) / std::max(1.0, norm));
    const Point dual = ChernDual(s);
    dual_vs_energy = std::max(dual_vs_energy, std::abs(Norm(dual) - norm) / norm);
    const double r = Norm(y);
    double worst = 0;
    for (int i = 0; i < 5; ++i) {
      worst = std::max(worst, std::abs(dual[i] / kEightPiSquared - y[i] / (SphereArea(5) * std::pow(r, 5))));
    }
    dual_vs_radial = std::max(dual_vs_radial, worst / (Norm(dual) / kEightPiSquared));
  }

  add("asd_residual", asd, 1e-10);
  add("lie_algebra_residual", lie, 1e-12);
  add("chern_density_equals_norm", norm_identity, 1e-10);
  add("pointwise_chern_bound_excess", pointwise_excess, 1e-12);
  add("curvature_vs_finite_differences", fd, 1e-6);
  add("pullback_omega_asd_residual", omega_asd, 1e-8);
  add("pullback_radial_contraction", contraction, 1e-12);
  add("chern_dual_norm_equals_energy", dual_vs_energy, 1e-10);
  add("chern_dual_over_8pi2_equals_radial_field", dual_vs_radial, 1e-10);

  const IntegralResult chern = ChernIntegral(order, kNoLimit);
  const IntegralResult flat = FlatEnergy(order, kNoLimit);
  const double sphere = SphereChartEnergy(16, c);
  add("chern_integral_equals_8pi2", RelativeError(chern.value, kEightPiSquared), 1e-3);
  add("chern_integral_converged", chern.relative_change, 1e-3);
  add("flat_and_sphere_chart_energies_agree", RelativeError(flat.value, sphere), 1e-3);

  const int flux_order = std::max(8, order / 8);
  Json fluxes = Json::array();
  for (double radius : {0.2, 0.5, 0.9}) {
    const double flux = ChernFlux(radius, flux_order);
    fluxes.push_back({{"radius", radius}, {"value", flux}, {"over_8pi2", flux / kEightPiSquared}});
    add("chern_flux_at_radius_" + Json(radius).dump(), RelativeError(flux, kEightPiSquared), 1e-3);
  }

  const RadialEnergyResult radial = RadialEnergy(order, kNoLimit, c);
  add("five_ball_energy_equals_8pi2", RelativeError(radial.energy.value, kEightPiSquared), 1e-3);
  add("five_ball_dual_mass_equals_8pi2", RelativeError(radial.dual_mass.value, kEightPiSquared), 1e-3);

  Json checks = Json::array();
  for (const InstantonCheckLine& l : report.checks) {
    checks.push_back({{"name", l.name}, {"value", l.value}, {"threshold", l.threshold}, {"passed", l.passed}});
  }
  report.json = {
      {"order", order},
      {"samples", samples},
      {"seed", seed},
      {"norm_calibration", {{"reference_point", reference}, {"c", c}}},
      {"pointwise",
       {{"asd_residual_max", asd},
        {"lie_algebra_residual_max", lie},
        {"chern_density_vs_norm_max_relative", norm_identity},
        {"curvature_vs_finite_differences_max", fd},
        {"pullback_omega_asd_residual_max", omega_asd},
        {"pullback_radial_contraction_max", contraction},
        {"chern_dual_vs_energy_max_relative", dual_vs_energy},
        {"chern_dual_vs_radial_field_max_relative", dual_vs_radial}}},
      {"chern_integral", IntegralJson(chern)},
      {"flat_energy", IntegralJson(flat)},
      {"sphere_chart_energy", {{"value", sphere}, {"over_8pi2", sphere / kEightPiSquared}}},
      {"chern_flux", {{"order", flux_order}, {"radii", fluxes}}},
      {"five_ball",
       {{"energy", IntegralJson(radial.energy)}, {"dual_mass", IntegralJson(radial.dual_mass)}}},
      {"normalizations",
       {{"eight_pi_squared", kEightPiSquared},
        {"chern_dual_mass", radial.dual_mass.value},
        {"radial_field_mass", radial.dual_mass.value / kEightPiSquared},
        {"radial_field_mass_closed_form", RadialFieldMass(5)}}},
      {"checks", checks},
      {"passed", report.passed()},
  };
  return report;
}

}  // namespace ymcert
