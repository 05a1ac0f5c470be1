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

#ifndef YMCERT_GENERATORS_H_
#define YMCERT_GENERATORS_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ymcert/arc_measure.h"

namespace ymcert {

// Draws from std::mt19937_64 are mapped to reals and integers here rather
// than through the <random> distributions, whose outputs differ between
// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double Uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  // Uniform integer in [lo, hi].
  int Int(int lo, int hi) { return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  double Gaussian();
  Point UnitVector(int dim);
  Point InBall(int dim, double radius);

 private:
  std::mt19937_64 engine_;
};

// `pairs` unit vectors followed by their negations.
std::vector<Point> AntipodalSpherePoints(int dim, int pairs, std::uint64_t seed);

// 100 radii from antipodally paired sphere points to a +1 charge at the
// origin, weight 1/100 each. The sample points do not depend on any seed.
ChargedField RadialField(int dim = 5);

// The radial field with every radius bent through an off-axis midpoint, so
// each arc is longer than its chord.
ChargedField DetourField(std::uint64_t seed, int dim = 5);

// Random charges joined by polylines. Boundary weight arrives in equal atoms
// at antipodal point pairs; every other unit of flux runs from a negative to a
// positive charge. Valid by construction.
ChargedField MultiChargeRandomField(std::uint64_t seed, int dim = 5);

// Dispatches on "radial", "detour" or "multi-charge-random"; throws
// InvalidInput for any other kind.
ChargedField GenerateField(const std::string& kind, std::uint64_t seed, int dim = 5);

}  // namespace ymcert

#endif  // YMCERT_GENERATORS_H_
