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

#ifndef YMCERT_INSTANTON_CHECK_H_
#define YMCERT_INSTANTON_CHECK_H_

#include <cstdint>
#include <string>
#include <vector>

#include "ymcert/json_io.h"

namespace ymcert {

struct InstantonCheckLine {
  std::string name;
  double value = 0;      // a residual or a relative error
  double threshold = 0;  // passes when value < threshold
  bool passed = false;
};

struct InstantonReport {
  std::vector<InstantonCheckLine> checks;
  Json json;  // every residual and integral, plus the checks
  bool passed() const;
  const InstantonCheckLine& Check(const std::string& name) const;
};

// Pointwise residuals at `samples` random points (seeded), the Chern
// integral and the flat energy at `order`, the sphere-chart energy, fluxes
// of the Chern dual at radii 0.2, 0.5 and 0.9, and the five-ball energy.
InstantonReport RunInstantonCheck(int order, int samples, std::uint64_t seed);

}  // namespace ymcert

#endif  // YMCERT_INSTANTON_CHECK_H_
