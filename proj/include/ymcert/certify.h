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

#ifndef YMCERT_CERTIFY_H_
#define YMCERT_CERTIFY_H_

#include <string>
#include <vector>

#include "ymcert/arc_measure.h"
#include "ymcert/json_io.h"
#include "ymcert/rational.h"

namespace ymcert {

struct CertifyOptions {
  double tolerance = 1e-9;  // for every floating-point link
  int order = 16;           // sphere rule for the normalized chord integral
};

// One inequality lhs >= rhs of the chain, slack = lhs - rhs.
struct ChainLink {
  std::string name;
  double lhs = 0;
  double rhs = 0;
  double slack = 0;
  bool holds = false;  // slack >= -tolerance
};

struct Certificate {
  std::string digest;  // FNV-1a of the canonical field JSON
  double tolerance = 1e-9;
  std::string verdict;  // optimal-consistent, strictly-suboptimal, invalid-input
  std::string error;    // set for invalid input

  int dim = 0;
  std::size_t charges = 0;
  std::size_t arcs = 0;
  double mass = 0;

  // Saturating X-flow of the field's graph.
  Rational flow_value = 0;
  VertexId sink = 0;
  Point sink_point;
  int cut_steps = 0;
  int zeroflow_violations = 0;
  int backtracks = 0;

  double reweighted_mass = 0;
  std::size_t paths = 0;
  int cycles_cancelled = 0;
  double cancelled_mass = 0;
  double path_mass = 0;  // sum of weight times length over recomposed paths
  double chord_bound = 0;

  // Boundary starts of the recomposed paths.
  std::size_t atoms = 0;
  Rational atom_weight = 0;
  double atom_centroid_norm = 0;
  bool antipodal = false;  // closed under x -> -x with equal weights

  Point discrete_minimizer;
  double discrete_minimum = 0;  // min_a sum w |x - a| over the atoms
  double optimal_sink_bound = 0;  // chord integral at 0 over the sphere area
  std::string quadrature;

  std::vector<ChainLink> chain;
  double lower_bound = 0;  // the bound the verdict compares the mass with
  bool tight = false;      // mass within tolerance of lower_bound
};

// Runs validate, graph, saturating flow, reweighting by f / w,
// recomposition and the chord bounds. Throws InvalidInput for an invalid
// field and InvariantViolation when a step produces something the theory
// rules out.
Certificate Certify(const ChargedField& f, const CertifyOptions& options = {});

// The certificate written for unreadable or invalid input.
Certificate InvalidInputCertificate(const std::string& digest, const std::string& error, double tolerance);

Json CertificateToJson(const Certificate& c);

// Digest of the field in canonical JSON form.
std::string FieldDigest(const ChargedField& f);

}  // namespace ymcert

#endif  // YMCERT_CERTIFY_H_
