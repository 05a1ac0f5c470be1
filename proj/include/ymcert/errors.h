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

#ifndef YMCERT_ERRORS_H_
#define YMCERT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ymcert {

// Malformed or inadmissible input (bad JSON, unknown vertex, invalid field).
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an algorithm does not hold for the input.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant failed. Always a bug in this library.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The input admits no object with the requested property (for instance an
// X-graph whose boundary has mixed-sign edges and no saturating flow).
class NoSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Successive quadrature refinements disagree above the requested tolerance.
class QuadratureNotConverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ymcert

#endif  // YMCERT_ERRORS_H_
