/* Copyright (C) 2026 The weilres authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License"); you may
 * not use this file except in compliance with the License. You may obtain
 * a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef WEILRES_ERRORS_HPP
#define WEILRES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace weilres {

// Base class of all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-domain input (bad polynomial text, zero input, ...).
struct InvalidInput : Error {
  using Error::Error;
};

// Input exceeds a documented degree or size limit.
struct UnsupportedDegree : Error {
  using Error::Error;
};

// A polynomial required to be irreducible over Q is not.
struct NotIrreducible : Error {
  using Error::Error;
};

// Not a fundamental discriminant of an imaginary quadratic field.
struct NotFundamental : Error {
  using Error::Error;
};

// The minimal polynomial is not a Weil number for the given q.
struct InvalidWeil : Error {
  using Error::Error;
};

// Discriminant of a short Weierstrass model vanishes mod p.
struct SingularCurve : Error {
  using Error::Error;
};

// Skew elements over distinct group actions were combined.
struct ActionMismatch : Error {
  using Error::Error;
};

// Supplied elements are not a complete orthogonal idempotent system.
struct NotIdempotentSystem : Error {
  using Error::Error;
};

// The p-adic engine ran out of working precision (or met a cluster shape
// it cannot resolve) before the splitting data stabilised.
struct PrecisionExhausted : Error {
  using Error::Error;
};

// Internal cross-check failed.  These indicate a bug, never bad input.
struct ConsistencyError : Error {
  using Error::Error;
};

// A charpoly exponent was not divisible by the Brauer order of its class.
struct MultiplicityNotIntegral : ConsistencyError {
  using ConsistencyError::ConsistencyError;
};

}  // namespace weilres

#endif  // WEILRES_ERRORS_HPP
