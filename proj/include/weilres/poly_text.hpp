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
#ifndef WEILRES_POLY_TEXT_HPP
#define WEILRES_POLY_TEXT_HPP

#include <string>

#include "weilres/poly.hpp"

namespace weilres {

// Text format shared by the CLI and JSON output: variable `x`, caret
// powers, optional `*`, integer or rational coefficients.
// Examples: "x^4 - 2*x + 5", "3/2*x^2 + 1".
Poly parse_poly(const std::string& text);

// Canonical rendering, highest degree first.  parse_poly(poly_to_string(f))
// round-trips exactly.
std::string poly_to_string(const Poly& f);
std::string poly_to_string(const Poly& f, const std::string& var);

}  // namespace weilres

#endif  // WEILRES_POLY_TEXT_HPP
