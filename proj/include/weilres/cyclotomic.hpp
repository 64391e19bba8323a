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
#ifndef WEILRES_CYCLOTOMIC_HPP
#define WEILRES_CYCLOTOMIC_HPP

#include <vector>

#include "weilres/poly.hpp"

namespace weilres {

std::vector<int> divisors_of(int n);
int euler_phi(int n);

// d-th cyclotomic polynomial (monic, integer, degree phi(d)).
Poly cyclotomic(int d);

// Is disc a fundamental discriminant of an imaginary quadratic field?
bool is_fundamental_discriminant(const Int& disc);

// Q(sqrt(disc)) inside Q(zeta_d), decided by the conductor criterion
// |disc| divides d.  disc must be a fundamental imaginary discriminant.
bool quad_in_cyclotomic(const Int& disc, int d);

// Fundamental discriminant of the quadratic field Q(sqrt(d)), d < 0.
Int fundamental_discriminant(const Int& d);

}  // namespace weilres

#endif  // WEILRES_CYCLOTOMIC_HPP
