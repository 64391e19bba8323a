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
#ifndef WEILRES_FACTOR_HPP
#define WEILRES_FACTOR_HPP

#include <utility>
#include <vector>

#include "weilres/poly.hpp"

namespace weilres {

// Largest degree the rational factorization engine accepts.
inline constexpr int kFactorDegreeCap = 48;

struct QFactorization {
  Rat content;                                // f = content * prod fac^mult
  std::vector<std::pair<Poly, int>> factors;  // monic irreducible over Q,
                                              // ordered by degree then
                                              // coefficients
};

// Exact factorization over Q: squarefree decomposition, factorization mod
// a good small prime, Hensel lifting to the Mignotte bound, subset
// recombination.  Deterministic; the re-expanded product is verified
// before returning.
QFactorization factor_over_Q(const Poly& f);

bool is_irreducible_over_Q(const Poly& f);

}  // namespace weilres

#endif  // WEILRES_FACTOR_HPP
