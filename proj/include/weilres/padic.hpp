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
#ifndef WEILRES_PADIC_HPP
#define WEILRES_PADIC_HPP

#include <vector>

#include "weilres/poly.hpp"

namespace weilres {

// Largest field degree the splitting engine accepts.
inline constexpr int kSplittingDegreeCap = 12;

// One place of the field Q[x]/(g) above p.
struct LocalPlace {
  int e;      // ramification index
  int f;      // absolute residue degree
  int v_gen;  // normalized valuation of the residue class of x
};

// Splitting data of the rational prime p in Q[x]/(g): one entry per place,
// ordered by (e, f, v_gen).  g must be monic with integer coefficients and
// irreducible over Q; deg(g) <= 12.
//
// The engine reads everything off the p-adic factorization of g: factor
// mod p, Hensel-split into primary parts, then run phi-adic Newton
// polygons per part.  A segment whose residual polynomial is separable is
// final (Ore); a repeated linear residual factor triggers a refinement of
// phi and a re-run.  Repeated residual factors of degree >= 2 (which no
// input in this code base produces) abort with PrecisionExhausted rather
// than guess.
std::vector<LocalPlace> splitting_data(const Poly& g, const Int& p);

}  // namespace weilres

#endif  // WEILRES_PADIC_HPP
