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
#ifndef WEILRES_FIELD_FACTOR_HPP
#define WEILRES_FIELD_FACTOR_HPP

#include <optional>
#include <utility>
#include <vector>

#include "weilres/number_field.hpp"

namespace weilres {

// Polynomial over a number field, lowest degree first, trimmed.
using NFPoly = std::vector<NFElement>;

int nfp_deg(const NFPoly& f);
void nfp_trim(NFPoly& f);
NFPoly nfp_from_rational(const NumberField& F, const Poly& f);
// All coefficients rational?  Then the rational image.
std::optional<Poly> nfp_to_rational(const NFPoly& f);
NFPoly nfp_add(const NumberField& F, const NFPoly& a, const NFPoly& b);
NFPoly nfp_sub(const NumberField& F, const NFPoly& a, const NFPoly& b);
NFPoly nfp_mul(const NumberField& F, const NFPoly& a, const NFPoly& b);
std::pair<NFPoly, NFPoly> nfp_divmod(const NumberField& F, const NFPoly& a,
                                     const NFPoly& b);
NFPoly nfp_div_exact(const NumberField& F, const NFPoly& a, const NFPoly& b);
NFPoly nfp_gcd_monic(const NumberField& F, const NFPoly& a, const NFPoly& b);
NFPoly nfp_derivative(const NumberField& F, const NFPoly& a);
NFPoly nfp_make_monic(const NumberField& F, const NFPoly& a);
NFPoly nfp_conj(const NumberField& F, const NFPoly& a);
// f(x + t)
NFPoly nfp_shift(const NumberField& F, const NFPoly& f, const NFElement& t);
NFElement nfp_eval(const NumberField& F, const NFPoly& f, const NFElement& x);
int nfp_cmp(const NFPoly& a, const NFPoly& b);
// x^n - alpha
NFPoly radical_poly(const NumberField& F, const NFElement& alpha, int n);

// Factorization over F with deg(F) <= 2 (norm-polynomial / Trager route
// behind the rational engine).  Factors are monic; the product of the
// factors equals f up to the unit lc(f).
std::vector<std::pair<NFPoly, int>> factor_over_field(const NumberField& F,
                                                      const NFPoly& f);

// A witness beta with beta^n = alpha, if one exists in F (deg(F) <= 2).
// Witnesses are verified by exact re-expansion before being returned.
std::optional<NFElement> is_nth_power(const NumberField& F, const NFElement& alpha,
                                      int n);

// A witness beta with alpha = -4 beta^4, if one exists in F.
std::optional<NFElement> is_minus4_fourth(const NumberField& F,
                                          const NFElement& alpha);

}  // namespace weilres

#endif  // WEILRES_FIELD_FACTOR_HPP
