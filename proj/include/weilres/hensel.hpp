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
#ifndef WEILRES_HENSEL_HPP
#define WEILRES_HENSEL_HPP

#include <vector>

#include "weilres/modp.hpp"

namespace weilres {

// Lift a factorization of the monic integer polynomial F from mod p to
// mod `target` (a power of p).  `factors_mod_p` must be monic and pairwise
// coprime mod p with product congruent to F mod p; the factors themselves
// need not be irreducible or squarefree.  Returns the lifted factors,
// monic mod target, in the same order.
std::vector<ZPoly> hensel_lift_monic(const ZPoly& F,
                                     const std::vector<ZPoly>& factors_mod_p,
                                     const Int& p, const Int& target);

}  // namespace weilres

#endif  // WEILRES_HENSEL_HPP
