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
#ifndef WEILRES_MODP_HPP
#define WEILRES_MODP_HPP

#include <utility>
#include <vector>

#include "weilres/rational.hpp"

namespace weilres {

// Dense polynomial with coefficients reduced into [0, m), lowest degree
// first, no leading zeros.  The modulus is passed explicitly; it is prime
// for the field operations and a prime power inside Hensel lifting.
using ZPoly = std::vector<Int>;

int zp_deg(const ZPoly& a);
void zp_trim(ZPoly& a);
ZPoly zp_reduce(const ZPoly& a, const Int& m);
bool zp_is_zero(const ZPoly& a);
ZPoly zp_one();

ZPoly zp_add(const ZPoly& a, const ZPoly& b, const Int& m);
ZPoly zp_sub(const ZPoly& a, const ZPoly& b, const Int& m);
ZPoly zp_mul(const ZPoly& a, const ZPoly& b, const Int& m);
ZPoly zp_mul_scalar(const ZPoly& a, const Int& s, const Int& m);
// Division by a monic divisor; valid for any modulus.
std::pair<ZPoly, ZPoly> zp_divmod_monic(const ZPoly& a, const ZPoly& b, const Int& m);

// Deterministic total order (degree, then coefficients from the top).
int zp_cmp(const ZPoly& a, const ZPoly& b);

// --- prime modulus ---
Int fp_inv(const Int& a, const Int& p);
std::pair<ZPoly, ZPoly> fp_divmod(const ZPoly& a, const ZPoly& b, const Int& p);
ZPoly fp_gcd_monic(const ZPoly& a, const ZPoly& b, const Int& p);
// g = gcd monic, u*a + v*b = g.
void fp_ext_gcd(const ZPoly& a, const ZPoly& b, const Int& p, ZPoly& g, ZPoly& u,
                ZPoly& v);
ZPoly fp_derivative(const ZPoly& a, const Int& p);
ZPoly fp_make_monic(const ZPoly& a, const Int& p);
ZPoly fp_powmod(const ZPoly& base, const Int& e, const ZPoly& mod, const Int& p);

// Full factorization into monic irreducibles with multiplicities,
// deterministically ordered.  Equal-degree splitting uses a fixed-seed
// generator, so results are reproducible run to run.
std::vector<std::pair<ZPoly, int>> fp_factor(const ZPoly& f, const Int& p);

// --- extension fields F_q, q = p^f ---
struct FqCtx {
  Int p;
  ZPoly modulus;  // monic irreducible of degree f over F_p
  int f;
  Int q;          // p^f
};

// Deterministic irreducible modulus of degree f.
FqCtx make_fq(const Int& p, int f);

using FqElem = ZPoly;              // residue mod ctx.modulus
using FqPoly = std::vector<FqElem>;

bool fq_is_zero(const FqElem& a);
FqElem fq_from_int(const FqCtx& ctx, const Int& a);
FqElem fq_reduce(const FqCtx& ctx, const ZPoly& a);
FqElem fq_add(const FqCtx& ctx, const FqElem& a, const FqElem& b);
FqElem fq_sub(const FqCtx& ctx, const FqElem& a, const FqElem& b);
FqElem fq_mul(const FqCtx& ctx, const FqElem& a, const FqElem& b);
FqElem fq_inv(const FqCtx& ctx, const FqElem& a);
FqElem fq_pow(const FqCtx& ctx, const FqElem& a, const Int& e);

int fqp_deg(const FqPoly& a);
void fqp_trim(FqPoly& a);
FqPoly fqp_one(const FqCtx& ctx);
FqPoly fqp_add(const FqCtx& ctx, const FqPoly& a, const FqPoly& b);
FqPoly fqp_sub(const FqCtx& ctx, const FqPoly& a, const FqPoly& b);
FqPoly fqp_mul(const FqCtx& ctx, const FqPoly& a, const FqPoly& b);
std::pair<FqPoly, FqPoly> fqp_divmod(const FqCtx& ctx, const FqPoly& a, const FqPoly& b);
FqPoly fqp_gcd_monic(const FqCtx& ctx, const FqPoly& a, const FqPoly& b);
FqPoly fqp_derivative(const FqCtx& ctx, const FqPoly& a);
FqPoly fqp_make_monic(const FqCtx& ctx, const FqPoly& a);
FqPoly fqp_powmod(const FqCtx& ctx, const FqPoly& base, const Int& e, const FqPoly& mod);

// Squarefree decomposition over F_q (handles p-th powers).
std::vector<std::pair<FqPoly, int>> fq_sqfree_decomposition(const FqCtx& ctx,
                                                            const FqPoly& f);
// Distinct-degree split of a squarefree monic polynomial: list of
// (degree d, product of all irreducible factors of degree d).
std::vector<std::pair<int, FqPoly>> fq_ddf(const FqCtx& ctx, const FqPoly& f);
// Roots in F_q of a polynomial that splits into distinct linear factors.
// Enumerates the field; q must stay small (throws PrecisionExhausted else).
std::vector<FqElem> fq_roots_of_split(const FqCtx& ctx, const FqPoly& f);

}  // namespace weilres

#endif  // WEILRES_MODP_HPP
