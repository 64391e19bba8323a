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
#include "weilres/hensel.hpp"

#include "weilres/errors.hpp"

namespace weilres {

namespace {

// One quadratic step: from a factorization and Bezout data mod m to the
// same data mod m^2.  All polynomials monic where stated; f = g*h mod m,
// s*g + t*h = 1 mod m.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t,
                 const Int& m) {
  Int m2 = m * m;
  ZPoly e = zp_sub(zp_reduce(f, m2), zp_mul(g, h, m2), m2);
  auto [q, r] = zp_divmod_monic(zp_mul(s, e, m2), h, m2);
  ZPoly g1 = zp_add(zp_add(g, zp_mul(t, e, m2), m2), zp_mul(q, g, m2), m2);
  ZPoly h1 = zp_add(h, r, m2);

  ZPoly b = zp_sub(zp_add(zp_mul(s, g1, m2), zp_mul(t, h1, m2), m2), zp_one(), m2);
  auto [c, d] = zp_divmod_monic(zp_mul(s, b, m2), h1, m2);
  ZPoly s1 = zp_sub(s, d, m2);
  ZPoly t1 = zp_sub(zp_sub(t, zp_mul(t, b, m2), m2), zp_mul(c, g1, m2), m2);

  g = g1;
  h = h1;
  s = s1;
  t = t1;
}

}  // namespace

std::vector<ZPoly> hensel_lift_monic(const ZPoly& F,
                                     const std::vector<ZPoly>& factors_mod_p,
                                     const Int& p, const Int& target) {
  if (factors_mod_p.empty()) throw InvalidInput("no factors to lift");
  if (factors_mod_p.size() == 1) return {zp_reduce(F, target)};

  size_t half = factors_mod_p.size() / 2;
  std::vector<ZPoly> left(factors_mod_p.begin(), factors_mod_p.begin() + half);
  std::vector<ZPoly> right(factors_mod_p.begin() + half, factors_mod_p.end());

  ZPoly g = zp_one(), h = zp_one();
  for (const auto& f : left) g = zp_mul(g, f, p);
  for (const auto& f : right) h = zp_mul(h, f, p);

  ZPoly bez_g, s, t;
  fp_ext_gcd(g, h, p, bez_g, s, t);
  if (zp_deg(bez_g) != 0)
    throw ConsistencyError("Hensel factors are not coprime mod p");

  Int m = p;
  while (m < target) {
    hensel_step(F, g, h, s, t, m);
    m = m * m;
  }
  g = zp_reduce(g, target);
  h = zp_reduce(h, target);

  if (zp_cmp(zp_mul(g, h, target), zp_reduce(F, target)) != 0)
    throw ConsistencyError("Hensel lifting lost the factorization");

  std::vector<ZPoly> out = hensel_lift_monic(g, left, p, target);
  std::vector<ZPoly> rhs = hensel_lift_monic(h, right, p, target);
  out.insert(out.end(), rhs.begin(), rhs.end());
  return out;
}

}  // namespace weilres
