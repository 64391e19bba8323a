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
#include "weilres/curve_oracle.hpp"

#include <vector>

#include "weilres/errors.hpp"
#include "weilres/factor.hpp"

namespace weilres {

EllipticCurveParams::EllipticCurveParams(const Int& p_in, const Int& a4_in,
                                         const Int& a6_in)
    : p(p_in), a4(a4_in % p_in), a6(a6_in % p_in) {
  if (p < 5 || !is_probable_prime(p))
    throw InvalidInput("curve oracle needs a prime p >= 5");
  if (p > kPointCountPrimeCap)
    throw UnsupportedDegree("point counting capped at p <= 50000");
  if (sgn(a4) < 0) a4 += p;
  if (sgn(a6) < 0) a6 += p;
  Int disc = (4 * a4 * a4 * a4 + 27 * a6 * a6) % p;
  if (disc == 0)
    throw SingularCurve("4 a4^3 + 27 a6^2 = 0 mod p");
}

PointCount count_points(const EllipticCurveParams& E) {
  unsigned long p = E.p.get_ui();
  unsigned long a4 = E.a4.get_ui();
  unsigned long a6 = E.a6.get_ui();
  // quadratic residue table
  std::vector<char> is_square(p, 0);
  for (unsigned long u = 0; u < p; ++u) is_square[(u * u) % p] = 1;
  unsigned long affine = 0;
  for (unsigned long x = 0; x < p; ++x) {
    unsigned long rhs = ((x * x % p) * x % p + a4 * x % p + a6) % p;
    if (rhs == 0)
      affine += 1;
    else if (is_square[rhs])
      affine += 2;
  }
  PointCount pc;
  pc.count = Int(affine) + 1;
  pc.trace = E.p + 1 - pc.count;
  if (pc.trace * pc.trace > 4 * E.p)
    throw ConsistencyError("point count violates the Hasse bound");
  return pc;
}

Poly frobenius_power_charpoly(const Int& t, const Int& p, int n) {
  if (n < 1) throw InvalidInput("frobenius_power_charpoly needs n >= 1");
  if (t * t > 4 * p) throw InvalidInput("trace violates the Hasse bound");
  Int s_prev(2), s_cur = t;
  for (int i = 1; i < n; ++i) {
    Int s_next = t * s_cur - p * s_prev;
    s_prev = s_cur;
    s_cur = s_next;
  }
  return Poly{Rat(pow_int(p, n)), Rat(-s_cur), Rat(1)};
}

BaseChange base_change_class(const Int& t, const Int& p, int n) {
  Poly chi = frobenius_power_charpoly(t, p, n);
  Int s = -num(chi.coeff(1));
  Int qn = pow_int(p, n);
  BaseChange bc{chi, 1};
  if (s * s == 4 * qn) {
    // chi = (T - s/2)^2: rational Frobenius, supersingular square case
    bc.minpoly = Poly{Rat(-s / 2), Rat(1)};
  }
  IsogenyClass cls = isogeny_class(WeilNumber(bc.minpoly, p, n));
  bc.m_A = cls.m;
  return bc;
}

Decomposition oracle_decompose_from_trace(const Int& t, const Int& p, int n) {
  if (n < 1 || n > kOracleExtensionCap)
    throw UnsupportedDegree("oracle supports 1 <= n <= 12");
  BaseChange bc = base_change_class(t, p, n);
  Poly chi_A{Rat(1)};
  for (int i = 0; i < bc.m_A; ++i) chi_A = chi_A * bc.minpoly;
  Poly chi_W = chi_substitute(chi_A, n);

  Decomposition dec;
  dec.provenance = Provenance::charpoly_oracle;
  for (auto& [h, c] : factor_over_Q(chi_W).factors) {
    std::optional<IsogenyClass> cls;
    try {
      cls = isogeny_class(WeilNumber(h, p, 1));
    } catch (const InvalidWeil&) {
      throw ConsistencyError("oracle factor is not a Weil polynomial over p");
    }
    if (c % cls->m != 0)
      throw MultiplicityNotIntegral("oracle exponent not divisible by Brauer order");
    dec.components.push_back({*cls, c / cls->m});
  }
  if (dec.total_frobenius_degree() != 2 * n)
    throw ConsistencyError("oracle decomposition dimensions do not add up");
  return dec;
}

Decomposition oracle_decompose(const EllipticCurveParams& E, int n) {
  return oracle_decompose_from_trace(count_points(E).trace, E.p, n);
}

}  // namespace weilres
