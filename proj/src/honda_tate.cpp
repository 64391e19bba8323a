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
#include "weilres/honda_tate.hpp"

#include "weilres/errors.hpp"
#include "weilres/factor.hpp"

namespace weilres {

namespace {

// Monic polynomial whose roots are beta = alpha + q/alpha over the roots
// alpha of g.  Computed from g mod (T^2 - x T + q): with g = A(x) T + B(x)
// there, the resultant is q A^2 + x A B + B^2 up to a constant.
Poly trace_polynomial(const Poly& g, const Int& q) {
  // T^k = u_k(x) T + v_k(x) with u_{k+1} = x u_k + v_k, v_{k+1} = -q u_k.
  Poly u(Rat(0)), v{Rat(1)};
  Poly A, B;
  Poly qq{Rat(q)};
  for (int k = 0; k <= g.degree(); ++k) {
    Rat c = g.coeff(k);
    if (c != 0) {
      A = A + u * c;
      B = B + v * c;
    }
    Poly nu = Poly::x() * u + v;
    Poly nv = -(u * Rat(q));
    u = nu;
    v = nv;
  }
  Poly P = (A * A) * Rat(q) + Poly::x() * A * B + B * B;
  if (P.degree() != g.degree())
    throw ConsistencyError("trace polynomial has unexpected degree");
  return P.monic();
}

// Even part: for even P (P(x) = C(x^2)), the polynomial C.
Poly even_part(const Poly& P) {
  std::vector<Rat> c;
  for (int i = 0; i <= P.degree(); ++i) {
    if (i % 2 == 1) {
      if (P.coeff(i) != 0) throw ConsistencyError("polynomial is not even");
      continue;
    }
    c.push_back(P.coeff(i));
  }
  return Poly(std::move(c));
}

}  // namespace

bool validate_weil(const Poly& minpoly, const Int& p, int a) {
  if (minpoly.is_zero() || !minpoly.is_monic() || !minpoly.has_integer_coeffs())
    throw InvalidInput("Weil validation expects a monic integer polynomial");
  if (a < 1) throw InvalidInput("exponent a must be positive");
  if (!is_probable_prime(p)) throw InvalidInput("p is not prime");
  int d = minpoly.degree();
  if (d < 1) return false;
  if (d > kFactorDegreeCap) throw UnsupportedDegree("validate_weil: degree > 48");

  Int q = pow_int(p, a);
  if (!is_irreducible_over_Q(minpoly)) return false;

  // Exceptional totally real Weil numbers: +-sqrt(q).
  if (a % 2 == 0) {
    Int r = pow_int(p, a / 2);
    if (minpoly == Poly{Rat(-r), Rat(1)} || minpoly == Poly{Rat(r), Rat(1)})
      return true;
  }
  if (minpoly == Poly{Rat(-q), Rat(0), Rat(1)}) return true;

  // Any other real root has modulus != sqrt(q).
  if (count_real_roots(minpoly) > 0) return false;

  Poly H = trace_polynomial(minpoly, q);
  Poly Hsf = squarefree_part(H);
  if (count_real_roots(Hsf) != Hsf.degree()) return false;

  // All beta real; demand beta^2 < 4q.  C has roots beta^2.
  Poly prod = Hsf * Hsf.scale_arg(Rat(-1));
  Poly C = squarefree_part(even_part(prod));
  Rat bound(4 * q);
  if (C.eval(bound) == 0) return false;
  return count_real_roots_above(C, bound) == 0;
}

WeilNumber::WeilNumber(const Poly& minpoly, const Int& p, int a)
    : minpoly_(minpoly), p_(p), a_(a) {
  if (!validate_weil(minpoly, p, a))
    throw InvalidWeil("not a Weil number for q = " + p.get_str() + "^" +
                      std::to_string(a));
}

IsogenyClass isogeny_class(const WeilNumber& w) {
  IsogenyClass cls{w, {}, 0, {}, 1, 0};
  cls.places = splitting_data(w.minpoly(), w.p());
  cls.real_places = count_real_roots(w.minpoly());

  // inv_v = v(pi) * f_v / a mod 1 at the finite places, 1/2 at real ones.
  std::vector<Rat> finite_invs;
  Int m_lcm(1);
  Rat total(0);
  for (const LocalPlace& pl : cls.places) {
    Rat inv = make_rat(Int(pl.v_gen) * pl.f, Int(w.a()));
    Int flo;
    mpz_fdiv_q(flo.get_mpz_t(), num(inv).get_mpz_t(), den(inv).get_mpz_t());
    inv -= Rat(flo);
    finite_invs.push_back(inv);
    m_lcm = lcm_int(m_lcm, den(inv));
    total += inv;
  }
  if (cls.real_places > 0) m_lcm = lcm_int(m_lcm, Int(2));
  total += make_rat(Int(cls.real_places), Int(2));
  if (!is_integer(total))
    throw ConsistencyError("local invariants violate Brauer reciprocity");

  cls.m = static_cast<int>(m_lcm.get_si());
  Int two_dim = m_lcm * w.degree();
  if (two_dim % 2 != 0) throw ConsistencyError("m * degree is odd");
  cls.dim = static_cast<int>(Int(two_dim / 2).get_si());

  // Canonical invariant listing.
  std::string p_str = w.p().get_str();
  bool single_finite = cls.places.size() == 1;
  for (size_t i = 0; i < cls.places.size(); ++i) {
    if (finite_invs[i] == 0) continue;
    std::string key = single_finite ? p_str : p_str + "#" + std::to_string(i + 1);
    cls.invariants.emplace_back(key, finite_invs[i]);
  }
  for (int i = 0; i < cls.real_places; ++i) {
    std::string key = cls.real_places == 1 ? "real" : "real#" + std::to_string(i + 1);
    cls.invariants.emplace_back(key, make_rat(Int(1), Int(2)));
  }
  if (cls.invariants.empty()) cls.invariants.emplace_back("all", Rat(0));
  return cls;
}

Poly char_poly_of_class(const IsogenyClass& c) {
  Poly out{Rat(1)};
  for (int i = 0; i < c.m; ++i) out = out * c.weil.minpoly();
  return out;
}

}  // namespace weilres
