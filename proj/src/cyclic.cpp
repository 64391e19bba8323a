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
#include "weilres/cyclic.hpp"

#include <algorithm>

#include "weilres/errors.hpp"

namespace weilres {

namespace {

// Reduction mod X^n - 1: fold exponents.
Poly fold_mod_xn1(const Poly& f, int n) {
  std::vector<Rat> c(n, Rat(0));
  for (int i = 0; i <= f.degree(); ++i) c[i % n] += f.coeff(i);
  return Poly(std::move(c));
}

}  // namespace

IdempotentSet cyclotomic_idempotents(int n) {
  if (n < 1 || n > kIdempotentCap)
    throw UnsupportedDegree("cyclotomic_idempotents supports 1 <= n <= 60");
  Poly xn1 = Poly::monomial(n) - Poly{Rat(1)};

  IdempotentSet set;
  set.n = n;
  for (int d : divisors_of(n)) {
    IdempotentEntry e;
    e.d = d;
    e.cyclo = cyclotomic(d);
    e.cofactor = xn1.div_exact(e.cyclo);
    // Psi_d = inverse of Phi'_d mod Phi_d (coprime since X^n - 1 is
    // separable in characteristic 0).
    if (d == 1 && n == 1) {
      e.inverse = Poly{Rat(1)};
      e.idempotent = Poly{Rat(1)};
    } else {
      ExtGcd eg = ext_gcd(e.cofactor, e.cyclo);
      if (eg.g.degree() != 0)
        throw ConsistencyError("cyclotomic cofactors are not coprime");
      e.inverse = eg.u % e.cyclo;
      e.idempotent = fold_mod_xn1(e.inverse * e.cofactor, n);
    }
    set.entries.push_back(e);
  }

  // Verify the defining identities exactly.
  Poly sum;
  for (const auto& e : set.entries) sum = sum + e.idempotent;
  if (sum != Poly{Rat(1)})
    throw ConsistencyError("cyclotomic idempotents do not sum to 1");
  for (size_t i = 0; i < set.entries.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      Poly prod = fold_mod_xn1(set.entries[i].idempotent * set.entries[j].idempotent, n);
      if (i == j) {
        if (prod != set.entries[i].idempotent)
          throw ConsistencyError("cyclotomic idempotent is not idempotent");
      } else if (!prod.is_zero()) {
        throw ConsistencyError("cyclotomic idempotents are not orthogonal");
      }
    }
  }
  return set;
}

CyclicReport decompose_cyclic(int n, int g, const std::optional<Int>& cm_disc) {
  if (n < 1) throw InvalidInput("decompose_cyclic needs n >= 1");
  if (g < 1) throw InvalidInput("decompose_cyclic needs g >= 1");
  if (cm_disc) {
    if (g != 1)
      throw InvalidInput("CM splitting criterion applies to elliptic input (g = 1)");
    if (!is_fundamental_discriminant(*cm_disc))
      throw NotFundamental("not a fundamental imaginary quadratic discriminant: " +
                           cm_disc->get_str());
  }
  CyclicReport rep;
  rep.n = n;
  rep.g = g;
  rep.cm_disc = cm_disc;
  for (int d : divisors_of(n)) {
    CyclicComponent c;
    c.d = d;
    c.dimension = euler_phi(d) * g;
    c.splits = cm_disc && quad_in_cyclotomic(*cm_disc, d);
    c.half_dimension = c.splits ? euler_phi(d) / 2 : 0;
    if (c.splits && euler_phi(d) % 2 != 0)
      throw ConsistencyError("odd-dimensional component cannot split in half");
    rep.components.push_back(c);
  }
  if (rep.total_dimension() != n * g)
    throw ConsistencyError("cyclic component dimensions do not sum to n*g");
  return rep;
}

CrossCheckResult cross_check_finite(const Int& p, const Int& t, int n) {
  if (!is_probable_prime(p)) throw InvalidInput("p is not prime");
  if (t % p == 0 || t * t >= 4 * p)
    throw InvalidInput("cross_check_finite needs an ordinary trace (p ∤ t, t^2 < 4p)");
  Int D = fundamental_discriminant(t * t - 4 * p);

  CrossCheckResult res{false, decompose_cyclic(n, 1, D),
                       oracle_decompose_from_trace(t, p, n)};

  std::vector<int> cyc_dims;
  for (const auto& c : res.cyclic.components) {
    if (c.splits) {
      cyc_dims.push_back(c.half_dimension);
      cyc_dims.push_back(c.half_dimension);
    } else {
      cyc_dims.push_back(c.dimension);
    }
  }
  std::vector<int> orc_dims;
  for (const auto& c : res.oracle.components)
    for (int i = 0; i < c.multiplicity; ++i) orc_dims.push_back(c.cls.dim);
  std::sort(cyc_dims.begin(), cyc_dims.end());
  std::sort(orc_dims.begin(), orc_dims.end());
  res.agree = cyc_dims == orc_dims;
  return res;
}

}  // namespace weilres
