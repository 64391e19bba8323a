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
#include "weilres/factor.hpp"

#include <algorithm>
#include <map>

#include "weilres/errors.hpp"
#include "weilres/hensel.hpp"
#include "weilres/modp.hpp"

namespace weilres {

namespace {

ZPoly to_zpoly(const Poly& f, const Int& m) {
  ZPoly r(f.degree() + 1);
  for (int i = 0; i <= f.degree(); ++i) {
    if (!is_integer(f.coeff(i))) throw ConsistencyError("expected integer poly");
    r[i] = num(f.coeff(i));
  }
  return zp_reduce(r, m);
}

Poly from_symmetric(const ZPoly& a, const Int& m) {
  std::vector<Rat> c(a.size());
  Int half = m / 2;
  for (size_t i = 0; i < a.size(); ++i) {
    Int v = a[i];
    if (v > half) v -= m;
    c[i] = Rat(v);
  }
  return Poly(std::move(c));
}

// Mignotte-style bound: any monic factor of the monic integer f has
// coefficients bounded by 2^deg * ||f||_2.
Int coefficient_bound(const Poly& f) {
  Int sq(0);
  for (int i = 0; i <= f.degree(); ++i) {
    Int c = num(f.coeff(i));
    sq += c * c;
  }
  Int b = isqrt_floor(sq) + 1;
  return (Int(1) << f.degree()) * b;
}

bool next_combination(std::vector<size_t>& idx, size_t n) {
  size_t k = idx.size();
  for (size_t i = k; i-- > 0;) {
    if (idx[i] < n - (k - i)) {
      ++idx[i];
      for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Zassenhaus on a monic squarefree integer polynomial with nonzero
// constant term.  Returns monic integer irreducible factors.
std::vector<Poly> zassenhaus_monic(const Poly& P) {
  if (P.degree() == 1) return {P};

  // Pick the prime giving the fewest modular factors among a handful of
  // good candidates (good: P stays squarefree mod p).
  Int best_p(0);
  std::vector<ZPoly> best_factors;
  Int p(2);
  int good_found = 0;
  while (good_found < 5) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    ZPoly fp = to_zpoly(P, p);
    if (zp_deg(fp) != P.degree()) continue;  // cannot happen for monic P
    ZPoly d = fp_derivative(fp, p);
    if (d.empty()) continue;
    if (zp_deg(fp_gcd_monic(fp, d, p)) != 0) continue;
    ++good_found;
    auto fac = fp_factor(fp, p);
    std::vector<ZPoly> fl;
    for (auto& [g, e] : fac) {
      if (e != 1) throw ConsistencyError("squarefree poly factored with multiplicity");
      fl.push_back(g);
    }
    if (best_factors.empty() || fl.size() < best_factors.size()) {
      best_factors = fl;
      best_p = p;
    }
    if (best_factors.size() == 1) break;
  }
  if (best_factors.size() == 1) return {P};

  Int bound = coefficient_bound(P);
  Int target = best_p;
  while (target <= 2 * bound) target *= best_p;

  std::vector<ZPoly> lifted =
      hensel_lift_monic(to_zpoly(P, target), best_factors, best_p, target);

  // Subset recombination.
  std::vector<Poly> out;
  std::vector<ZPoly> active = lifted;
  Poly rem = P;
  Int rem_const = num(rem.coeff(0));
  size_t card = 1;
  while (2 * card <= active.size()) {
    std::vector<size_t> idx(card);
    for (size_t i = 0; i < card; ++i) idx[i] = i;
    bool extracted = false;
    while (true) {
      ZPoly prod = zp_one();
      for (size_t i : idx) prod = zp_mul(prod, active[i], target);
      Poly cand = from_symmetric(prod, target);
      Int c0 = num(cand.coeff(0));
      if (c0 != 0 && mpz_divisible_p(rem_const.get_mpz_t(), c0.get_mpz_t())) {
        auto [q, r] = rem.divmod(cand);
        if (r.is_zero()) {
          out.push_back(cand);
          rem = q;
          rem_const = num(rem.coeff(0));
          std::vector<ZPoly> keep;
          for (size_t i = 0; i < active.size(); ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end())
              keep.push_back(active[i]);
          active = keep;
          extracted = true;
          break;
        }
      }
      if (!next_combination(idx, active.size())) break;
    }
    if (!extracted) ++card;
    if (active.empty()) break;
  }
  if (rem.degree() > 0) out.push_back(rem);
  return out;
}

// Factor a monic squarefree rational polynomial into monic rational
// irreducibles.
std::vector<Poly> factor_monic_squarefree(const Poly& part) {
  ContentSplit cs = content_split(part);
  const Poly& P = cs.primitive;
  if (P.is_monic()) {
    auto fs = zassenhaus_monic(P);
    return fs;
  }
  // Monicise: Q(x) = L^(d-1) P(x/L) is monic integer; a monic factor G of
  // Q pulls back to the monic rational factor G(Lx) / L^deg(G).
  Rat L(num(P.lc()));
  Poly Q = (P.scale_arg(Rat(1) / L) * pow_rat(L, P.degree() - 1)).monic();
  // Q as above is already integer; monic() only clears rounding of lc.
  std::vector<Poly> out;
  for (const Poly& G : zassenhaus_monic(Q))
    out.push_back(G.scale_arg(L) * (Rat(1) / pow_rat(L, G.degree())));
  return out;
}

}  // namespace

QFactorization factor_over_Q(const Poly& f) {
  if (f.is_zero()) throw InvalidInput("cannot factor the zero polynomial");
  if (f.degree() > kFactorDegreeCap)
    throw UnsupportedDegree("factor_over_Q: degree > 48");

  QFactorization result;
  result.content = f.lc();
  if (f.degree() == 0) {
    result.content = f.coeff(0);
    return result;
  }

  Poly fm = f.monic();
  // Pull out powers of x first so every Yun part has nonzero constant term.
  int xpow = 0;
  while (fm.coeff(0) == 0) {
    fm = fm.div_exact(Poly::x());
    ++xpow;
  }
  std::map<std::vector<Rat>, std::pair<Poly, int>> acc;
  auto add_factor = [&](const Poly& g, int mult) {
    auto key = g.coeffs();
    auto it = acc.find(key);
    if (it == acc.end())
      acc.emplace(key, std::make_pair(g, mult));
    else
      it->second.second += mult;
  };
  if (xpow > 0) add_factor(Poly::x(), xpow);

  for (auto& [part, mult] : squarefree_decomposition(fm))
    for (const Poly& g : factor_monic_squarefree(part)) add_factor(g, mult);

  for (auto& [key, fm2] : acc) result.factors.push_back(fm2);
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) { return poly_cmp(a.first, b.first) < 0; });

  // Verify the expansion exactly.
  Poly check(result.content);
  for (auto& [g, e] : result.factors)
    for (int i = 0; i < e; ++i) check = check * g;
  if (check != f) throw ConsistencyError("factorization re-expansion mismatch");
  return result;
}

bool is_irreducible_over_Q(const Poly& f) {
  if (f.is_zero() || f.degree() == 0) return false;
  if (f.degree() == 1) return true;
  auto fac = factor_over_Q(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace weilres
