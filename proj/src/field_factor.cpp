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
#include "weilres/field_factor.hpp"

#include <algorithm>

#include "weilres/errors.hpp"
#include "weilres/factor.hpp"

namespace weilres {

namespace {
NFElement zero_of(const NumberField& F) { return NFElement::from_rat(F, Rat(0)); }
NFElement one_of(const NumberField& F) { return NFElement::from_rat(F, Rat(1)); }
}  // namespace

int nfp_deg(const NFPoly& f) { return static_cast<int>(f.size()) - 1; }

void nfp_trim(NFPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

NFPoly nfp_from_rational(const NumberField& F, const Poly& f) {
  NFPoly r;
  r.reserve(f.degree() + 1);
  for (int i = 0; i <= f.degree(); ++i) r.push_back(NFElement::from_rat(F, f.coeff(i)));
  nfp_trim(r);
  return r;
}

std::optional<Poly> nfp_to_rational(const NFPoly& f) {
  std::vector<Rat> c;
  c.reserve(f.size());
  for (const NFElement& e : f) {
    if (!e.is_rational()) return std::nullopt;
    c.push_back(e.repr().coeff(0));
  }
  return Poly(std::move(c));
}

NFPoly nfp_add(const NumberField& F, const NFPoly& a, const NFPoly& b) {
  NFPoly r;
  size_t n = std::max(a.size(), b.size());
  r.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    NFElement x = i < a.size() ? a[i] : zero_of(F);
    if (i < b.size()) x = x + b[i];
    r.push_back(x);
  }
  nfp_trim(r);
  return r;
}

NFPoly nfp_sub(const NumberField& F, const NFPoly& a, const NFPoly& b) {
  NFPoly r;
  size_t n = std::max(a.size(), b.size());
  r.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    NFElement x = i < a.size() ? a[i] : zero_of(F);
    if (i < b.size()) x = x - b[i];
    r.push_back(x);
  }
  nfp_trim(r);
  return r;
}

NFPoly nfp_mul(const NumberField& F, const NFPoly& a, const NFPoly& b) {
  if (a.empty() || b.empty()) return {};
  NFPoly r(a.size() + b.size() - 1, zero_of(F));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  nfp_trim(r);
  return r;
}

std::pair<NFPoly, NFPoly> nfp_divmod(const NumberField& F, const NFPoly& a,
                                     const NFPoly& b) {
  if (b.empty()) throw InvalidInput("division by zero polynomial over F");
  NFPoly rem = a;
  nfp_trim(rem);
  int db = nfp_deg(b);
  if (nfp_deg(rem) < db) return {{}, rem};
  NFElement lead_inv = b.back().inverse();
  NFPoly q(rem.size() - db, zero_of(F));
  for (int i = nfp_deg(rem); i >= db; --i) {
    if (static_cast<size_t>(i) >= rem.size() || rem[i].is_zero()) continue;
    NFElement f = rem[i] * lead_inv;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] = rem[i - db + j] - f * b[j];
    nfp_trim(rem);
  }
  nfp_trim(q);
  nfp_trim(rem);
  return {q, rem};
}

NFPoly nfp_div_exact(const NumberField& F, const NFPoly& a, const NFPoly& b) {
  auto [q, r] = nfp_divmod(F, a, b);
  if (!r.empty()) throw ConsistencyError("inexact division over number field");
  return q;
}

NFPoly nfp_gcd_monic(const NumberField& F, const NFPoly& a, const NFPoly& b) {
  NFPoly f = a, g = b;
  nfp_trim(f);
  nfp_trim(g);
  while (!g.empty()) {
    NFPoly r = nfp_divmod(F, f, g).second;
    f = g;
    g = r;
  }
  return f.empty() ? f : nfp_make_monic(F, f);
}

NFPoly nfp_derivative(const NumberField& F, const NFPoly& a) {
  if (a.size() <= 1) return {};
  NFPoly r;
  r.reserve(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i)
    r.push_back(a[i] * Rat(static_cast<long>(i)));
  (void)F;
  nfp_trim(r);
  return r;
}

NFPoly nfp_make_monic(const NumberField& F, const NFPoly& a) {
  if (a.empty()) return a;
  NFElement inv = a.back().inverse();
  NFPoly r;
  r.reserve(a.size());
  for (const NFElement& c : a) r.push_back(c * inv);
  (void)F;
  return r;
}

NFPoly nfp_conj(const NumberField& F, const NFPoly& a) {
  NFPoly r;
  r.reserve(a.size());
  for (const NFElement& c : a) r.push_back(c.conj());
  (void)F;
  return r;
}

NFPoly nfp_shift(const NumberField& F, const NFPoly& f, const NFElement& t) {
  // Horner: f(x + t) built from the top coefficient down.
  NFPoly r;
  NFPoly xt = {t, one_of(F)};  // x + t
  for (size_t i = f.size(); i-- > 0;) {
    r = nfp_mul(F, r, xt);
    if (r.empty()) r.push_back(f[i]);
    else r[0] = r[0] + f[i];
    nfp_trim(r);
  }
  return r;
}

NFElement nfp_eval(const NumberField& F, const NFPoly& f, const NFElement& x) {
  NFElement acc = zero_of(F);
  for (size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

int nfp_cmp(const NFPoly& a, const NFPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    int c = nf_cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

NFPoly radical_poly(const NumberField& F, const NFElement& alpha, int n) {
  NFPoly f(n + 1, zero_of(F));
  f[0] = -alpha;
  f[n] = one_of(F);
  return f;
}

namespace {

// Yun over F (characteristic zero).
std::vector<std::pair<NFPoly, int>> nf_squarefree(const NumberField& F,
                                                  const NFPoly& f) {
  std::vector<std::pair<NFPoly, int>> out;
  NFPoly fm = nfp_make_monic(F, f);
  if (nfp_deg(fm) <= 0) return out;
  NFPoly d = nfp_derivative(F, fm);
  NFPoly a = nfp_gcd_monic(F, fm, d);
  NFPoly b = nfp_div_exact(F, fm, a);
  NFPoly c = nfp_div_exact(F, d, a);
  int i = 1;
  while (nfp_deg(b) > 0) {
    NFPoly t = nfp_sub(F, c, nfp_derivative(F, b));
    NFPoly part = nfp_gcd_monic(F, b, t);
    if (nfp_deg(part) > 0) out.emplace_back(part, i);
    b = nfp_div_exact(F, b, part);
    c = nfp_div_exact(F, t, part);
    ++i;
  }
  return out;
}

// Trager: factor a monic squarefree polynomial over a quadratic field by
// factoring a squarefree norm over Q and pulling factors back with gcds.
std::vector<NFPoly> trager_quadratic(const NumberField& F, const NFPoly& h) {
  if (nfp_deg(h) == 1) return {h};
  NFElement gen = NFElement::generator(F);
  int max_shift = 2 * h.size() * h.size() + 4;
  for (int k = 0; k <= max_shift; ++k) {
    // shifts 0, 1, -1, 2, -2, ...
    long s = (k + 1) / 2 * (k % 2 == 1 ? 1 : -1);
    NFElement t = gen * Rat(-s);
    NFPoly hs = nfp_shift(F, h, t);  // h(x - s*y)
    NFPoly normf = nfp_mul(F, hs, nfp_conj(F, hs));
    auto normq = nfp_to_rational(normf);
    if (!normq)
      throw ConsistencyError("norm polynomial has irrational coefficients");
    Poly N = *normq;
    if (gcd_monic(N, N.derivative()).degree() != 0) continue;  // bad shift
    auto nf = factor_over_Q(N);
    std::vector<NFPoly> out;
    for (auto& [H, e] : nf.factors) {
      if (e != 1) throw ConsistencyError("squarefree norm factored with multiplicity");
      NFPoly G = nfp_gcd_monic(F, hs, nfp_from_rational(F, H));
      if (nfp_deg(G) >= 1) out.push_back(nfp_shift(F, G, gen * Rat(s)));
    }
    int total = 0;
    for (auto& g : out) total += nfp_deg(g);
    if (total != nfp_deg(h))
      throw ConsistencyError("norm factor pullback lost degree");
    return out;
  }
  throw ConsistencyError("no squarefree norm shift found");
}

}  // namespace

std::vector<std::pair<NFPoly, int>> factor_over_field(const NumberField& F,
                                                      const NFPoly& fin) {
  NFPoly f = fin;
  nfp_trim(f);
  if (f.empty()) throw InvalidInput("cannot factor the zero polynomial");
  if (F.degree() > 2)
    throw UnsupportedDegree("factor_over_field supports deg(F) <= 2");

  std::vector<std::pair<NFPoly, int>> out;
  if (nfp_deg(f) == 0) return out;

  if (F.is_rationals()) {
    auto rat = nfp_to_rational(f);
    auto qf = factor_over_Q(*rat);
    for (auto& [g, e] : qf.factors) out.emplace_back(nfp_from_rational(F, g), e);
  } else {
    for (auto& [part, mult] : nf_squarefree(F, f))
      for (auto& g : trager_quadratic(F, part)) out.emplace_back(g, mult);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return nfp_cmp(a.first, b.first) < 0; });

  // Exact verification: lc(f) * prod factors^mult == f.
  NFPoly check = {f.back()};
  for (auto& [g, e] : out)
    for (int i = 0; i < e; ++i) check = nfp_mul(F, check, g);
  if (nfp_cmp(check, f) != 0)
    throw ConsistencyError("field factorization re-expansion mismatch");
  return out;
}

std::optional<NFElement> is_nth_power(const NumberField& F, const NFElement& alpha,
                                      int n) {
  if (alpha.is_zero()) throw InvalidInput("is_nth_power needs alpha != 0");
  if (n < 1) throw InvalidInput("is_nth_power needs n >= 1");
  if (F.degree() > 2) throw UnsupportedDegree("is_nth_power supports deg(F) <= 2");
  if (n == 1) return alpha;

  if (F.is_rationals()) {
    Rat a = alpha.rational_value();
    if (n % 2 == 0 && sgn(a) < 0) return std::nullopt;
    auto rn = nth_root_exact(abs(num(a)), n);
    auto rd = nth_root_exact(den(a), n);
    if (!rn || !rd) return std::nullopt;
    Rat beta = make_rat(sgn(a) < 0 ? Int(-*rn) : *rn, *rd);
    NFElement b = NFElement::from_rat(F, beta);
    if (b.pow(n) != alpha) return std::nullopt;
    return b;
  }

  auto factors = factor_over_field(F, radical_poly(F, alpha, n));
  std::vector<NFElement> roots;
  for (auto& [g, e] : factors)
    if (nfp_deg(g) == 1) roots.push_back(-g[0]);
  if (roots.empty()) return std::nullopt;
  std::sort(roots.begin(), roots.end(),
            [](const NFElement& a, const NFElement& b) { return nf_cmp(a, b) < 0; });
  NFElement beta = roots.front();
  if (beta.pow(n) != alpha)
    throw ConsistencyError("nth-power witness failed re-expansion");
  return beta;
}

std::optional<NFElement> is_minus4_fourth(const NumberField& F,
                                          const NFElement& alpha) {
  if (alpha.is_zero()) throw InvalidInput("is_minus4_fourth needs alpha != 0");
  auto beta = is_nth_power(F, -(alpha * make_rat(Int(1), Int(4))), 4);
  if (!beta) return std::nullopt;
  if (beta->pow(4) * Rat(-4) != alpha)
    throw ConsistencyError("minus-4-fourth witness failed re-expansion");
  return beta;
}

}  // namespace weilres
