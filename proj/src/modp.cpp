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
#include "weilres/modp.hpp"

#include <algorithm>
#include <random>

#include "weilres/errors.hpp"

namespace weilres {

namespace {

Int mod_norm(const Int& a, const Int& m) {
  Int r = a % m;
  if (sgn(r) < 0) r += m;
  return r;
}

}  // namespace

int zp_deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

void zp_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zp_reduce(const ZPoly& a, const Int& m) {
  ZPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mod_norm(a[i], m);
  zp_trim(r);
  return r;
}

bool zp_is_zero(const ZPoly& a) { return a.empty(); }

ZPoly zp_one() { return {Int(1)}; }

ZPoly zp_add(const ZPoly& a, const ZPoly& b, const Int& m) {
  ZPoly r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  for (auto& c : r) c = mod_norm(c, m);
  zp_trim(r);
  return r;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b, const Int& m) {
  ZPoly r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  for (auto& c : r) c = mod_norm(c, m);
  zp_trim(r);
  return r;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  for (auto& c : r) c = mod_norm(c, m);
  zp_trim(r);
  return r;
}

ZPoly zp_mul_scalar(const ZPoly& a, const Int& s, const Int& m) {
  ZPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mod_norm(a[i] * s, m);
  zp_trim(r);
  return r;
}

std::pair<ZPoly, ZPoly> zp_divmod_monic(const ZPoly& a, const ZPoly& b, const Int& m) {
  if (b.empty() || b.back() != 1)
    throw ConsistencyError("zp_divmod_monic requires a monic divisor");
  ZPoly rem = a;
  int db = zp_deg(b);
  if (zp_deg(a) < db) return {{}, rem};
  ZPoly q(a.size() - db, Int(0));
  for (int i = zp_deg(rem); i >= db; --i) {
    if (static_cast<size_t>(i) >= rem.size()) continue;
    Int f = rem[i];
    if (f == 0) continue;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j)
      rem[i - db + j] = mod_norm(rem[i - db + j] - f * b[j], m);
  }
  zp_trim(q);
  zp_trim(rem);
  return {q, rem};
}

int zp_cmp(const ZPoly& a, const ZPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

Int fp_inv(const Int& a, const Int& p) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
    throw ConsistencyError("non-invertible element mod p");
  return r;
}

std::pair<ZPoly, ZPoly> fp_divmod(const ZPoly& a, const ZPoly& b, const Int& p) {
  if (b.empty()) throw InvalidInput("division by zero polynomial mod p");
  if (b.back() == 1) return zp_divmod_monic(a, b, p);
  Int inv = fp_inv(b.back(), p);
  ZPoly bm = zp_mul_scalar(b, inv, p);
  auto [q, r] = zp_divmod_monic(a, bm, p);
  return {zp_mul_scalar(q, inv, p), r};
}

ZPoly fp_gcd_monic(const ZPoly& a, const ZPoly& b, const Int& p) {
  ZPoly f = zp_reduce(a, p), g = zp_reduce(b, p);
  while (!g.empty()) {
    ZPoly r = fp_divmod(f, g, p).second;
    f = g;
    g = r;
  }
  return f.empty() ? f : fp_make_monic(f, p);
}

void fp_ext_gcd(const ZPoly& a, const ZPoly& b, const Int& p, ZPoly& g, ZPoly& u,
                ZPoly& v) {
  ZPoly r0 = zp_reduce(a, p), r1 = zp_reduce(b, p);
  ZPoly u0 = zp_one(), u1, v0, v1 = zp_one();
  while (!r1.empty()) {
    auto [q, r] = fp_divmod(r0, r1, p);
    r0 = r1;
    r1 = r;
    ZPoly nu = zp_sub(u0, zp_mul(q, u1, p), p);
    u0 = u1;
    u1 = nu;
    ZPoly nv = zp_sub(v0, zp_mul(q, v1, p), p);
    v0 = v1;
    v1 = nv;
  }
  if (r0.empty()) {
    g = r0;
    u = u0;
    v = v0;
    return;
  }
  Int inv = fp_inv(r0.back(), p);
  g = zp_mul_scalar(r0, inv, p);
  u = zp_mul_scalar(u0, inv, p);
  v = zp_mul_scalar(v0, inv, p);
}

ZPoly fp_derivative(const ZPoly& a, const Int& p) {
  if (a.size() <= 1) return {};
  ZPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = mod_norm(a[i] * Int(static_cast<long>(i)), p);
  zp_trim(r);
  return r;
}

ZPoly fp_make_monic(const ZPoly& a, const Int& p) {
  if (a.empty()) return a;
  if (a.back() == 1) return a;
  return zp_mul_scalar(a, fp_inv(a.back(), p), p);
}

ZPoly fp_powmod(const ZPoly& base, const Int& e, const ZPoly& mod, const Int& p) {
  ZPoly result = zp_one();
  ZPoly b = fp_divmod(base, mod, p).second;
  Int exp = e;
  while (exp > 0) {
    if (mpz_odd_p(exp.get_mpz_t()))
      result = fp_divmod(zp_mul(result, b, p), mod, p).second;
    b = fp_divmod(zp_mul(b, b, p), mod, p).second;
    exp >>= 1;
  }
  return result;
}

namespace {

// f with f' = 0 is a p-th power; extract the p-th root (Frobenius fixes F_p).
ZPoly fp_pth_root(const ZPoly& f, const Int& p) {
  unsigned long pl = p.get_ui();
  ZPoly r;
  for (size_t i = 0; i < f.size(); i += pl) r.push_back(f[i]);
  zp_trim(r);
  return r;
}

// Distinct-degree split of squarefree monic f.
std::vector<std::pair<int, ZPoly>> fp_ddf(const ZPoly& f, const Int& p) {
  std::vector<std::pair<int, ZPoly>> out;
  ZPoly rest = f;
  ZPoly h = {Int(0), Int(1)};  // x
  int d = 0;
  while (zp_deg(rest) > 0) {
    ++d;
    if (2 * d > zp_deg(rest)) {
      out.emplace_back(zp_deg(rest), rest);
      break;
    }
    h = fp_powmod(h, p, rest, p);
    ZPoly diff = zp_sub(h, ZPoly{Int(0), Int(1)}, p);
    ZPoly g = fp_gcd_monic(diff, rest, p);
    if (zp_deg(g) > 0) {
      out.emplace_back(d, g);
      rest = fp_divmod(rest, g, p).first;
      h = fp_divmod(h, rest, p).second;
    }
  }
  return out;
}

// Equal-degree split: g is a product of distinct monic irreducibles of
// degree d.  Fixed-seed candidates keep the output reproducible.
void fp_edf(const ZPoly& g, int d, const Int& p, std::mt19937_64& rng,
            std::vector<ZPoly>& out) {
  if (zp_deg(g) == d) {
    out.push_back(g);
    return;
  }
  ZPoly splitter;
  for (int attempt = 0; attempt < 512; ++attempt) {
    ZPoly a(zp_deg(g));
    for (auto& c : a) c = mod_norm(Int(static_cast<unsigned long>(rng())), p);
    zp_trim(a);
    if (a.empty()) continue;
    ZPoly b;
    if (p == 2) {
      // trace map a + a^2 + ... + a^(2^(d-1))
      b = a;
      ZPoly t = a;
      for (int i = 1; i < d; ++i) {
        t = fp_powmod(t, Int(2), g, p);
        b = zp_add(b, t, p);
      }
    } else {
      Int e = (pow_int(p, d) - 1) / 2;
      b = fp_powmod(a, e, g, p);
      b = zp_sub(b, zp_one(), p);
    }
    ZPoly h = fp_gcd_monic(b, g, p);
    if (zp_deg(h) > 0 && zp_deg(h) < zp_deg(g)) {
      splitter = h;
      break;
    }
  }
  if (splitter.empty())
    throw ConsistencyError("equal-degree splitting failed to converge");
  fp_edf(splitter, d, p, rng, out);
  fp_edf(fp_divmod(g, splitter, p).first, d, p, rng, out);
}

void fp_factor_rec(const ZPoly& f, const Int& p, int mult_scale,
                   std::vector<std::pair<ZPoly, int>>& out) {
  if (zp_deg(f) <= 0) return;
  ZPoly fm = fp_make_monic(f, p);
  ZPoly d = fp_derivative(fm, p);
  if (d.empty()) {
    fp_factor_rec(fp_pth_root(fm, p), p, mult_scale * static_cast<int>(p.get_si()), out);
    return;
  }
  ZPoly rad = fp_divmod(fm, fp_gcd_monic(fm, d, p), p).first;
  // rad = product of the distinct factors whose multiplicity is not
  // divisible by p; peel them off by repeated division.
  std::mt19937_64 rng(0x77e11235u);
  ZPoly rest = fm;
  for (auto& [deg, prod] : fp_ddf(rad, p)) {
    std::vector<ZPoly> irred;
    fp_edf(prod, deg, p, rng, irred);
    for (auto& q : irred) {
      int mult = 0;
      while (true) {
        auto [quo, rem] = fp_divmod(rest, q, p);
        if (!rem.empty()) break;
        rest = quo;
        ++mult;
      }
      out.emplace_back(q, mult * mult_scale);
    }
  }
  // What is left has all multiplicities divisible by p.
  if (zp_deg(rest) > 0) {
    ZPoly rd = fp_derivative(rest, p);
    if (!rd.empty()) throw ConsistencyError("squarefree bookkeeping failed");
    fp_factor_rec(fp_pth_root(rest, p), p, mult_scale * static_cast<int>(p.get_si()), out);
  }
}

}  // namespace

std::vector<std::pair<ZPoly, int>> fp_factor(const ZPoly& f, const Int& p) {
  ZPoly fr = zp_reduce(f, p);
  if (fr.empty()) throw InvalidInput("factoring zero polynomial mod p");
  std::vector<std::pair<ZPoly, int>> out;
  fp_factor_rec(fr, p, 1, out);
  // merge duplicates produced by the recursion, then order canonically
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return zp_cmp(a.first, b.first) < 0; });
  std::vector<std::pair<ZPoly, int>> merged;
  for (auto& fm : out) {
    if (!merged.empty() && zp_cmp(merged.back().first, fm.first) == 0)
      merged.back().second += fm.second;
    else
      merged.push_back(fm);
  }
  std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) {
    if (zp_deg(a.first) != zp_deg(b.first)) return zp_deg(a.first) < zp_deg(b.first);
    return zp_cmp(a.first, b.first) < 0;
  });
  return merged;
}

// ---------------------------------------------------------------- F_q ---

FqCtx make_fq(const Int& p, int f) {
  if (f < 1) throw InvalidInput("extension degree must be positive");
  FqCtx ctx;
  ctx.p = p;
  ctx.f = f;
  ctx.q = pow_int(p, f);
  if (f == 1) {
    ctx.modulus = {Int(0), Int(1)};  // z
    return ctx;
  }
  // Deterministic scan for a monic irreducible of degree f: walk the
  // lower coefficients in counting order and keep the first hit.
  std::vector<Int> lows(f, Int(0));
  while (true) {
    ZPoly cand(lows);
    cand.push_back(Int(1));
    // irreducible iff z^(p^f) = z mod cand and gcd(z^(p^(f/l)) - z, cand) = 1
    ZPoly z = {Int(0), Int(1)};
    ZPoly zq = fp_powmod(z, pow_int(p, f), cand, p);
    bool ok = zp_cmp(zq, z) == 0;
    if (ok) {
      for (int l = 2; l <= f && ok; ++l) {
        if (f % l != 0) continue;
        // l runs over prime divisors; composite l are redundant but harmless
        ZPoly zl = fp_powmod(z, pow_int(p, f / l), cand, p);
        ZPoly g = fp_gcd_monic(zp_sub(zl, z, p), cand, p);
        if (zp_deg(g) != 0) ok = false;
      }
    }
    if (ok) {
      ctx.modulus = cand;
      return ctx;
    }
    // increment the low-coefficient counter
    int i = 0;
    while (i < f) {
      lows[i] += 1;
      if (lows[i] < p) break;
      lows[i] = 0;
      ++i;
    }
    if (i == f) throw ConsistencyError("no irreducible modulus found");
  }
}

bool fq_is_zero(const FqElem& a) { return a.empty(); }

FqElem fq_from_int(const FqCtx& ctx, const Int& a) {
  FqElem r = {mod_norm(a, ctx.p)};
  zp_trim(r);
  return r;
}

FqElem fq_reduce(const FqCtx& ctx, const ZPoly& a) {
  return fp_divmod(zp_reduce(a, ctx.p), ctx.modulus, ctx.p).second;
}

FqElem fq_add(const FqCtx& ctx, const FqElem& a, const FqElem& b) {
  return zp_add(a, b, ctx.p);
}

FqElem fq_sub(const FqCtx& ctx, const FqElem& a, const FqElem& b) {
  return zp_sub(a, b, ctx.p);
}

FqElem fq_mul(const FqCtx& ctx, const FqElem& a, const FqElem& b) {
  return fp_divmod(zp_mul(a, b, ctx.p), ctx.modulus, ctx.p).second;
}

FqElem fq_inv(const FqCtx& ctx, const FqElem& a) {
  if (a.empty()) throw ConsistencyError("inverse of zero in F_q");
  ZPoly g, u, v;
  fp_ext_gcd(a, ctx.modulus, ctx.p, g, u, v);
  if (zp_deg(g) != 0) throw ConsistencyError("F_q modulus not irreducible");
  return fq_reduce(ctx, u);
}

FqElem fq_pow(const FqCtx& ctx, const FqElem& a, const Int& e) {
  FqElem result = fq_from_int(ctx, Int(1));
  FqElem b = a;
  Int exp = e;
  while (exp > 0) {
    if (mpz_odd_p(exp.get_mpz_t())) result = fq_mul(ctx, result, b);
    b = fq_mul(ctx, b, b);
    exp >>= 1;
  }
  return result;
}

int fqp_deg(const FqPoly& a) { return static_cast<int>(a.size()) - 1; }

void fqp_trim(FqPoly& a) {
  while (!a.empty() && fq_is_zero(a.back())) a.pop_back();
}

FqPoly fqp_one(const FqCtx& ctx) { return {fq_from_int(ctx, Int(1))}; }

FqPoly fqp_add(const FqCtx& ctx, const FqPoly& a, const FqPoly& b) {
  FqPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    FqElem x = i < a.size() ? a[i] : FqElem{};
    FqElem y = i < b.size() ? b[i] : FqElem{};
    r[i] = fq_add(ctx, x, y);
  }
  fqp_trim(r);
  return r;
}

FqPoly fqp_sub(const FqCtx& ctx, const FqPoly& a, const FqPoly& b) {
  FqPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    FqElem x = i < a.size() ? a[i] : FqElem{};
    FqElem y = i < b.size() ? b[i] : FqElem{};
    r[i] = fq_sub(ctx, x, y);
  }
  fqp_trim(r);
  return r;
}

FqPoly fqp_mul(const FqCtx& ctx, const FqPoly& a, const FqPoly& b) {
  if (a.empty() || b.empty()) return {};
  FqPoly r(a.size() + b.size() - 1, FqElem{});
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = fq_add(ctx, r[i + j], fq_mul(ctx, a[i], b[j]));
  fqp_trim(r);
  return r;
}

std::pair<FqPoly, FqPoly> fqp_divmod(const FqCtx& ctx, const FqPoly& a,
                                     const FqPoly& b) {
  if (b.empty()) throw InvalidInput("division by zero polynomial over F_q");
  FqPoly rem = a;
  int db = fqp_deg(b);
  if (fqp_deg(a) < db) return {{}, rem};
  FqElem lead_inv = fq_inv(ctx, b.back());
  FqPoly q(a.size() - db, FqElem{});
  for (int i = fqp_deg(rem); i >= db; --i) {
    if (static_cast<size_t>(i) >= rem.size() || fq_is_zero(rem[i])) continue;
    FqElem f = fq_mul(ctx, rem[i], lead_inv);
    q[i - db] = f;
    for (int j = 0; j <= db; ++j)
      rem[i - db + j] = fq_sub(ctx, rem[i - db + j], fq_mul(ctx, f, b[j]));
  }
  fqp_trim(q);
  fqp_trim(rem);
  return {q, rem};
}

FqPoly fqp_gcd_monic(const FqCtx& ctx, const FqPoly& a, const FqPoly& b) {
  FqPoly f = a, g = b;
  fqp_trim(f);
  fqp_trim(g);
  while (!g.empty()) {
    FqPoly r = fqp_divmod(ctx, f, g).second;
    f = g;
    g = r;
  }
  return f.empty() ? f : fqp_make_monic(ctx, f);
}

FqPoly fqp_derivative(const FqCtx& ctx, const FqPoly& a) {
  if (a.size() <= 1) return {};
  FqPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i)
    r[i - 1] = fq_mul(ctx, a[i], fq_from_int(ctx, Int(static_cast<long>(i))));
  fqp_trim(r);
  return r;
}

FqPoly fqp_make_monic(const FqCtx& ctx, const FqPoly& a) {
  if (a.empty()) return a;
  FqElem inv = fq_inv(ctx, a.back());
  FqPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = fq_mul(ctx, a[i], inv);
  return r;
}

FqPoly fqp_powmod(const FqCtx& ctx, const FqPoly& base, const Int& e,
                  const FqPoly& mod) {
  FqPoly result = fqp_one(ctx);
  FqPoly b = fqp_divmod(ctx, base, mod).second;
  Int exp = e;
  while (exp > 0) {
    if (mpz_odd_p(exp.get_mpz_t()))
      result = fqp_divmod(ctx, fqp_mul(ctx, result, b), mod).second;
    b = fqp_divmod(ctx, fqp_mul(ctx, b, b), mod).second;
    exp >>= 1;
  }
  return result;
}

namespace {

// p-th root over F_q: coefficients at indices divisible by p, each taken
// to the power p^(f-1) (the inverse of Frobenius).
FqPoly fq_pth_root(const FqCtx& ctx, const FqPoly& f) {
  unsigned long pl = ctx.p.get_ui();
  Int e = pow_int(ctx.p, ctx.f - 1);
  FqPoly r;
  for (size_t i = 0; i < f.size(); i += pl) r.push_back(fq_pow(ctx, f[i], e));
  fqp_trim(r);
  return r;
}

}  // namespace

std::vector<std::pair<FqPoly, int>> fq_sqfree_decomposition(const FqCtx& ctx,
                                                            const FqPoly& f) {
  // Plain multiplicity extraction: factor out gcd chains.  Sizes here are
  // tiny (residual polynomials of Newton polygon segments).
  std::vector<std::pair<FqPoly, int>> out;
  if (fqp_deg(f) <= 0) return out;
  FqPoly fm = fqp_make_monic(ctx, f);
  FqPoly d = fqp_derivative(ctx, fm);
  if (d.empty()) {
    auto sub = fq_sqfree_decomposition(ctx, fq_pth_root(ctx, fm));
    for (auto& [g, m] : sub) out.emplace_back(g, m * static_cast<int>(ctx.p.get_si()));
    return out;
  }
  FqPoly c = fqp_gcd_monic(ctx, fm, d);
  FqPoly w = fqp_divmod(ctx, fm, c).first;
  int mult = 1;
  while (fqp_deg(w) > 0) {
    FqPoly y = fqp_gcd_monic(ctx, w, c);
    FqPoly part = fqp_divmod(ctx, w, y).first;
    if (fqp_deg(part) > 0) out.emplace_back(part, mult);
    ++mult;
    w = y;
    c = fqp_divmod(ctx, c, y).first;
  }
  if (fqp_deg(c) > 0) {
    // remaining multiplicities divisible by p
    auto sub = fq_sqfree_decomposition(ctx, fq_pth_root(ctx, c));
    for (auto& [g, m] : sub) out.emplace_back(g, m * static_cast<int>(ctx.p.get_si()));
  }
  return out;
}

std::vector<std::pair<int, FqPoly>> fq_ddf(const FqCtx& ctx, const FqPoly& f) {
  std::vector<std::pair<int, FqPoly>> out;
  FqPoly rest = fqp_make_monic(ctx, f);
  FqPoly x = {FqElem{}, fq_from_int(ctx, Int(1))};
  FqPoly h = x;
  int d = 0;
  while (fqp_deg(rest) > 0) {
    ++d;
    if (2 * d > fqp_deg(rest)) {
      out.emplace_back(fqp_deg(rest), rest);
      break;
    }
    h = fqp_powmod(ctx, h, ctx.q, rest);
    FqPoly g = fqp_gcd_monic(ctx, fqp_sub(ctx, h, x), rest);
    if (fqp_deg(g) > 0) {
      out.emplace_back(d, g);
      rest = fqp_divmod(ctx, rest, g).first;
      h = fqp_divmod(ctx, h, rest).second;
    }
  }
  return out;
}

std::vector<FqElem> fq_roots_of_split(const FqCtx& ctx, const FqPoly& f) {
  if (ctx.q > 8192)
    throw PrecisionExhausted("root enumeration over F_q with q > 8192");
  std::vector<FqElem> roots;
  unsigned long q = ctx.q.get_ui();
  unsigned long p = ctx.p.get_ui();
  for (unsigned long idx = 0; idx < q; ++idx) {
    // decode idx in base p as an element
    FqElem e;
    unsigned long v = idx;
    while (v > 0) {
      e.push_back(Int(static_cast<long>(v % p)));
      v /= p;
    }
    zp_trim(e);
    // evaluate f at e
    FqElem acc;
    for (size_t i = f.size(); i-- > 0;) {
      acc = fq_add(ctx, fq_mul(ctx, acc, e), f[i]);
    }
    if (fq_is_zero(acc)) roots.push_back(e);
  }
  std::sort(roots.begin(), roots.end(),
            [](const FqElem& a, const FqElem& b) { return zp_cmp(a, b) < 0; });
  return roots;
}

}  // namespace weilres
