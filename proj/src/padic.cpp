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
#include "weilres/padic.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "weilres/errors.hpp"
#include "weilres/factor.hpp"
#include "weilres/hensel.hpp"
#include "weilres/modp.hpp"

namespace weilres {

namespace {

// Thrown internally to restart the analysis at doubled precision.
struct NeedMorePrecision {};

constexpr int kStartPrecision = 30;
constexpr int kMaxPrecision = 480;

struct PolygonPoint {
  int j;
  long w;  // valuation; points with w >= "infinity" are dropped beforehand
};

// Lower convex hull of the valuation points, left to right.
std::vector<PolygonPoint> lower_hull(const std::vector<PolygonPoint>& pts) {
  std::vector<PolygonPoint> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      // keep b only if it lies strictly below the segment a->pt
      long lhs = (b.w - a.w) * static_cast<long>(pt.j - a.j);
      long rhs = (pt.w - a.w) * static_cast<long>(b.j - a.j);
      if (lhs >= rhs)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(pt);
  }
  return hull;
}

struct PartContext {
  Int p;
  int precision;  // N with modulus p^N
  Int modulus;    // p^N
};

// phi-adic digits of `part`: part = sum a_j phi^j with deg a_j < deg phi.
std::vector<ZPoly> phi_digits(const ZPoly& part, const ZPoly& phi, const Int& M) {
  std::vector<ZPoly> digits;
  ZPoly rest = part;
  while (!rest.empty()) {
    auto [q, r] = zp_divmod_monic(rest, phi, M);
    digits.push_back(r);
    rest = q;
  }
  return digits;
}

long digit_valuation(const ZPoly& a, const Int& p, int precision) {
  if (a.empty()) return precision + 1;  // effectively infinite
  long v = precision + 1;
  for (const Int& c : a) {
    if (c == 0) continue;
    v = std::min(v, static_cast<long>(p_valuation(c, p)));
  }
  return v;
}

// a / p^w reduced mod (p, phi_bar), as an element of F_q = F_p[z]/(phi_bar).
FqElem digit_residue(const FqCtx& fq, const ZPoly& a, long w, const Int& p) {
  ZPoly scaled;
  scaled.reserve(a.size());
  Int pw = pow_int(p, static_cast<unsigned long>(w));
  for (const Int& c : a) scaled.push_back(c / pw);
  return fq_reduce(fq, scaled);
}

struct Refinement {
  long h;
  FqElem root;
};

// Analyse one primary part (congruent to phi_bar^m mod p, m >= 2).
// Emits places; requests refinement of phi when a repeated linear
// residual factor shows up.
std::vector<LocalPlace> analyze_cluster(const PartContext& ctx, const ZPoly& part,
                                        const ZPoly& phi_bar, int m) {
  const Int& p = ctx.p;
  int f0 = zp_deg(phi_bar);
  bool x_cluster = (f0 == 1 && phi_bar[0] == 0);
  FqCtx fq;
  fq.p = p;
  fq.modulus = phi_bar;
  fq.f = f0;
  fq.q = pow_int(p, f0);

  ZPoly phi = phi_bar;  // integer lift, refined in place
  long shift_val = -1;  // first refinement height for x-clusters, -1 = none
  long budget = 12L * ctx.precision + 64;

  while (true) {
    if (budget-- <= 0)
      throw PrecisionExhausted("p-adic cluster refinement did not converge");
    std::vector<ZPoly> digits = phi_digits(part, phi, ctx.modulus);
    if (static_cast<int>(digits.size()) != m + 1 || zp_cmp(digits.back(), zp_one()) != 0)
      throw ConsistencyError("phi-adic expansion has unexpected shape");

    std::vector<long> vals(m + 1);
    for (int j = 0; j <= m; ++j) vals[j] = digit_valuation(digits[j], p, ctx.precision);
    if (vals[0] > ctx.precision / 2) throw NeedMorePrecision{};
    for (int j = 0; j < m; ++j)
      if (vals[j] == 0) throw ConsistencyError("primary part not phi-primary");

    std::vector<PolygonPoint> pts;
    for (int j = 0; j <= m; ++j)
      if (vals[j] <= ctx.precision) pts.push_back({j, vals[j]});
    std::vector<PolygonPoint> hull = lower_hull(pts);
    // Guard: hull heights must sit well below the working precision so
    // that coefficients that vanished mod p^N cannot dip below the hull.
    for (const auto& v : hull)
      if (v.w > ctx.precision / 2) throw NeedMorePrecision{};

    std::vector<LocalPlace> places;
    std::optional<Refinement> refine;
    for (size_t si = 0; si + 1 < hull.size(); ++si) {
      int i1 = hull[si].j, i2 = hull[si + 1].j;
      long w1 = hull[si].w, w2 = hull[si + 1].w;
      long rise = w1 - w2;
      int run = i2 - i1;
      if (rise <= 0) throw ConsistencyError("polygon segment with non-negative slope");
      long g = std::gcd(rise, static_cast<long>(run));
      long h = rise / g;
      int e = run / static_cast<int>(g);
      int len = run / e;  // residual degree

      // residual polynomial over F_q
      FqPoly residual(len + 1, FqElem{});
      for (int k = 0; k <= len; ++k) {
        int j = i1 + k * e;
        long w = w1 - k * h;
        if (vals[j] < w) throw ConsistencyError("point below Newton polygon");
        if (vals[j] == w) residual[k] = digit_residue(fq, digits[j], w, p);
      }
      fqp_trim(residual);
      if (fqp_deg(residual) != len)
        throw ConsistencyError("residual polynomial lost its degree");

      for (auto& [sq_part, mult] : fq_sqfree_decomposition(fq, residual)) {
        if (mult == 1) {
          for (auto& [dd, prod] : fq_ddf(fq, sq_part)) {
            int count = fqp_deg(prod) / dd;
            for (int c = 0; c < count; ++c) {
              LocalPlace pl;
              pl.e = e;
              pl.f = f0 * dd;
              if (x_cluster) {
                // v(x) at this place: e * min(h/e, first shift height)
                Rat lam = make_rat(h, e);
                if (shift_val >= 0 && Rat(shift_val) < lam) lam = Rat(shift_val);
                Rat vg = lam * Rat(e);
                if (!is_integer(vg))
                  throw ConsistencyError("non-integral generator valuation");
                pl.v_gen = static_cast<int>(num(vg).get_si());
              } else {
                pl.v_gen = 0;
              }
              places.push_back(pl);
            }
          }
        } else if (!refine) {
          // Repeated residual factor: only the integral-slope, linear
          // direction is refinable at first order.
          if (e != 1)
            throw PrecisionExhausted(
                "unresolved p-adic cluster (repeated residual on fractional slope)");
          auto dd = fq_ddf(fq, sq_part);
          if (dd.empty() || dd.front().first != 1)
            throw PrecisionExhausted(
                "unresolved p-adic cluster (repeated non-linear residual)");
          auto roots = fq_roots_of_split(fq, dd.front().second);
          if (roots.empty()) throw ConsistencyError("split part with no roots");
          refine = Refinement{h, roots.front()};
        }
      }
      if (refine) break;
    }

    if (!refine) {
      int total = 0;
      for (auto& pl : places) total += pl.e * pl.f;
      if (total != m * f0)
        throw ConsistencyError("cluster places do not fill the part degree");
      return places;
    }

    // phi <- phi + p^h * lift(root); keeps degree and reduction mod p.
    Int ph = pow_int(p, static_cast<unsigned long>(refine->h));
    ZPoly lift = refine->root;
    ZPoly add(lift.size());
    for (size_t i = 0; i < lift.size(); ++i) add[i] = lift[i] * ph;
    phi = zp_add(phi, zp_reduce(add, ctx.modulus), ctx.modulus);
    if (x_cluster && (shift_val < 0 || refine->h < shift_val)) shift_val = refine->h;
  }
}

std::vector<LocalPlace> analyze(const Poly& g, const Int& p, int precision) {
  PartContext ctx;
  ctx.p = p;
  ctx.precision = precision;
  ctx.modulus = pow_int(p, static_cast<unsigned long>(precision));

  // g mod p^N as ZPoly
  ZPoly gz(g.degree() + 1);
  for (int i = 0; i <= g.degree(); ++i) gz[i] = num(g.coeff(i));
  ZPoly gmod = zp_reduce(gz, ctx.modulus);

  auto primary = fp_factor(zp_reduce(gz, p), p);
  std::vector<ZPoly> primary_parts;
  for (auto& [phi_bar, mult] : primary) {
    ZPoly part = zp_one();
    for (int i = 0; i < mult; ++i) part = zp_mul(part, phi_bar, p);
    primary_parts.push_back(part);
  }
  std::vector<ZPoly> lifted;
  if (primary.size() == 1)
    lifted.push_back(gmod);
  else
    lifted = hensel_lift_monic(gmod, primary_parts, p, ctx.modulus);

  std::vector<LocalPlace> places;
  for (size_t i = 0; i < primary.size(); ++i) {
    const ZPoly& phi_bar = primary[i].first;
    int m = primary[i].second;
    const ZPoly& part = lifted[i];
    int f0 = zp_deg(phi_bar);
    if (m == 1) {
      LocalPlace pl;
      pl.e = 1;
      pl.f = f0;
      pl.v_gen = 0;
      if (f0 == 1 && phi_bar[0] == 0) {
        // part = x - r with r = -part[0]; v(x) = v_p(r)
        Int r = (ctx.modulus - part[0]) % ctx.modulus;
        if (r == 0) throw NeedMorePrecision{};
        long v = static_cast<long>(p_valuation(r, p));
        if (v > precision / 2) throw NeedMorePrecision{};
        pl.v_gen = static_cast<int>(v);
      }
      places.push_back(pl);
    } else {
      auto sub = analyze_cluster(ctx, part, phi_bar, m);
      places.insert(places.end(), sub.begin(), sub.end());
    }
  }
  int total = 0;
  for (auto& pl : places) total += pl.e * pl.f;
  if (total != g.degree())
    throw ConsistencyError("sum of e*f does not match the field degree");
  std::sort(places.begin(), places.end(), [](const LocalPlace& a, const LocalPlace& b) {
    if (a.e != b.e) return a.e < b.e;
    if (a.f != b.f) return a.f < b.f;
    return a.v_gen < b.v_gen;
  });
  return places;
}

}  // namespace

std::vector<LocalPlace> splitting_data(const Poly& g, const Int& p) {
  if (g.is_zero() || !g.is_monic() || !g.has_integer_coeffs())
    throw InvalidInput("splitting_data expects a monic integer polynomial");
  if (g.degree() > kSplittingDegreeCap)
    throw UnsupportedDegree("splitting_data: degree > 12");
  if (!is_probable_prime(p)) throw InvalidInput("p is not prime");

  if (g.degree() == 1) {
    Rat root = -g.coeff(0);
    if (root == 0) throw InvalidInput("x is not a valid generator minimal polynomial");
    LocalPlace pl;
    pl.e = 1;
    pl.f = 1;
    pl.v_gen = static_cast<int>(p_valuation(num(root), p));
    return {pl};
  }
  if (!is_irreducible_over_Q(g))
    throw NotIrreducible("splitting_data needs an irreducible polynomial");

  for (int precision = kStartPrecision; precision <= kMaxPrecision; precision *= 2) {
    try {
      return analyze(g, p, precision);
    } catch (const NeedMorePrecision&) {
      continue;
    }
  }
  throw PrecisionExhausted("splitting_data ran out of p-adic precision");
}

}  // namespace weilres
