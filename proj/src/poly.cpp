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
#include "weilres/poly.hpp"

#include <algorithm>

#include "weilres/errors.hpp"

namespace weilres {

Poly::Poly(const Rat& c) {
  if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

Poly Poly::x() { return monomial(1); }

Poly Poly::monomial(int degree, const Rat& c) {
  Poly p;
  if (c == 0) return p;
  p.c_.assign(degree + 1, Rat(0));
  p.c_.back() = c;
  return p;
}

Poly Poly::from_int_coeffs(const std::vector<long>& coeffs) {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool Poly::is_monic() const { return !c_.empty() && c_.back() == 1; }

bool Poly::has_integer_coeffs() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Rat& r) { return is_integer(r); });
}

const Rat Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
  return c_[i];
}

const Rat& Poly::lc() const {
  if (c_.empty()) throw InvalidInput("leading coefficient of zero polynomial");
  return c_.back();
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(r));
}

Poly Poly::operator*(const Rat& s) const {
  if (s == 0) return Poly();
  Poly r(*this);
  for (auto& c : r.c_) c *= s;
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& o) const {
  if (o.is_zero()) throw InvalidInput("polynomial division by zero");
  Poly rem(*this);
  if (degree() < o.degree()) return {Poly(), rem};
  std::vector<Rat> q(degree() - o.degree() + 1, Rat(0));
  const Rat& lead = o.lc();
  while (!rem.is_zero() && rem.degree() >= o.degree()) {
    int shift = rem.degree() - o.degree();
    Rat f = rem.lc() / lead;
    q[shift] = f;
    // rem -= f * x^shift * o
    for (int i = 0; i <= o.degree(); ++i)
      rem.c_[i + shift] -= f * o.c_[i];
    rem.trim();
  }
  return {Poly(std::move(q)), rem};
}

Poly Poly::div_exact(const Poly& o) const {
  auto [q, r] = divmod(o);
  if (!r.is_zero()) throw ConsistencyError("inexact polynomial division");
  return q;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return Poly(std::move(r));
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) throw InvalidInput("monic of zero polynomial");
  return *this * (Rat(1) / lc());
}

Poly Poly::substitute_power(int n) const {
  if (n < 1) throw InvalidInput("substitute_power requires n >= 1");
  if (is_zero()) return Poly();
  std::vector<Rat> r(static_cast<size_t>(degree()) * n + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i * n] = c_[i];
  return Poly(std::move(r));
}

Poly Poly::scale_arg(const Rat& s) const {
  std::vector<Rat> r(c_);
  Rat f(1);
  for (size_t i = 0; i < r.size(); ++i) {
    r[i] *= f;
    f *= s;
  }
  return Poly(std::move(r));
}

int poly_cmp(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = a.degree(); i >= 0; --i) {
    int c = cmp(a.coeff(i), b.coeff(i));
    if (c != 0) return c;
  }
  return 0;
}

Poly gcd_monic(const Poly& a, const Poly& b) {
  Poly f(a), g(b);
  while (!g.is_zero()) {
    Poly r = f % g;
    f = g;
    g = r;
  }
  if (f.is_zero()) return f;
  return f.monic();
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  Poly r0(a), r1(b);
  Poly u0{Rat(1)}, u1, v0, v1{Rat(1)};
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = r1;
    r1 = r;
    Poly u = u0 - q * u1;
    u0 = u1;
    u1 = u;
    Poly v = v0 - q * v1;
    v0 = v1;
    v1 = v;
  }
  if (r0.is_zero()) return {r0, u0, v0};
  Rat inv = Rat(1) / r0.lc();
  return {r0 * inv, u0 * inv, v0 * inv};
}

Poly squarefree_part(const Poly& f) {
  if (f.is_zero()) throw InvalidInput("squarefree part of zero");
  if (f.degree() == 0) return Poly(Rat(1));
  Poly g = gcd_monic(f, f.derivative());
  return f.div_exact(g).monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) throw InvalidInput("squarefree decomposition of zero");
  std::vector<std::pair<Poly, int>> out;
  Poly fm = f.monic();
  if (fm.degree() == 0) return out;
  // Yun's algorithm.
  Poly d = fm.derivative();
  Poly a = gcd_monic(fm, d);
  Poly b = fm.div_exact(a);
  Poly c = d.div_exact(a);
  int i = 1;
  while (b.degree() > 0) {
    Poly t = c - b.derivative();
    Poly part = gcd_monic(b, t);
    if (part.degree() > 0) out.emplace_back(part, i);
    b = b.div_exact(part);
    c = t.div_exact(part);
    ++i;
  }
  return out;
}

ContentSplit content_split(const Poly& f) {
  if (f.is_zero()) throw InvalidInput("content of zero polynomial");
  Int den_lcm(1), num_gcd(0);
  for (const Rat& c : f.coeffs()) den_lcm = lcm_int(den_lcm, den(c));
  std::vector<Rat> scaled;
  scaled.reserve(f.coeffs().size());
  for (const Rat& c : f.coeffs()) {
    Rat v = c * Rat(den_lcm);
    scaled.push_back(v);
    num_gcd = gcd_int(num_gcd, num(v));
  }
  if (sgn(f.lc()) < 0) num_gcd = -num_gcd;
  std::vector<Rat> prim;
  prim.reserve(scaled.size());
  for (const Rat& v : scaled) prim.push_back(v / Rat(num_gcd));
  return {make_rat(num_gcd, den_lcm), Poly(std::move(prim))};
}

namespace {

// Sturm sequence of the squarefree part.
std::vector<Poly> sturm_sequence(const Poly& f) {
  std::vector<Poly> seq;
  Poly p0 = squarefree_part(f);
  if (p0.degree() <= 0) return seq;
  seq.push_back(p0);
  seq.push_back(p0.derivative());
  while (!seq.back().is_zero()) {
    const Poly& a = seq[seq.size() - 2];
    const Poly& b = seq.back();
    seq.push_back(-(a % b));
  }
  seq.pop_back();  // drop the final zero
  return seq;
}

int sign_at(const Poly& p, const Rat& x) { return sgn(p.eval(x)); }

int sign_at_inf(const Poly& p, bool positive) {
  int s = sgn(p.lc());
  if (!positive && p.degree() % 2 == 1) s = -s;
  return s;
}

template <class SignFn>
int variations(const std::vector<Poly>& seq, SignFn sign_of) {
  int var = 0, prev = 0;
  for (const Poly& p : seq) {
    int s = sign_of(p);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

}  // namespace

int count_real_roots(const Poly& f) {
  auto seq = sturm_sequence(f);
  if (seq.empty()) return 0;
  int at_neg = variations(seq, [](const Poly& p) { return sign_at_inf(p, false); });
  int at_pos = variations(seq, [](const Poly& p) { return sign_at_inf(p, true); });
  return at_neg - at_pos;
}

int count_real_roots_above(const Poly& f, const Rat& a) {
  auto seq = sturm_sequence(f);
  if (seq.empty()) return 0;
  if (seq[0].eval(a) == 0)
    throw InvalidInput("Sturm endpoint is a root");
  int at_a = variations(seq, [&](const Poly& p) { return sign_at(p, a); });
  int at_pos = variations(seq, [](const Poly& p) { return sign_at_inf(p, true); });
  return at_a - at_pos;
}

int count_real_roots_in(const Poly& f, const Rat& a, const Rat& b) {
  auto seq = sturm_sequence(f);
  if (seq.empty()) return 0;
  if (seq[0].eval(a) == 0 || seq[0].eval(b) == 0)
    throw InvalidInput("Sturm endpoint is a root");
  int at_a = variations(seq, [&](const Poly& p) { return sign_at(p, a); });
  int at_b = variations(seq, [&](const Poly& p) { return sign_at(p, b); });
  return at_a - at_b;
}

}  // namespace weilres
