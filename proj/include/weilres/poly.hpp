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
#ifndef WEILRES_POLY_HPP
#define WEILRES_POLY_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "weilres/rational.hpp"

namespace weilres {

// Dense univariate polynomial over Q, coefficients stored lowest degree
// first.  The zero polynomial has an empty coefficient vector; otherwise
// the leading coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rat& c);
  explicit Poly(std::vector<Rat> coeffs);            // lowest degree first
  Poly(std::initializer_list<Rat> coeffs);           // lowest degree first

  static Poly x();                                   // the monomial x
  static Poly monomial(int degree, const Rat& c = Rat(1));
  // Convenience: build from integer coefficients, lowest degree first.
  static Poly from_int_coeffs(const std::vector<long>& coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const;
  bool has_integer_coeffs() const;

  // Coefficient of x^i (zero beyond the degree).
  const Rat coeff(int i) const;
  const Rat& lc() const;                             // leading coefficient
  const std::vector<Rat>& coeffs() const { return c_; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& s) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }

  // Euclidean division; o must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& o) const;
  Poly operator/(const Poly& o) const { return divmod(o).first; }
  Poly operator%(const Poly& o) const { return divmod(o).second; }
  // Exact division: throws ConsistencyError when the remainder is nonzero.
  Poly div_exact(const Poly& o) const;

  Poly derivative() const;
  Rat eval(const Rat& x) const;
  Poly monic() const;                                // divide by lc
  Poly substitute_power(int n) const;                // f(x) -> f(x^n)
  Poly scale_arg(const Rat& s) const;                // f(x) -> f(s*x)

 private:
  void trim();
  std::vector<Rat> c_;
};

// Total order used for deterministic factor lists: degree first, then
// coefficients compared from the leading one down.
int poly_cmp(const Poly& a, const Poly& b);

Poly gcd_monic(const Poly& a, const Poly& b);
// g = gcd (monic), u*a + v*b = g.
struct ExtGcd {
  Poly g, u, v;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);

Poly squarefree_part(const Poly& f);
// Yun decomposition: f = lc * prod part^mult, parts monic squarefree and
// pairwise coprime.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

// Content/primitive-part split: f = content * pp with pp a primitive
// integer polynomial with positive leading coefficient (f nonzero).
struct ContentSplit {
  Rat content;
  Poly primitive;  // integer coefficients, positive leading coefficient
};
ContentSplit content_split(const Poly& f);

// Number of distinct real roots (Sturm; computed on the squarefree part).
int count_real_roots(const Poly& f);
// Number of distinct real roots in the open interval (a, +infinity);
// requires f(a) != 0.
int count_real_roots_above(const Poly& f, const Rat& a);
// Number of distinct real roots in (a, b], requires f(a), f(b) != 0.
int count_real_roots_in(const Poly& f, const Rat& a, const Rat& b);

}  // namespace weilres

#endif  // WEILRES_POLY_HPP
