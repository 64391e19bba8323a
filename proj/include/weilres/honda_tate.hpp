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
#ifndef WEILRES_HONDA_TATE_HPP
#define WEILRES_HONDA_TATE_HPP

#include <string>
#include <utility>
#include <vector>

#include "weilres/padic.hpp"
#include "weilres/poly.hpp"

namespace weilres {

// Is minpoly the minimal polynomial of an algebraic integer all of whose
// complex embeddings have absolute value q^(1/2), q = p^a?  Decided
// exactly: the only admissible real roots are +-sqrt(q) (handled as the
// explicit exceptional minimal polynomials); for the rest, the polynomial
// with roots beta = alpha + q/alpha must be totally real with beta^2 < 4q,
// which Sturm counts decide without floating point.
bool validate_weil(const Poly& minpoly, const Int& p, int a);

// Frobenius of a simple abelian variety over F_q, q = p^a.
class WeilNumber {
 public:
  WeilNumber(const Poly& minpoly, const Int& p, int a);  // throws InvalidWeil

  const Poly& minpoly() const { return minpoly_; }
  const Int& p() const { return p_; }
  int a() const { return a_; }
  Int q() const { return pow_int(p_, a_); }
  int degree() const { return minpoly_.degree(); }
  bool operator==(const WeilNumber& o) const {
    return minpoly_ == o.minpoly_ && p_ == o.p_ && a_ == o.a_;
  }

 private:
  Poly minpoly_;
  Int p_;
  int a_;
};

// Honda-Tate data of the isogeny class attached to a Weil number: the
// local invariants of End°, the Brauer order m, and dim.
struct IsogenyClass {
  WeilNumber weil;
  std::vector<LocalPlace> places;  // places above p, canonical order
  int real_places;
  // Canonical invariant list: nonzero entries only, keyed "p"/"p#i" and
  // "real"/"real#i"; a single ("all", 0) entry when every invariant
  // vanishes.  Values are reduced fractions in [0, 1).
  std::vector<std::pair<std::string, Rat>> invariants;
  int m;
  int dim;
};

IsogenyClass isogeny_class(const WeilNumber& w);

// Characteristic polynomial of Frobenius of the class: minpoly^m.
Poly char_poly_of_class(const IsogenyClass& c);

}  // namespace weilres

#endif  // WEILRES_HONDA_TATE_HPP
