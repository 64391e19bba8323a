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
#ifndef WEILRES_NUMBER_FIELD_HPP
#define WEILRES_NUMBER_FIELD_HPP

#include <string>

#include "weilres/poly.hpp"

namespace weilres {

// Q[y]/(defining).  The defining polynomial is monic with integer
// coefficients and irreducible over Q; this is verified at construction.
class NumberField {
 public:
  explicit NumberField(const Poly& defining);
  static NumberField rationals();  // defining = y

  int degree() const { return defining_.degree(); }
  const Poly& defining() const { return defining_; }
  bool is_rationals() const { return degree() == 1; }
  bool operator==(const NumberField& o) const { return defining_ == o.defining_; }
  bool operator!=(const NumberField& o) const { return !(*this == o); }

 private:
  Poly defining_;
};

class NFElement {
 public:
  NFElement(NumberField field, const Poly& repr);
  static NFElement from_rat(const NumberField& field, const Rat& value);
  static NFElement generator(const NumberField& field);

  const NumberField& field() const { return field_; }
  const Poly& repr() const { return repr_; }
  bool is_zero() const { return repr_.is_zero(); }
  bool is_rational() const { return repr_.degree() <= 0; }
  Rat rational_value() const;  // requires is_rational()

  NFElement operator-() const;
  NFElement operator+(const NFElement& o) const;
  NFElement operator-(const NFElement& o) const;
  NFElement operator*(const NFElement& o) const;
  NFElement operator*(const Rat& s) const;
  NFElement operator/(const NFElement& o) const;
  bool operator==(const NFElement& o) const;
  bool operator!=(const NFElement& o) const { return !(*this == o); }

  NFElement inverse() const;
  NFElement pow(unsigned long e) const;
  // Galois conjugate; identity in degree 1, requires degree <= 2.
  NFElement conj() const;
  Rat norm() const;   // degree <= 2
  Rat trace() const;  // degree <= 2

  std::string to_string(const std::string& symbol = "y") const;

 private:
  NumberField field_;
  Poly repr_;  // degree < field degree
};

// Deterministic total order on elements of one field.
int nf_cmp(const NFElement& a, const NFElement& b);

}  // namespace weilres

#endif  // WEILRES_NUMBER_FIELD_HPP
