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
#include "weilres/number_field.hpp"

#include <sstream>

#include "weilres/errors.hpp"
#include "weilres/factor.hpp"

namespace weilres {

NumberField::NumberField(const Poly& defining) : defining_(defining) {
  if (defining_.is_zero() || defining_.degree() < 1)
    throw InvalidInput("number field needs a nonconstant defining polynomial");
  if (!defining_.is_monic())
    throw InvalidInput("defining polynomial must be monic");
  if (!defining_.has_integer_coeffs())
    throw InvalidInput("defining polynomial must have integer coefficients");
  if (defining_.degree() > 1 && !is_irreducible_over_Q(defining_))
    throw NotIrreducible("defining polynomial is reducible over Q");
}

NumberField NumberField::rationals() { return NumberField(Poly::x()); }

NFElement::NFElement(NumberField field, const Poly& repr)
    : field_(std::move(field)), repr_(repr % field_.defining()) {}

NFElement NFElement::from_rat(const NumberField& field, const Rat& value) {
  return NFElement(field, Poly(value));
}

NFElement NFElement::generator(const NumberField& field) {
  return NFElement(field, Poly::x());
}

Rat NFElement::rational_value() const {
  if (!is_rational()) throw InvalidInput("element is not rational");
  return repr_.coeff(0);
}

NFElement NFElement::operator-() const { return NFElement(field_, -repr_); }

namespace {
void check_same_field(const NFElement& a, const NFElement& b) {
  if (a.field() != b.field())
    throw InvalidInput("elements belong to different number fields");
}
}  // namespace

NFElement NFElement::operator+(const NFElement& o) const {
  check_same_field(*this, o);
  return NFElement(field_, repr_ + o.repr_);
}

NFElement NFElement::operator-(const NFElement& o) const {
  check_same_field(*this, o);
  return NFElement(field_, repr_ - o.repr_);
}

NFElement NFElement::operator*(const NFElement& o) const {
  check_same_field(*this, o);
  return NFElement(field_, repr_ * o.repr_);
}

NFElement NFElement::operator*(const Rat& s) const {
  return NFElement(field_, repr_ * s);
}

NFElement NFElement::operator/(const NFElement& o) const {
  return *this * o.inverse();
}

bool NFElement::operator==(const NFElement& o) const {
  return field_ == o.field_ && repr_ == o.repr_;
}

NFElement NFElement::inverse() const {
  if (is_zero()) throw InvalidInput("inverse of zero field element");
  ExtGcd e = ext_gcd(repr_, field_.defining());
  if (e.g.degree() != 0)
    throw ConsistencyError("defining polynomial not irreducible");
  return NFElement(field_, e.u * (Rat(1) / e.g.coeff(0)));
}

NFElement NFElement::pow(unsigned long e) const {
  NFElement result = from_rat(field_, Rat(1));
  NFElement base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

NFElement NFElement::conj() const {
  int d = field_.degree();
  if (d == 1) return *this;
  if (d != 2) throw UnsupportedDegree("conjugation only for degree <= 2");
  // defining y^2 + b y + c: the conjugate of y is -b - y.
  Rat b = field_.defining().coeff(1);
  Rat u = repr_.coeff(0), v = repr_.coeff(1);
  return NFElement(field_, Poly{u - v * b, -v});
}

Rat NFElement::norm() const {
  int d = field_.degree();
  if (d == 1) return repr_.coeff(0);
  if (d != 2) throw UnsupportedDegree("norm only for degree <= 2");
  Rat b = field_.defining().coeff(1), c = field_.defining().coeff(0);
  Rat u = repr_.coeff(0), v = repr_.coeff(1);
  return u * u - b * u * v + c * v * v;
}

Rat NFElement::trace() const {
  int d = field_.degree();
  if (d == 1) return repr_.coeff(0);
  if (d != 2) throw UnsupportedDegree("trace only for degree <= 2");
  Rat b = field_.defining().coeff(1);
  return Rat(2) * repr_.coeff(0) - b * repr_.coeff(1);
}

std::string NFElement::to_string(const std::string& symbol) const {
  if (repr_.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = repr_.degree(); i >= 0; --i) {
    Rat c = repr_.coeff(i);
    if (c == 0) continue;
    if (first) {
      if (sgn(c) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    Rat a = abs(c);
    bool show = (a != 1) || i == 0;
    if (show) out << rat_to_string(a);
    if (i > 0) {
      if (show) out << "*";
      out << symbol;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

int nf_cmp(const NFElement& a, const NFElement& b) {
  return poly_cmp(a.repr(), b.repr());
}

}  // namespace weilres
