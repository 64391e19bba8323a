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
#include "weilres/poly_text.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "weilres/errors.hpp"

namespace weilres {

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= s.size();
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  Int read_uint() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw InvalidInput("expected digits at position " + std::to_string(start));
    return Int(s.substr(start, pos - start));
  }

  // coefficient := uint [ '/' uint ]
  Rat read_coef() {
    Int n = read_uint();
    skip_ws();
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      Int d = read_uint();
      if (d == 0) throw InvalidInput("zero denominator in coefficient");
      return make_rat(n, d);
    }
    return Rat(n);
  }

  // term := coef [ '*' ] [ var ] | var ;  var := 'x' [ '^' uint ]
  void read_term(int sign, std::map<int, Rat>& acc) {
    Rat coef(1);
    bool saw_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = read_coef();
      saw_coef = true;
      skip_ws();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        skip_ws();
      }
    }
    int deg = 0;
    if (peek() == 'x') {
      ++pos;
      deg = 1;
      skip_ws();
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        Int e = read_uint();
        if (e > 1000) throw InvalidInput("exponent too large");
        deg = static_cast<int>(e.get_si());
      }
    } else if (!saw_coef) {
      throw InvalidInput("expected term at position " + std::to_string(pos));
    }
    acc[deg] += sign < 0 ? Rat(-coef) : coef;
  }
};

}  // namespace

Poly parse_poly(const std::string& text) {
  Parser p(text);
  std::map<int, Rat> acc;
  if (p.eof()) throw InvalidInput("empty polynomial");
  int sign = 1;
  char c = p.peek();
  if (c == '+' || c == '-') {
    sign = c == '-' ? -1 : 1;
    ++p.pos;
  }
  p.read_term(sign, acc);
  while (!p.eof()) {
    char op = p.peek();
    if (op != '+' && op != '-')
      throw InvalidInput(std::string("unexpected character '") + op + "' in polynomial");
    ++p.pos;
    p.read_term(op == '-' ? -1 : 1, acc);
  }
  int max_deg = 0;
  for (const auto& [d, v] : acc)
    if (v != 0) max_deg = std::max(max_deg, d);
  std::vector<Rat> coeffs(max_deg + 1, Rat(0));
  for (const auto& [d, v] : acc) coeffs[d] = v;
  return Poly(std::move(coeffs));
}

std::string poly_to_string(const Poly& f) { return poly_to_string(f, "x"); }

std::string poly_to_string(const Poly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    Rat c = f.coeff(i);
    if (c == 0) continue;
    if (first) {
      if (sgn(c) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    Rat a = abs(c);
    bool show_coef = (a != 1) || i == 0;
    if (show_coef) out << rat_to_string(a);
    if (i > 0) {
      if (show_coef) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

}  // namespace weilres
