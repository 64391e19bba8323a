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
#include "weilres/cyclotomic.hpp"

#include <algorithm>

#include "weilres/errors.hpp"

namespace weilres {

std::vector<int> divisors_of(int n) {
  if (n < 1) throw InvalidInput("divisors_of needs n >= 1");
  std::vector<int> out;
  for (int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int euler_phi(int n) {
  if (n < 1) throw InvalidInput("euler_phi needs n >= 1");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

Poly cyclotomic(int d) {
  if (d < 1) throw InvalidInput("cyclotomic needs d >= 1");
  // (x^d - 1) divided by the cyclotomic polynomials of the proper divisors.
  std::vector<Rat> c(d + 1, Rat(0));
  c[0] = Rat(-1);
  c[d] = Rat(1);
  Poly f(std::move(c));
  for (int e : divisors_of(d)) {
    if (e == d) continue;
    f = f.div_exact(cyclotomic(e));
  }
  return f;
}

namespace {

// Squarefree test by trial division; arguments here stay small.
bool is_squarefree_int(Int n) {
  n = abs(n);
  if (n == 0) return false;
  for (Int p(2); p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return false;
  }
  return true;
}

// Largest square divisor stripped: n = s * t^2 with s squarefree.
Int squarefree_kernel(Int n) {
  int sign = sgn(n);
  n = abs(n);
  Int s(1);
  for (Int p(2); p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2 == 1) s *= p;
  }
  s *= n;  // leftover prime
  return sign < 0 ? Int(-s) : s;
}

}  // namespace

bool is_fundamental_discriminant(const Int& disc) {
  if (sgn(disc) >= 0) return false;
  Int r = disc % 4;
  if (r < 0) r += 4;
  if (r == 1) return is_squarefree_int(disc);
  if (r == 0) {
    Int m = disc / 4;
    Int mr = m % 4;
    if (mr < 0) mr += 4;
    return (mr == 2 || mr == 3) && is_squarefree_int(m);
  }
  return false;
}

bool quad_in_cyclotomic(const Int& disc, int d) {
  if (!is_fundamental_discriminant(disc))
    throw NotFundamental("not a fundamental imaginary quadratic discriminant: " +
                         disc.get_str());
  if (d < 1) throw InvalidInput("quad_in_cyclotomic needs d >= 1");
  return Int(d) % abs(disc) == 0;
}

Int fundamental_discriminant(const Int& d) {
  if (sgn(d) >= 0) throw InvalidInput("expected a negative integer");
  Int s = squarefree_kernel(d);
  Int r = s % 4;
  if (r < 0) r += 4;
  return r == 1 ? s : 4 * s;
}

}  // namespace weilres
