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
#ifndef WEILRES_RATIONAL_HPP
#define WEILRES_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace weilres {

// Exact arithmetic substrate.  mpq_class values are kept canonical
// (gcd(num, den) = 1, den > 0) as long as they are built through the
// helpers below or through gmpxx operators.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline const Int num(const Rat& r) { return r.get_num(); }
inline const Int den(const Rat& r) { return r.get_den(); }
inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
  return make_rat(pow_int(base.get_num(), e), pow_int(base.get_den(), e));
}

// Exact integer n-th root, or nullopt if a is not a perfect n-th power.
// For even n, negative a has no root.
inline std::optional<Int> nth_root_exact(const Int& a, unsigned long n) {
  if (n == 0) return std::nullopt;
  if (sgn(a) < 0 && n % 2 == 0) return std::nullopt;
  Int r;
  int exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), n);
  if (exact == 0) return std::nullopt;
  return r;
}

inline Int isqrt_floor(const Int& a) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm_int(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// v_p(a) for a != 0.
inline unsigned long p_valuation(const Int& a, const Int& p) {
  Int rem;
  return mpz_remove(rem.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
}

inline bool is_probable_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

inline std::string int_to_string(const Int& a) { return a.get_str(); }

// Fractions are printed "a/b", integers plain.
inline std::string rat_to_string(const Rat& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace weilres

#endif  // WEILRES_RATIONAL_HPP
