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
#ifndef WEILRES_CYCLIC_HPP
#define WEILRES_CYCLIC_HPP

#include <optional>

#include "weilres/curve_oracle.hpp"
#include "weilres/cyclotomic.hpp"

namespace weilres {

inline constexpr int kIdempotentCap = 60;

// Orthogonal idempotents of Q[X]/(X^n - 1), one per divisor d of n,
// cutting out the Q(zeta_d) factors.
struct IdempotentEntry {
  int d;
  Poly idempotent;  // E_d, degree < n
  Poly cyclo;       // Phi_d
  Poly cofactor;    // Phi'_d = (X^n - 1)/Phi_d
  Poly inverse;     // Psi_d with Psi_d Phi'_d = 1 mod Phi_d
};

struct IdempotentSet {
  int n;
  std::vector<IdempotentEntry> entries;
};

// Built by extended Euclid per divisor; the defining identities
// (sum = 1, orthogonality, idempotency mod X^n - 1) are verified exactly
// at construction.
IdempotentSet cyclotomic_idempotents(int n);

// Isogeny shape of the Weil restriction of A_K along a cyclic degree-n
// extension, A defined over the base with commutative End° defined over
// the base field: one factor W_d per divisor, of dimension phi(d) * g.
// For CM elliptic input (end_field = fundamental discriminant D), W_d
// splits into two halves iff Q(sqrt D) lies in Q(zeta_d).
struct CyclicComponent {
  int d;
  int dimension;
  bool splits;
  int half_dimension;  // phi(d)/2 when splits, else 0
};

struct CyclicReport {
  int n;
  int g;
  std::optional<Int> cm_disc;
  std::vector<CyclicComponent> components;
  int total_dimension() const {
    int t = 0;
    for (const auto& c : components) t += c.dimension;
    return t;
  }
};

CyclicReport decompose_cyclic(int n, int g, const std::optional<Int>& cm_disc);

// Splice the cyclic prediction to the finite-field charpoly pipeline for
// an ordinary trace-t curve over F_p; the dimension multisets must agree.
struct CrossCheckResult {
  bool agree;
  CyclicReport cyclic;
  Decomposition oracle;
};

CrossCheckResult cross_check_finite(const Int& p, const Int& t, int n);

}  // namespace weilres

#endif  // WEILRES_CYCLIC_HPP
