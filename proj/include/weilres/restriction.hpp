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
#ifndef WEILRES_RESTRICTION_HPP
#define WEILRES_RESTRICTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "weilres/field_factor.hpp"
#include "weilres/honda_tate.hpp"

namespace weilres {

// Weil restriction of the simple K-variety with Frobenius pi_K along the
// degree-n extension K|k of finite fields: q_K = p^a, q_k = p^(a/n).
struct RestrictionProblem {
  WeilNumber pi_K;
  int n;

  RestrictionProblem(WeilNumber w, int n_in);  // validates n >= 1 and n | a
  int a_k() const { return pi_K.a() / n; }
  Int q_k() const { return pow_int(pi_K.p(), a_k()); }
};

// chi(T) -> chi(T^n).
Poly chi_substitute(const Poly& chi, int n);

// The number field Q[pi_K] together with pi_K as one of its elements.
struct PiField {
  NumberField field;
  NFElement pi;
};
PiField pi_field(const WeilNumber& w);

enum class RadicalVerdict { irreducible, reducible_power, reducible_minus4 };

struct RadicalResult {
  RadicalVerdict verdict;
  int prime;  // the violated prime divisor for reducible_power, else 0
  std::optional<NFElement> witness;
};

// Irreducibility of X^n - alpha over F: irreducible iff alpha is not a
// q-th power for any prime q | n and, when 4 | n, alpha is not in -4 F^4.
RadicalResult radical_irreducible(const NumberField& F, const NFElement& alpha,
                                  int n);

struct DescentEntry {
  int prime;
  std::optional<NFElement> witness;
};

struct DescentReport {
  std::vector<DescentEntry> checked;  // one entry per prime divisor of n
  // True when the test decides definability exactly (ordinary elliptic
  // pi_K); otherwise the clean outcome is a necessary condition only.
  bool iff_strength;
  bool has_violation() const {
    for (const auto& e : checked)
      if (e.witness) return true;
    return false;
  }
};

// Roots pi_K = beta^q in Q[pi_K] for the prime divisors q of n (the
// obstruction test for definability over intermediate fields).
DescentReport descent_obstructions(const RestrictionProblem& prob);

struct Component {
  IsogenyClass cls;
  int multiplicity;
};

enum class Provenance { center_based, charpoly_oracle };

struct Decomposition {
  std::vector<Component> components;
  Provenance provenance;
  // Number of irreducible factors of X^n - pi_K over Q[pi_K]; -1 when the
  // field degree exceeds the quadratic factorization engine.
  int isotypic_count_center = -1;
  bool is_simple() const {
    return components.size() == 1 && components[0].multiplicity == 1;
  }
  int total_frobenius_degree() const {
    int t = 0;
    for (const auto& c : components) t += c.multiplicity * 2 * c.cls.dim;
    return t;
  }
};

// Isogeny decomposition of Res^K_k(A'): factor chi_W = chi_{A'}(T^n) over
// Q and send each irreducible factor through Honda-Tate over q_k.  m_A is
// the Brauer order of the class of pi_K.
Decomposition decompose_restriction(const RestrictionProblem& prob, int m_A);

enum class SimplicityVerdict { simple_by_theorem, not_simple, theorem_inapplicable };

struct SimplicityResult {
  SimplicityVerdict verdict;
  std::string reason;
  bool ground_truth_simple;
  DescentReport descent;
  Decomposition decomposition;
};

// Decide simplicity of the Weil restriction.  The theorem-branch verdict
// is cross-checked against the decomposition; when the descent test has
// necessary-only strength and the decomposition contradicts the would-be
// theorem conclusion, the ground truth wins and the reason says so.
SimplicityResult simplicity_verdict(const RestrictionProblem& prob);

std::string to_string(SimplicityVerdict v);
std::string to_string(RadicalVerdict v);
std::string to_string(Provenance p);

}  // namespace weilres

#endif  // WEILRES_RESTRICTION_HPP
