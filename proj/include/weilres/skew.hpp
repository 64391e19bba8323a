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
#ifndef WEILRES_SKEW_HPP
#define WEILRES_SKEW_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "weilres/number_field.hpp"

namespace weilres {

// Finite group given by its multiplication table.  Axioms are verified at
// construction.
class GroupTable {
 public:
  explicit GroupTable(std::vector<std::vector<int>> mul);
  static GroupTable cyclic(int n);

  int order() const { return static_cast<int>(mul_.size()); }
  int compose(int a, int b) const { return mul_[a][b]; }
  int identity() const { return identity_; }
  int inverse(int a) const { return inverse_[a]; }
  GroupTable opposite() const;
  bool operator==(const GroupTable& o) const { return mul_ == o.mul_; }

 private:
  std::vector<std::vector<int>> mul_;
  int identity_ = -1;
  std::vector<int> inverse_;
};

// t : G -> Aut(Lambda) given pointwise by the image of the field
// generator.  Homomorphism and automorphism laws are verified.
class GroupAction {
 public:
  GroupAction(GroupTable group, NumberField field,
              std::vector<NFElement> generator_images);
  static GroupAction cyclic_trivial(const NumberField& field, int n);
  // Generator of Z/n acts by conjugation; n must be even (or the field
  // rational, making conjugation trivial).
  static GroupAction cyclic_conjugation(const NumberField& field, int n);

  const GroupTable& group() const { return group_; }
  const NumberField& field() const { return field_; }
  NFElement apply(int sigma, const NFElement& x) const;
  bool operator==(const GroupAction& o) const;

 private:
  GroupTable group_;
  NumberField field_;
  std::vector<NFElement> images_;
};

using GroupActionPtr = std::shared_ptr<const GroupAction>;

// Element sum lambda_g g of Lambda^t[G]; absent keys are zero.
struct SkewElement {
  GroupActionPtr action;
  std::map<int, NFElement> coeffs;
};

SkewElement skew_zero(GroupActionPtr action);
SkewElement skew_one(GroupActionPtr action);
SkewElement skew_scalar(GroupActionPtr action, const NFElement& lambda);
SkewElement skew_group_element(GroupActionPtr action, int tau);
SkewElement skew_term(GroupActionPtr action, int tau, const NFElement& lambda);
void skew_normalize(SkewElement& x);  // drop zero coefficients

SkewElement skew_add(const SkewElement& x, const SkewElement& y);
SkewElement skew_sub(const SkewElement& x, const SkewElement& y);
// (sum lambda_s s)(sum mu_t t) = sum lambda_s s(mu_t) st.
SkewElement skew_multiply(const SkewElement& x, const SkewElement& y);
bool skew_eq(const SkewElement& x, const SkewElement& y);
bool skew_is_zero(const SkewElement& x);
std::string skew_to_string(const SkewElement& x);

// Left regular matrix representation with respect to the basis G:
// L(x)[s][v] = s^{-1}(lambda_{s v^{-1}}).
std::vector<std::vector<NFElement>> left_regular_matrix(const SkewElement& x);

// sum lambda_s s  |->  sum s^{-1}(dagger(lambda_s)) s^{-1}, with dagger
// either the identity or complex conjugation on Lambda.
SkewElement rosati_involute(const SkewElement& x, bool dagger_conjugation);

// Q-basis of the center, by exact linear algebra on the commutator
// conditions against Lambda and every group element.  |G| <= 12 and
// deg(Lambda) <= 2.
std::vector<SkewElement> center_basis(GroupActionPtr action);

// Lambda-ranks of L(e_i) for a verified complete orthogonal idempotent
// system; the ranks sum to |G|.
std::vector<int> component_dims(GroupActionPtr action,
                                const std::vector<SkewElement>& idempotents);

}  // namespace weilres

#endif  // WEILRES_SKEW_HPP
