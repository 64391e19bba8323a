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
#include "weilres/skew.hpp"

#include <algorithm>
#include <sstream>

#include "weilres/errors.hpp"

namespace weilres {

GroupTable::GroupTable(std::vector<std::vector<int>> mul) : mul_(std::move(mul)) {
  int n = order();
  if (n < 1) throw InvalidInput("empty group table");
  for (const auto& row : mul_) {
    if (static_cast<int>(row.size()) != n)
      throw InvalidInput("group table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw InvalidInput("group table entry out of range");
  }
  // identity
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = mul_[e][a] == a && mul_[a][e] == a;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw InvalidInput("group table has no identity");
  // associativity
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
          throw InvalidInput("group table is not associative");
  // inverses
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul_[a][b] == identity_ && mul_[b][a] == identity_) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] < 0) throw InvalidInput("group table element has no inverse");
  }
}

GroupTable GroupTable::cyclic(int n) {
  if (n < 1) throw InvalidInput("cyclic group needs n >= 1");
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  return GroupTable(std::move(mul));
}

GroupTable GroupTable::opposite() const {
  int n = order();
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a][b] = mul_[b][a];
  return GroupTable(std::move(mul));
}

GroupAction::GroupAction(GroupTable group, NumberField field,
                         std::vector<NFElement> generator_images)
    : group_(std::move(group)), field_(std::move(field)),
      images_(std::move(generator_images)) {
  int n = group_.order();
  if (static_cast<int>(images_.size()) != n)
    throw InvalidInput("one generator image per group element required");
  const Poly& def = field_.defining();
  NFElement zero = NFElement::from_rat(field_, Rat(0));
  for (const NFElement& img : images_) {
    if (img.field() != field_) throw InvalidInput("image in wrong field");
    // y -> img extends to a ring automorphism iff defining(img) = 0
    NFElement val = zero;
    for (int i = def.degree(); i >= 0; --i)
      val = val * img + NFElement::from_rat(field_, def.coeff(i));
    if (!val.is_zero())
      throw InvalidInput("generator image is not a root of the defining polynomial");
  }
  if (images_[group_.identity()] != NFElement::generator(field_))
    throw InvalidInput("identity must act trivially");
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (apply(s, images_[t]) != images_[group_.compose(s, t)])
        throw InvalidInput("generator images do not define a homomorphism");
}

GroupAction GroupAction::cyclic_trivial(const NumberField& field, int n) {
  std::vector<NFElement> imgs(n, NFElement::generator(field));
  return GroupAction(GroupTable::cyclic(n), field, std::move(imgs));
}

GroupAction GroupAction::cyclic_conjugation(const NumberField& field, int n) {
  NFElement gen = NFElement::generator(field);
  NFElement cgen = gen.conj();
  if (n % 2 != 0 && cgen != gen)
    throw InvalidInput("conjugation action on Z/n needs n even");
  std::vector<NFElement> imgs;
  imgs.reserve(n);
  for (int i = 0; i < n; ++i) imgs.push_back(i % 2 == 0 ? gen : cgen);
  return GroupAction(GroupTable::cyclic(n), field, std::move(imgs));
}

NFElement GroupAction::apply(int sigma, const NFElement& x) const {
  // substitute the generator image into the representative of x
  NFElement acc = NFElement::from_rat(field_, Rat(0));
  const Poly& r = x.repr();
  for (int i = r.degree(); i >= 0; --i)
    acc = acc * images_[sigma] + NFElement::from_rat(field_, r.coeff(i));
  return acc;
}

bool GroupAction::operator==(const GroupAction& o) const {
  return group_ == o.group_ && field_ == o.field_ && images_ == o.images_;
}

namespace {

void check_actions(const SkewElement& x, const SkewElement& y) {
  if (!x.action || !y.action) throw InvalidInput("skew element without action");
  if (x.action != y.action && !(*x.action == *y.action))
    throw ActionMismatch("skew elements over different group actions");
}

NFElement coeff_or_zero(const SkewElement& x, int g) {
  auto it = x.coeffs.find(g);
  if (it != x.coeffs.end()) return it->second;
  return NFElement::from_rat(x.action->field(), Rat(0));
}

}  // namespace

SkewElement skew_zero(GroupActionPtr action) { return {std::move(action), {}}; }

SkewElement skew_one(GroupActionPtr action) {
  int e = action->group().identity();
  NFElement one = NFElement::from_rat(action->field(), Rat(1));
  SkewElement r{std::move(action), {}};
  r.coeffs.emplace(e, one);
  return r;
}

SkewElement skew_scalar(GroupActionPtr action, const NFElement& lambda) {
  return skew_term(std::move(action), -1, lambda);
}

SkewElement skew_group_element(GroupActionPtr action, int tau) {
  NFElement one = NFElement::from_rat(action->field(), Rat(1));
  return skew_term(std::move(action), tau, one);
}

SkewElement skew_term(GroupActionPtr action, int tau, const NFElement& lambda) {
  if (tau < 0) tau = action->group().identity();
  if (tau >= action->group().order()) throw InvalidInput("group index out of range");
  SkewElement r{std::move(action), {}};
  if (!lambda.is_zero()) r.coeffs.emplace(tau, lambda);
  return r;
}

void skew_normalize(SkewElement& x) {
  for (auto it = x.coeffs.begin(); it != x.coeffs.end();)
    it = it->second.is_zero() ? x.coeffs.erase(it) : std::next(it);
}

SkewElement skew_add(const SkewElement& x, const SkewElement& y) {
  check_actions(x, y);
  SkewElement r = x;
  for (const auto& [g, c] : y.coeffs) {
    auto it = r.coeffs.find(g);
    if (it == r.coeffs.end())
      r.coeffs.emplace(g, c);
    else
      it->second = it->second + c;
  }
  skew_normalize(r);
  return r;
}

SkewElement skew_sub(const SkewElement& x, const SkewElement& y) {
  check_actions(x, y);
  SkewElement r = x;
  for (const auto& [g, c] : y.coeffs) {
    auto it = r.coeffs.find(g);
    if (it == r.coeffs.end())
      r.coeffs.emplace(g, -c);
    else
      it->second = it->second - c;
  }
  skew_normalize(r);
  return r;
}

SkewElement skew_multiply(const SkewElement& x, const SkewElement& y) {
  check_actions(x, y);
  const GroupTable& G = x.action->group();
  SkewElement r{x.action, {}};
  for (const auto& [s, ls] : x.coeffs) {
    for (const auto& [t, mt] : y.coeffs) {
      NFElement term = ls * x.action->apply(s, mt);
      int st = G.compose(s, t);
      auto it = r.coeffs.find(st);
      if (it == r.coeffs.end())
        r.coeffs.emplace(st, term);
      else
        it->second = it->second + term;
    }
  }
  skew_normalize(r);
  return r;
}

bool skew_eq(const SkewElement& x, const SkewElement& y) {
  check_actions(x, y);
  SkewElement d = skew_sub(x, y);
  return d.coeffs.empty();
}

bool skew_is_zero(const SkewElement& x) {
  for (const auto& [g, c] : x.coeffs)
    if (!c.is_zero()) return false;
  return true;
}

std::string skew_to_string(const SkewElement& x) {
  if (x.coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [g, c] : x.coeffs) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")";
    if (g != x.action->group().identity()) {
      out << "*s";
      // s^k labels for cyclic-style tables; plain index otherwise
      if (g != 1) out << "^" << g;
    }
  }
  return out.str();
}

std::vector<std::vector<NFElement>> left_regular_matrix(const SkewElement& x) {
  const GroupTable& G = x.action->group();
  int n = G.order();
  NFElement zero = NFElement::from_rat(x.action->field(), Rat(0));
  std::vector<std::vector<NFElement>> M(n, std::vector<NFElement>(n, zero));
  for (int s = 0; s < n; ++s)
    for (int v = 0; v < n; ++v) {
      int g = G.compose(s, G.inverse(v));
      NFElement lam = coeff_or_zero(x, g);
      M[s][v] = x.action->apply(G.inverse(s), lam);
    }
  return M;
}

SkewElement rosati_involute(const SkewElement& x, bool dagger_conjugation) {
  const GroupTable& G = x.action->group();
  SkewElement r{x.action, {}};
  for (const auto& [s, lam] : x.coeffs) {
    NFElement dag = dagger_conjugation ? lam.conj() : lam;
    int si = G.inverse(s);
    NFElement val = x.action->apply(si, dag);
    auto it = r.coeffs.find(si);
    if (it == r.coeffs.end())
      r.coeffs.emplace(si, val);
    else
      it->second = it->second + val;
  }
  skew_normalize(r);
  return r;
}

namespace {

// Coordinates of a skew element in the Q-basis {y^k g}: n*d rationals.
std::vector<Rat> skew_coordinates(const SkewElement& x, int n, int d) {
  std::vector<Rat> out(static_cast<size_t>(n) * d, Rat(0));
  for (const auto& [g, c] : x.coeffs)
    for (int k = 0; k < d; ++k) out[static_cast<size_t>(g) * d + k] = c.repr().coeff(k);
  return out;
}

// Reduced row echelon form over Q; returns pivot column per row.
std::vector<int> rref(std::vector<std::vector<Rat>>& A) {
  std::vector<int> pivots;
  size_t rows = A.size();
  if (rows == 0) return pivots;
  size_t cols = A[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && A[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(A[sel], A[r]);
    Rat inv = Rat(1) / A[r][c];
    for (size_t j = c; j < cols; ++j) A[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Rat f = A[i][c];
      for (size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<SkewElement> center_basis(GroupActionPtr action) {
  const GroupTable& G = action->group();
  const NumberField& F = action->field();
  int n = G.order();
  int d = F.degree();
  if (n > 12) throw UnsupportedDegree("center_basis supports |G| <= 12");
  if (d > 2) throw UnsupportedDegree("center_basis supports deg(Lambda) <= 2");
  int dim = n * d;

  // Generators to commute with: the field generator and every tau.
  std::vector<SkewElement> gens;
  gens.push_back(skew_scalar(action, NFElement::generator(F)));
  for (int t = 0; t < n; ++t) gens.push_back(skew_group_element(action, t));

  // Basis elements y^k g.
  std::vector<SkewElement> basis;
  for (int g = 0; g < n; ++g)
    for (int k = 0; k < d; ++k)
      basis.push_back(skew_term(action, g, NFElement(F, Poly::monomial(k))));

  std::vector<std::vector<Rat>> A;
  for (const SkewElement& s : gens) {
    for (int coord = 0; coord < dim; ++coord) A.emplace_back(dim, Rat(0));
    size_t base_row = A.size() - dim;
    for (int col = 0; col < dim; ++col) {
      SkewElement comm = skew_sub(skew_multiply(basis[col], s),
                                  skew_multiply(s, basis[col]));
      std::vector<Rat> coords = skew_coordinates(comm, n, d);
      for (int coord = 0; coord < dim; ++coord)
        A[base_row + coord][col] = coords[coord];
    }
  }

  std::vector<int> pivots = rref(A);
  std::vector<bool> is_pivot(dim, false);
  for (int pc : pivots) is_pivot[pc] = true;

  std::vector<SkewElement> out;
  for (int free_col = 0; free_col < dim; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rat> vec(dim, Rat(0));
    vec[free_col] = Rat(1);
    for (size_t r = 0; r < pivots.size(); ++r) vec[pivots[r]] = -A[r][free_col];
    SkewElement z = skew_zero(action);
    for (int g = 0; g < n; ++g) {
      std::vector<Rat> c(d);
      for (int k = 0; k < d; ++k) c[k] = vec[static_cast<size_t>(g) * d + k];
      NFElement e(F, Poly(std::move(c)));
      if (!e.is_zero()) z.coeffs.emplace(g, e);
    }
    // verify commutation exactly
    for (const SkewElement& s : gens)
      if (!skew_eq(skew_multiply(z, s), skew_multiply(s, z)))
        throw ConsistencyError("center candidate fails to commute");
    out.push_back(z);
  }
  return out;
}

std::vector<int> component_dims(GroupActionPtr action,
                                const std::vector<SkewElement>& idempotents) {
  if (idempotents.empty()) throw NotIdempotentSystem("no idempotents supplied");
  SkewElement sum = skew_zero(action);
  for (size_t i = 0; i < idempotents.size(); ++i) {
    const SkewElement& e = idempotents[i];
    if (!(*e.action == *action)) throw ActionMismatch("idempotent over wrong action");
    if (!skew_eq(skew_multiply(e, e), e))
      throw NotIdempotentSystem("element is not idempotent");
    for (size_t j = 0; j < i; ++j)
      if (!skew_is_zero(skew_multiply(e, idempotents[j])) ||
          !skew_is_zero(skew_multiply(idempotents[j], e)))
        throw NotIdempotentSystem("idempotents are not orthogonal");
    sum = skew_add(sum, e);
  }
  if (!skew_eq(sum, skew_one(action)))
    throw NotIdempotentSystem("idempotents do not sum to 1");

  int n = action->group().order();
  std::vector<int> dims;
  for (const SkewElement& e : idempotents) {
    auto M = left_regular_matrix(e);
    // rank over the (commutative, deg <= 2) coefficient field
    int rank = 0;
    int rows = n, cols = n;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
      int sel = -1;
      for (int i = r; i < rows; ++i)
        if (!M[i][c].is_zero()) {
          sel = i;
          break;
        }
      if (sel < 0) continue;
      std::swap(M[sel], M[r]);
      NFElement inv = M[r][c].inverse();
      for (int j = c; j < cols; ++j) M[r][j] = M[r][j] * inv;
      for (int i = 0; i < rows; ++i) {
        if (i == r || M[i][c].is_zero()) continue;
        NFElement f = M[i][c];
        for (int j = c; j < cols; ++j) M[i][j] = M[i][j] - f * M[r][j];
      }
      ++r;
      ++rank;
    }
    dims.push_back(rank);
  }
  int total = 0;
  for (int v : dims) total += v;
  if (total != n)
    throw ConsistencyError("component ranks do not sum to the group order");
  return dims;
}

}  // namespace weilres
