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
#include "weilres/sweep.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "weilres/errors.hpp"
#include "weilres/poly_text.hpp"

namespace weilres {

namespace {

std::vector<std::tuple<std::string, int, int>> shape_of(const Decomposition& d) {
  std::vector<std::tuple<std::string, int, int>> out;
  for (const Component& c : d.components)
    out.emplace_back(poly_to_string(c.cls.weil.minpoly()), c.cls.dim, c.multiplicity);
  std::sort(out.begin(), out.end());
  return out;
}

struct TripleResult {
  bool cross_ok = false;
  bool theorem_simple = false;
  bool theorem_violation = false;
  bool cyclic_applicable = false;
  bool cyclic_ok = false;
  int honda_calls = 0;
  int isotypic_checks = 0;
  std::string failure;
};

TripleResult check_triple(const Int& p, const Int& t, int n) {
  TripleResult res;

  Decomposition oracle = oracle_decompose_from_trace(t, p, n);
  BaseChange bc = base_change_class(t, p, n);
  RestrictionProblem prob(WeilNumber(bc.minpoly, p, n), n);
  Decomposition center = decompose_restriction(prob, bc.m_A);
  res.honda_calls = static_cast<int>(oracle.components.size() +
                                     center.components.size()) + 1;
  res.isotypic_checks = center.isotypic_count_center >= 0 ? 1 : 0;

  res.cross_ok = shape_of(oracle) == shape_of(center);
  if (!res.cross_ok)
    res.failure = "pipelines disagree at p=" + p.get_str() + " t=" + t.get_str() +
                  " n=" + std::to_string(n);

  SimplicityResult simp = simplicity_verdict(prob);
  if (simp.verdict == SimplicityVerdict::simple_by_theorem) {
    res.theorem_simple = true;
    if (!simp.decomposition.is_simple()) {
      res.theorem_violation = true;
      res.failure += " theorem-violation";
    }
  }

  if (t % p != 0 && t * t < 4 * p) {
    res.cyclic_applicable = true;
    res.cyclic_ok = cross_check_finite(p, t, n).agree;
    if (!res.cyclic_ok)
      res.failure += " cyclic-mismatch p=" + p.get_str() + " t=" + t.get_str() +
                     " n=" + std::to_string(n);
  }
  return res;
}

}  // namespace

SweepReport run_master_sweep(const SweepOptions& opts) {
  SweepReport rep;
  rep.p_max = opts.p_max;
  rep.n_max = opts.n_max;

  std::map<std::tuple<long, long, int>, TripleResult> memo;
  for (long pl : {5L, 7L, 11L, 13L}) {
    if (pl > opts.p_max) continue;
    Int p(pl);
    for (long a4 = 0; a4 < pl; ++a4) {
      for (long a6 = 0; a6 < pl; ++a6) {
        Int disc = (4 * Int(a4) * a4 * a4 + 27 * Int(a6) * a6) % p;
        if (disc == 0) continue;
        EllipticCurveParams curve(p, Int(a4), Int(a6));
        Int t = count_points(curve).trace;
        ++rep.curves;
        for (int n = 1; n <= opts.n_max; ++n) {
          ++rep.comparisons;
          auto key = std::make_tuple(pl, t.get_si(), n);
          auto it = memo.find(key);
          if (it == memo.end()) {
            it = memo.emplace(key, check_triple(p, t, n)).first;
            rep.honda_tate_calls += it->second.honda_calls;
            rep.isotypic_checks += it->second.isotypic_checks;
          }
          const TripleResult& r = it->second;
          if (r.cross_ok)
            ++rep.cross_pipeline_pass;
          else
            ++rep.cross_pipeline_fail;
          if (r.theorem_simple) ++rep.theorem_simple;
          if (r.theorem_violation) ++rep.theorem_violations;
          if (r.cyclic_applicable) {
            ++rep.cyclic_checked;
            if (!r.cyclic_ok) ++rep.cyclic_fail;
          }
          if (!r.failure.empty() &&
              std::find(rep.failures.begin(), rep.failures.end(), r.failure) ==
                  rep.failures.end())
            rep.failures.push_back(r.failure);
        }
      }
    }
  }
  rep.unique_triples = static_cast<int>(memo.size());
  return rep;
}

}  // namespace weilres
