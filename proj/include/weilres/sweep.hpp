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
#ifndef WEILRES_SWEEP_HPP
#define WEILRES_SWEEP_HPP

#include <string>
#include <vector>

#include "weilres/cyclic.hpp"

namespace weilres {

struct SweepOptions {
  long p_max = 13;
  int n_max = 6;
};

// Master cross-pipeline comparison: every nonsingular curve over
// F_p (p in {5,7,11,13} up to p_max), every n up to n_max.  For each
// (curve, n), the charpoly oracle and the center-based restriction
// pipeline must produce identical decompositions; theorem verdicts and
// the cyclic predictions are checked along the way.  Brauer reciprocity
// and the isotypic-count equality are asserted inside every call, so a
// violation surfaces as an exception rather than a silent count.
struct SweepReport {
  long p_max = 0;
  int n_max = 0;
  int curves = 0;
  int comparisons = 0;
  int unique_triples = 0;       // distinct (p, trace, n)
  int cross_pipeline_pass = 0;
  int cross_pipeline_fail = 0;
  int isotypic_checks = 0;
  int theorem_simple = 0;
  int theorem_violations = 0;
  int cyclic_checked = 0;
  int cyclic_fail = 0;
  int honda_tate_calls = 0;
  std::vector<std::string> failures;

  bool pass() const {
    return cross_pipeline_fail == 0 && theorem_violations == 0 && cyclic_fail == 0;
  }
};

SweepReport run_master_sweep(const SweepOptions& opts);

}  // namespace weilres

#endif  // WEILRES_SWEEP_HPP
