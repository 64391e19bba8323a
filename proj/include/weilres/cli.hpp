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
#ifndef WEILRES_CLI_HPP
#define WEILRES_CLI_HPP

#include <string>
#include <vector>

namespace weilres {

// Exit codes: 0 success, 2 invalid input (bad Weil number, singular curve,
// malformed flags), 3 unsupported size/degree, 4 internal consistency
// failure.
struct CliOutcome {
  int exit_code = 0;
  std::string out;  // JSON document (or help text)
  std::string err;  // human-readable message on failure
};

CliOutcome run_cli(const std::vector<std::string>& args);

}  // namespace weilres

#endif  // WEILRES_CLI_HPP
