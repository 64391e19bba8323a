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
#ifndef WEILRES_JSON_IO_HPP
#define WEILRES_JSON_IO_HPP

#include <json.hpp>

#include "weilres/cyclic.hpp"
#include "weilres/restriction.hpp"

namespace weilres {

// Stable key order everywhere; fractions as "num/den" strings, unbounded
// integers as decimal strings.
using Json = nlohmann::ordered_json;

Json invariants_json(const IsogenyClass& cls);
Json places_json(const IsogenyClass& cls);
Json class_json(const IsogenyClass& cls);
Json decomposition_json(const Decomposition& dec);
Json cyclic_report_json(const CyclicReport& rep);

}  // namespace weilres

#endif  // WEILRES_JSON_IO_HPP
