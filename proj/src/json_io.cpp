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
#include "weilres/json_io.hpp"

#include "weilres/poly_text.hpp"

namespace weilres {

Json invariants_json(const IsogenyClass& cls) {
  Json inv = Json::object();
  for (const auto& [key, value] : cls.invariants) inv[key] = rat_to_string(value);
  return inv;
}

Json places_json(const IsogenyClass& cls) {
  Json arr = Json::array();
  for (const LocalPlace& pl : cls.places)
    arr.push_back(Json{{"e", pl.e}, {"f", pl.f}, {"v_gen", pl.v_gen}});
  return arr;
}

Json class_json(const IsogenyClass& cls) {
  Json j;
  j["minpoly"] = poly_to_string(cls.weil.minpoly());
  j["degree"] = cls.weil.degree();
  j["q"] = cls.weil.q().get_str();
  j["invariants"] = invariants_json(cls);
  j["places"] = places_json(cls);
  j["real_places"] = cls.real_places;
  j["m"] = cls.m;
  j["dim"] = cls.dim;
  return j;
}

Json decomposition_json(const Decomposition& dec) {
  Json j;
  j["provenance"] = to_string(dec.provenance);
  Json comps = Json::array();
  for (const Component& c : dec.components) {
    Json e;
    e["minpoly"] = poly_to_string(c.cls.weil.minpoly());
    e["dimension"] = c.cls.dim;
    e["m"] = c.cls.m;
    e["multiplicity"] = c.multiplicity;
    e["invariants"] = invariants_json(c.cls);
    comps.push_back(e);
  }
  j["components"] = comps;
  j["isotypic_components"] = static_cast<int>(dec.components.size());
  if (dec.isotypic_count_center >= 0)
    j["center_factor_count"] = dec.isotypic_count_center;
  j["simple"] = dec.is_simple();
  return j;
}

Json cyclic_report_json(const CyclicReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["g"] = rep.g;
  if (rep.cm_disc)
    j["cm_disc"] = rep.cm_disc->get_str();
  else
    j["end_field"] = "Q";
  Json comps = Json::array();
  for (const CyclicComponent& c : rep.components) {
    Json e;
    e["d"] = c.d;
    e["dimension"] = c.dimension;
    e["splits"] = c.splits;
    if (c.splits) e["half_dimension"] = c.half_dimension;
    comps.push_back(e);
  }
  j["components"] = comps;
  j["total_dimension"] = rep.total_dimension();
  return j;
}

}  // namespace weilres
