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
#include "weilres/cli.hpp"

#include <CLI11.hpp>

#include "weilres/errors.hpp"
#include "weilres/json_io.hpp"
#include "weilres/poly_text.hpp"
#include "weilres/skew.hpp"
#include "weilres/sweep.hpp"

namespace weilres {

namespace {

Int parse_int(const std::string& text) {
  try {
    return Int(text);
  } catch (const std::invalid_argument&) {
    throw InvalidInput("not an integer: '" + text + "'");
  }
}

Json descent_json(const DescentReport& rep) {
  Json j;
  j["strength"] = rep.iff_strength ? "iff" : "necessary-only";
  Json checks = Json::array();
  for (const auto& e : rep.checked) {
    Json c;
    c["prime"] = e.prime;
    c["violated"] = e.witness.has_value();
    if (e.witness) c["witness"] = e.witness->to_string();
    checks.push_back(c);
  }
  j["checked"] = checks;
  j["violations"] = rep.has_violation();
  return j;
}

Json radical_json(const RadicalResult& rad) {
  Json j;
  j["verdict"] = to_string(rad.verdict);
  if (rad.verdict == RadicalVerdict::reducible_power) j["prime"] = rad.prime;
  if (rad.witness) j["witness"] = rad.witness->to_string();
  return j;
}

Json cmd_honda_tate(const std::string& minpoly_text, const std::string& p_text,
                    int a) {
  Poly minpoly = parse_poly(minpoly_text);
  Int p = parse_int(p_text);
  if (!validate_weil(minpoly, p, a))
    throw InvalidWeil("minpoly is not a Weil polynomial for q = " + p.get_str() +
                      "^" + std::to_string(a));
  IsogenyClass cls = isogeny_class(WeilNumber(minpoly, p, a));
  Json j;
  j["command"] = "honda-tate";
  j["input"] = Json{{"minpoly", poly_to_string(minpoly)},
                    {"p", p.get_str()},
                    {"a", a}};
  j["valid"] = true;
  Json body = class_json(cls);
  for (auto& [k, v] : body.items()) j[k] = v;
  j["charpoly"] = poly_to_string(char_poly_of_class(cls));
  j["consistency"] = Json{{"brauer_reciprocity", "pass"}};
  return j;
}

Json cmd_restrict(const std::string& minpoly_text, const std::string& p_text,
                  int a, int n) {
  Poly minpoly = parse_poly(minpoly_text);
  Int p = parse_int(p_text);
  WeilNumber pi_K(minpoly, p, a);
  RestrictionProblem prob(pi_K, n);
  IsogenyClass cls_A = isogeny_class(pi_K);
  SimplicityResult simp = simplicity_verdict(prob);
  const Decomposition& dec = simp.decomposition;

  Json j;
  j["command"] = "restrict";
  j["input"] = Json{{"minpoly", poly_to_string(minpoly)},
                    {"p", p.get_str()},
                    {"a", a},
                    {"n", n},
                    {"q_K", pi_K.q().get_str()},
                    {"q_k", prob.q_k().get_str()}};
  j["pi_K_class"] = class_json(cls_A);
  j["center"] = Json{{"defining", poly_to_string(chi_substitute(minpoly, n))},
                     {"factor_count", dec.isotypic_count_center >= 0
                                          ? Json(dec.isotypic_count_center)
                                          : Json("not-computed")}};

  if (pi_K.degree() <= 2) {
    j["descent_obstructions"] = descent_json(descent_obstructions(prob));
    PiField pf = pi_field(pi_K);
    j["radical"] = radical_json(radical_irreducible(pf.field, pf.pi, n));
  } else {
    j["descent_obstructions"] = "unavailable (deg Q[pi_K] > 2)";
    j["radical"] = "unavailable (deg Q[pi_K] > 2)";
  }

  j["decomposition"] = decomposition_json(dec);
  j["simplicity"] = Json{{"verdict", to_string(simp.verdict)},
                         {"simple", simp.ground_truth_simple},
                         {"reason", simp.reason}};
  Json cons;
  cons["brauer_reciprocity"] = "pass";
  cons["dimension_additivity"] = "pass";
  cons["multiplicity_integrality"] = "pass";
  cons["isotypic_count_equality"] =
      dec.isotypic_count_center >= 0 ? "pass" : "skipped";
  j["consistency"] = cons;
  return j;
}

Json cmd_cyclic(int n, int g, const std::optional<std::string>& disc_text) {
  std::optional<Int> disc;
  if (disc_text) disc = parse_int(*disc_text);
  CyclicReport rep = decompose_cyclic(n, g, disc);
  Json j;
  j["command"] = "cyclic";
  j["input"] = Json{{"n", n}, {"g", g}};
  if (disc) j["input"]["cm_disc"] = disc->get_str();
  Json body = cyclic_report_json(rep);
  for (auto& [k, v] : body.items())
    if (k != "n" && k != "g") j[k] = v;
  j["consistency"] = Json{{"dimension_sum", "pass"}};
  return j;
}

Json cmd_skew_center(int n, const std::optional<std::string>& disc_text) {
  if (n < 1 || n > 12) throw UnsupportedDegree("skew-center supports 1 <= n <= 12");
  NumberField field = NumberField::rationals();
  std::string field_name = "Q";
  if (disc_text) {
    Int D = parse_int(*disc_text);
    if (!is_fundamental_discriminant(D))
      throw NotFundamental("not a fundamental imaginary quadratic discriminant: " +
                           D.get_str());
    Int r = D % 4;
    if (r < 0) r += 4;
    Poly defining = r == 0 ? Poly{Rat(-(D / 4)), Rat(0), Rat(1)}
                           : Poly{Rat((1 - D) / 4), Rat(-1), Rat(1)};
    field = NumberField(defining);
    field_name = "Q[y]/(" + poly_to_string(defining, "y") + ")";
  }
  bool conj_action = disc_text.has_value() && n % 2 == 0;
  auto action = std::make_shared<const GroupAction>(
      conj_action ? GroupAction::cyclic_conjugation(field, n)
                  : GroupAction::cyclic_trivial(field, n));

  std::vector<SkewElement> center = center_basis(action);

  // Component dimensions for the cyclotomic idempotent family E_d(s):
  // rational coefficients are central, so the system verifies in any
  // action and cuts the ring into its divisor blocks.
  IdempotentSet idem = cyclotomic_idempotents(n);
  std::vector<SkewElement> system;
  for (const auto& e : idem.entries) {
    SkewElement z = skew_zero(action);
    for (int k = 0; k <= e.idempotent.degree(); ++k) {
      Rat c = e.idempotent.coeff(k);
      if (c != 0)
        z = skew_add(z, skew_term(action, k, NFElement::from_rat(field, c)));
    }
    system.push_back(z);
  }
  std::vector<int> dims = component_dims(action, system);

  Json j;
  j["command"] = "skew-center";
  j["input"] = Json{{"n", n}};
  if (disc_text) j["input"]["cm_disc"] = parse_int(*disc_text).get_str();
  j["field"] = field_name;
  j["group"] = "Z/" + std::to_string(n);
  j["action"] = conj_action ? "conjugation" : "trivial";
  j["center_dimension"] = static_cast<int>(center.size());
  Json basis = Json::array();
  for (const auto& z : center) basis.push_back(skew_to_string(z));
  j["center_basis"] = basis;
  Json comp = Json::array();
  for (size_t i = 0; i < dims.size(); ++i)
    comp.push_back(Json{{"d", idem.entries[i].d}, {"rank", dims[i]}});
  j["component_dims"] = comp;
  j["consistency"] =
      Json{{"idempotent_system", "pass"}, {"rank_sum", "pass"}};
  return j;
}

Json cmd_oracle(const std::string& p_text, const std::string& a4_text,
                const std::string& a6_text, int n) {
  EllipticCurveParams curve(parse_int(p_text), parse_int(a4_text),
                            parse_int(a6_text));
  PointCount pc = count_points(curve);
  Decomposition dec = oracle_decompose_from_trace(pc.trace, curve.p, n);
  Json j;
  j["command"] = "oracle";
  j["input"] = Json{{"p", curve.p.get_str()},
                    {"a4", curve.a4.get_str()},
                    {"a6", curve.a6.get_str()},
                    {"n", n}};
  j["points"] = pc.count.get_str();
  j["trace"] = pc.trace.get_str();
  j["base_change_charpoly"] =
      poly_to_string(frobenius_power_charpoly(pc.trace, curve.p, n));
  j["decomposition"] = decomposition_json(dec);
  j["consistency"] = Json{{"hasse_bound", "pass"},
                          {"dimension_additivity", "pass"},
                          {"multiplicity_integrality", "pass"}};
  return j;
}

Json cmd_sweep(long p_max, int n_max) {
  SweepOptions opts;
  opts.p_max = p_max;
  opts.n_max = n_max;
  SweepReport rep = run_master_sweep(opts);
  Json j;
  j["command"] = "sweep";
  j["input"] = Json{{"p_max", p_max}, {"n_max", n_max}};
  j["curves"] = rep.curves;
  j["comparisons"] = rep.comparisons;
  j["unique_triples"] = rep.unique_triples;
  j["cross_pipeline"] =
      Json{{"pass", rep.cross_pipeline_pass}, {"fail", rep.cross_pipeline_fail}};
  j["isotypic_count_checks"] = rep.isotypic_checks;
  j["theorem_soundness"] = Json{{"simple_by_theorem", rep.theorem_simple},
                                {"violations", rep.theorem_violations}};
  j["cyclic_cross_check"] =
      Json{{"checked", rep.cyclic_checked}, {"fail", rep.cyclic_fail}};
  j["honda_tate_calls"] = rep.honda_tate_calls;
  j["failures"] = rep.failures;
  j["pass"] = rep.pass();
  return j;
}

}  // namespace

CliOutcome run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exact isogeny decompositions of Weil restrictions over finite fields"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent the JSON output");
  bool json_flag = true;
  app.add_flag("--json", json_flag, "emit JSON (default)");

  std::string minpoly_text, p_text, a4_text, a6_text;
  std::optional<std::string> disc_text;
  int a = 1, n = 1, g = 1, n_max = 6;
  long p_max = 13;

  CLI::App* ht = app.add_subcommand("honda-tate", "isogeny class data of a Weil number");
  ht->add_option("--minpoly", minpoly_text)->required();
  ht->add_option("--p", p_text)->required();
  ht->add_option("--a", a)->required();

  CLI::App* rs = app.add_subcommand("restrict", "decompose a Weil restriction");
  rs->add_option("--minpoly", minpoly_text)->required();
  rs->add_option("--p", p_text)->required();
  rs->add_option("--a", a)->required();
  rs->add_option("--n", n)->required();

  CLI::App* cy = app.add_subcommand("cyclic", "cyclic-extension decomposition shape");
  cy->add_option("--n", n)->required();
  cy->add_option("--g", g);
  std::string disc_buffer;
  CLI::Option* cy_disc = cy->add_option("--cm-disc", disc_buffer);

  CLI::App* sk = app.add_subcommand("skew-center", "center of the skew group ring");
  sk->add_option("--n", n)->required();
  CLI::Option* sk_disc = sk->add_option("--cm-disc", disc_buffer);

  CLI::App* oc = app.add_subcommand("oracle", "brute-force curve decomposition");
  oc->add_option("--p", p_text)->required();
  oc->add_option("--a4", a4_text)->required();
  oc->add_option("--a6", a6_text)->required();
  oc->add_option("--n", n)->required();

  CLI::App* sw = app.add_subcommand("sweep", "master cross-pipeline sweep");
  sw->add_option("--p-max", p_max);
  sw->add_option("--n-max", n_max);

  for (CLI::App* sub : {ht, rs, cy, sk, oc, sw}) sub->fallthrough();

  CliOutcome res;
  std::vector<const char*> argv;
  argv.push_back("weilres");
  for (const auto& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    res.out = app.help();
    res.exit_code = 0;
    return res;
  } catch (const CLI::ParseError& e) {
    res.err = std::string("error: ") + e.what();
    res.exit_code = 2;
    return res;
  }

  try {
    Json doc;
    if (ht->parsed()) {
      doc = cmd_honda_tate(minpoly_text, p_text, a);
    } else if (rs->parsed()) {
      doc = cmd_restrict(minpoly_text, p_text, a, n);
    } else if (cy->parsed()) {
      if (*cy_disc) disc_text = disc_buffer;
      doc = cmd_cyclic(n, g, disc_text);
    } else if (sk->parsed()) {
      if (*sk_disc) disc_text = disc_buffer;
      doc = cmd_skew_center(n, disc_text);
    } else if (oc->parsed()) {
      doc = cmd_oracle(p_text, a4_text, a6_text, n);
    } else if (sw->parsed()) {
      doc = cmd_sweep(p_max, n_max);
      res.exit_code = doc["pass"].get<bool>() ? 0 : 4;
    }
    res.out = pretty ? doc.dump(2) : doc.dump();
    res.out += "\n";
  } catch (const ConsistencyError& e) {
    res.err = std::string("internal consistency failure: ") + e.what();
    res.exit_code = 4;
  } catch (const UnsupportedDegree& e) {
    res.err = std::string("unsupported size: ") + e.what();
    res.exit_code = 3;
  } catch (const PrecisionExhausted& e) {
    res.err = std::string("unsupported size: ") + e.what();
    res.exit_code = 3;
  } catch (const Error& e) {
    // invalid Weil number, singular curve, malformed input
    res.err = std::string("error: ") + e.what();
    res.exit_code = 2;
  }
  return res;
}

}  // namespace weilres
