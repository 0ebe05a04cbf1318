#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ybst/csemi.hpp"
#include "ybst/enumerate.hpp"
#include "ybst/errors.hpp"
#include "ybst/matched.hpp"
#include "ybst/monoid.hpp"
#include "ybst/semitruss.hpp"
#include "ybst/solution.hpp"

namespace ybst {

using json = nlohmann::ordered_json;

namespace detail {

inline void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                                const char* what) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) {
        ok = true;
        break;
      }
    if (!ok) throw input_error(std::string(what) + ": unknown field \"" + it.key() + "\"");
  }
}

inline std::vector<int> int_row(const json& j, const char* what) {
  if (!j.is_array()) throw input_error(std::string(what) + ": expected an array");
  std::vector<int> row;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw input_error(std::string(what) + ": expected integers");
    row.push_back(v.get<int>());
  }
  return row;
}

inline Table int_table(const json& j, const char* what) {
  if (!j.is_array()) throw input_error(std::string(what) + ": expected an array of rows");
  Table t;
  for (const auto& row : j) t.push_back(int_row(row, what));
  return t;
}

inline json table_json(const Table& t) {
  json out = json::array();
  for (const auto& row : t) out.push_back(row);
  return out;
}

inline json maps_json(const std::vector<FinMap>& maps) {
  json out = json::array();
  for (const FinMap& f : maps) out.push_back(f.table());
  return out;
}

template <typename MapT>
inline json maps_json_t(const std::vector<MapT>& maps) {
  json out = json::array();
  for (const MapT& f : maps) out.push_back(f.table());
  return out;
}

}  // namespace detail

inline json solution_to_json(const Solution& s) {
  json j;
  j["n"] = s.n;
  j["lambda"] = detail::maps_json(s.lam);
  j["rho"] = detail::maps_json(s.rho);
  return j;
}

inline Solution solution_from_json(const json& j) {
  if (!j.is_object()) throw input_error("solution: expected a JSON object");
  detail::reject_unknown_keys(j, {"n", "lambda", "rho"}, "solution");
  if (!j.contains("n") || !j.contains("lambda") || !j.contains("rho"))
    throw input_error("solution: fields n, lambda, rho are required");
  Solution s;
  s.n = j.at("n").get<int>();
  for (const auto& row : detail::int_table(j.at("lambda"), "solution.lambda"))
    s.lam.emplace_back(s.n, row);
  for (const auto& row : detail::int_table(j.at("rho"), "solution.rho"))
    s.rho.emplace_back(s.n, row);
  validate_solution(s);
  return s;
}

inline json semitruss_to_json(const SemiTruss& t) {
  json j;
  j["m"] = t.m;
  j["add"] = detail::table_json(t.add);
  j["mul"] = detail::table_json(t.mul);
  j["lambda"] = detail::maps_json_t(t.lam);
  j["sigma"] = detail::maps_json(t.sig);
  j["unit"] = t.unit ? json(*t.unit) : json(nullptr);
  return j;
}

inline SemiTruss semitruss_from_json(const json& j) {
  if (!j.is_object()) throw input_error("semitruss: expected a JSON object");
  detail::reject_unknown_keys(j, {"m", "add", "mul", "lambda", "sigma", "unit"}, "semitruss");
  for (const char* k : {"m", "add", "mul", "lambda", "sigma"})
    if (!j.contains(k)) throw input_error(std::string("semitruss: field ") + k + " is required");
  SemiTruss t;
  t.m = j.at("m").get<int>();
  t.add = detail::int_table(j.at("add"), "semitruss.add");
  t.mul = detail::int_table(j.at("mul"), "semitruss.mul");
  for (const auto& row : detail::int_table(j.at("lambda"), "semitruss.lambda"))
    t.lam.emplace_back(t.m, row);
  for (const auto& row : detail::int_table(j.at("sigma"), "semitruss.sigma"))
    t.sig.emplace_back(t.m, row);
  if (j.contains("unit") && !j.at("unit").is_null()) t.unit = j.at("unit").get<int>();
  validate_semitruss(t);
  return t;
}

inline json system_st_to_json(const MatchedSystemST& sys) {
  json j;
  j["A1"] = semitruss_to_json(sys.a1);
  j["A2"] = semitruss_to_json(sys.a2);
  j["alpha"] = detail::maps_json_t(sys.alpha);
  j["beta"] = detail::maps_json_t(sys.beta);
  return j;
}

inline MatchedSystemST system_st_from_json(const json& j) {
  detail::reject_unknown_keys(j, {"A1", "A2", "alpha", "beta"}, "matched system");
  for (const char* k : {"A1", "A2", "alpha", "beta"})
    if (!j.contains(k)) throw input_error(std::string("matched system: field ") + k + " is required");
  MatchedSystemST sys;
  sys.a1 = semitruss_from_json(j.at("A1"));
  sys.a2 = semitruss_from_json(j.at("A2"));
  for (const auto& row : detail::int_table(j.at("alpha"), "matched system.alpha"))
    sys.alpha.emplace_back(sys.a1.m, row);
  for (const auto& row : detail::int_table(j.at("beta"), "matched system.beta"))
    sys.beta.emplace_back(sys.a2.m, row);
  validate_system_shape(sys.a1.m, sys.a2.m, sys.alpha, sys.beta);
  return sys;
}

inline json system_sol_to_json(const MatchedSystemSol& sys) {
  json j;
  j["S"] = solution_to_json(sys.rs);
  j["T"] = solution_to_json(sys.rt);
  j["alpha"] = detail::maps_json_t(sys.alpha);
  j["beta"] = detail::maps_json_t(sys.beta);
  return j;
}

inline MatchedSystemSol system_sol_from_json(const json& j) {
  detail::reject_unknown_keys(j, {"S", "T", "alpha", "beta"}, "matched system");
  for (const char* k : {"S", "T", "alpha", "beta"})
    if (!j.contains(k)) throw input_error(std::string("matched system: field ") + k + " is required");
  MatchedSystemSol sys;
  sys.rs = solution_from_json(j.at("S"));
  sys.rt = solution_from_json(j.at("T"));
  for (const auto& row : detail::int_table(j.at("alpha"), "matched system.alpha"))
    sys.alpha.emplace_back(sys.rs.n, row);
  for (const auto& row : detail::int_table(j.at("beta"), "matched system.beta"))
    sys.beta.emplace_back(sys.rt.n, row);
  validate_system_shape(sys.rs.n, sys.rt.n, sys.alpha, sys.beta);
  return sys;
}

// ---- report serialization ----

inline json flags_to_json(const PropertyFlags& f) {
  json j;
  j["lnd"] = f.lnd;
  j["rnd"] = f.rnd;
  j["bijective"] = f.bijective;
  j["involutive"] = f.involutive;
  j["idempotent"] = f.idempotent;
  return j;
}

inline json ybe_report_to_json(const YbeReport& rep) {
  json j;
  j["valid"] = rep.valid;
  json v = json::array();
  for (const YbeViolation& x : rep.violations)
    v.push_back(json{{"eq", x.eq}, {"a", x.a}, {"b", x.b}, {"c", x.c}});
  j["violations"] = v;
  return j;
}

inline json axiom_check_to_json(const AxiomCheck& c) {
  json j;
  j["ok"] = c.ok;
  if (!c.ok) j["witness"] = c.witness;
  return j;
}

inline json axiom_report_to_json(const AxiomReport& rep) {
  json j;
  j["pass"] = rep.pass();
  json ax;
  ax["add_assoc"] = axiom_check_to_json(rep.add_assoc);
  ax["mul_assoc"] = axiom_check_to_json(rep.mul_assoc);
  ax["lambda_hom"] = axiom_check_to_json(rep.lambda_hom);
  ax["sumcirc"] = axiom_check_to_json(rep.sumcirc);
  ax["csum"] = axiom_check_to_json(rep.csum);
  ax["sigma_antihom"] = axiom_check_to_json(rep.sigma_antihom);
  ax["sigma_lambda"] = axiom_check_to_json(rep.sigma_lambda);
  ax["condc1"] = axiom_check_to_json(rep.condc1);
  j["axioms"] = ax;
  if (rep.unit_declared) {
    json u;
    u["shared_identity"] = axiom_check_to_json(rep.unital_shared_identity);
    u["sigma_fixes_unit"] = axiom_check_to_json(rep.unital_sigma_fixes_unit);
    j["unital"] = u;
  }
  return j;
}

inline json system_report_to_json(const SystemReport& rep) {
  json j;
  j["valid"] = rep.valid;
  json v = json::array();
  for (const SystemViolation& x : rep.violations)
    v.push_back(json{{"condition", x.cond}, {"witness", x.where}});
  j["violations"] = v;
  return j;
}

inline json enumeration_summary_to_json(const EnumerationSummary& s) {
  json j;
  j["summary"] = true;
  j["space"] = s.space;
  j["leaves"] = s.leaves;
  j["solutions"] = s.raw;
  j["emitted"] = s.emitted;
  json p;
  for (const auto& [k, v] : s.by_properties) p[k] = v;
  j["by_properties"] = p;
  return j;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw input_error("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace ybst
