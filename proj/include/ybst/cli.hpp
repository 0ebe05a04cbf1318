#pragma once

#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ybst/json_io.hpp"

namespace ybst::cli {

// Exit codes: 0 success / true verdict, 1 verified-false verdict or failed
// semantic precondition, 2 input error, 3 resource error, 4 internal error.

namespace detail {

enum class InputKind { solution, semitruss, system_st, system_sol };

inline InputKind sniff(const json& j) {
  if (!j.is_object()) throw input_error("input: expected a JSON object");
  if (j.contains("n") && j.contains("lambda")) return InputKind::solution;
  if (j.contains("m") && j.contains("add")) return InputKind::semitruss;
  if (j.contains("A1")) return InputKind::system_st;
  if (j.contains("S")) return InputKind::system_sol;
  throw input_error("input: unrecognized object shape");
}

inline Solution load_solution(const std::string& path) {
  return solution_from_json(load_json_file(path));
}

inline Solution load_lnd_solution(const std::string& path) {
  Solution s = load_solution(path);
  for (int x = 0; x < s.n; ++x)
    if (!s.lam[x].is_permutation())
      throw input_error("lambda row " + std::to_string(x) +
                        " is not bijective but this command requires a left non-degenerate input");
  return s;
}

inline Word parse_word(const std::string& csv) {
  Word w;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      w.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw input_error("cannot parse word letter \"" + item + "\"");
    }
  }
  return w;
}

inline Flavor parse_flavor(const std::string& name) {
  if (name == "mult" || name == "multiplicative") return Flavor::multiplicative;
  if (name == "add" || name == "additive") return Flavor::additive;
  throw input_error("unknown flavor \"" + name + "\" (use mult or add)");
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite Yang-Baxter solutions and YB-semitrusses"};
  app.require_subcommand(1);

  std::string path, flavor_name = "mult", word_csv, audit_kind;
  int degree = 4, n = 2, jobs = 1;
  long long budget_words = kDefaultWordBudget;
  long long budget_candidates = 50'000'000;
  long long seed = 0;
  bool csv = false;
  SearchSpec spec;

  app.add_option("--seed", seed, "seed for randomized probes (reserved)");

  auto* vsol = app.add_subcommand("verify-solution", "check the braid identities of a solution table");
  vsol->add_option("file", path)->required();
  auto* vst = app.add_subcommand("verify-semitruss", "check the YB-semitruss axioms");
  vst->add_option("file", path)->required();
  auto* derive = app.add_subcommand("derive", "derived solution (y, sigma_y(x))");
  derive->add_option("file", path)->required();
  auto* invert = app.add_subcommand("invert", "inverse of a bijective solution");
  invert->add_option("file", path)->required();
  auto* diag = app.add_subcommand("diagonal", "diagonal map q(x) = lambda_x^{-1}(x)");
  diag->add_option("file", path)->required();
  auto* retract = app.add_subcommand("retract", "retract of a solution or semitruss");
  retract->add_option("file", path)->required();

  auto* grow = app.add_subcommand("grow", "graded classes of the structure/derived monoid");
  grow->add_option("file", path)->required();
  grow->add_option("--degree", degree);
  grow->add_option("--flavor", flavor_name);
  grow->add_option("--budget", budget_words);
  grow->add_flag("--csv", csv);

  auto* dims = app.add_subcommand("dims", "graded dimensions of both monoid flavors");
  dims->add_option("file", path)->required();
  dims->add_option("--degree", degree);
  dims->add_option("--budget", budget_words);
  dims->add_flag("--csv", csv);

  auto* nform = app.add_subcommand("normal-form", "greedy additive normal form of a word");
  nform->add_option("file", path)->required();
  nform->add_option("--word", word_csv)->required();

  auto* bv = app.add_subcommand("bv", "B(v) + F(v) decomposition evidence");
  bv->add_option("file", path)->required();
  bv->add_option("--degree", degree);
  bv->add_option("--budget", budget_words);

  auto* mvalid = app.add_subcommand("matched-validate", "validate a matched product system");
  mvalid->add_option("file", path)->required();
  auto* mbuild = app.add_subcommand("matched-build", "build a matched product");
  mbuild->add_option("file", path)->required();

  auto* cana = app.add_subcommand("c-analyze", "the semigroup generated by the sigma maps");
  cana->add_option("file", path)->required();
  auto* decomp = app.add_subcommand("decompose", "left-simple decomposition of C(A)");
  decomp->add_option("file", path)->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "exhaustive census of solution tables");
  enumerate_cmd->add_option("--n", n)->required();
  enumerate_cmd->add_flag("--lnd", spec.require_lnd);
  enumerate_cmd->add_flag("--rnd", spec.require_rnd);
  enumerate_cmd->add_flag("--bijective", spec.require_bijective);
  enumerate_cmd->add_flag("--involutive", spec.require_involutive);
  enumerate_cmd->add_flag("--idempotent", spec.require_idempotent);
  enumerate_cmd->add_flag("--dedup", spec.dedup);
  enumerate_cmd->add_option("--budget", budget_candidates);
  enumerate_cmd->add_option("--jobs", jobs);

  auto* audit = app.add_subcommand("audit", "census-backed property audits");
  audit->add_option("kind", audit_kind, "theorem-b | involutive-dim")->required();
  audit->add_option("--n", n)->required();
  audit->add_option("--jobs", jobs);

  std::vector<const char*> argv;
  argv.push_back("ybst");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*vsol) {
      Solution s = detail::load_solution(path);
      YbeReport rep = check_ybe(s);
      json j;
      j["type"] = "verify-solution";
      j["n"] = s.n;
      j["valid"] = rep.valid;
      json full = ybe_report_to_json(rep);
      j["violations"] = full["violations"];
      j["flags"] = flags_to_json(classify(s));
      if (!rep.valid)
        j["warning"] = "table is not a solution; property flags are plain table predicates";
      out << j.dump(2) << "\n";
      return rep.valid ? 0 : 1;
    }
    if (*vst) {
      SemiTruss t = semitruss_from_json(load_json_file(path));
      AxiomReport rep = verify_semitruss(t);
      json j;
      j["type"] = "verify-semitruss";
      j["m"] = t.m;
      j.update(axiom_report_to_json(rep));
      out << j.dump(2) << "\n";
      return rep.pass() ? 0 : 1;
    }
    if (*derive) {
      out << solution_to_json(derived_solution(detail::load_lnd_solution(path))).dump(2) << "\n";
      return 0;
    }
    if (*invert) {
      out << solution_to_json(inverse_solution(detail::load_lnd_solution(path))).dump(2) << "\n";
      return 0;
    }
    if (*diag) {
      DiagonalResult res = diagonal(detail::load_lnd_solution(path));
      json j;
      j["type"] = "diagonal";
      j["q"] = res.q.table();
      j["bijective"] = res.bijective;
      out << j.dump(2) << "\n";
      return 0;
    }
    if (*retract) {
      json in = load_json_file(path);
      json j;
      if (detail::sniff(in) == detail::InputKind::solution) {
        RetractResult res = retract_solution(solution_from_json(in));
        j["type"] = "retract-solution";
        j["well_defined"] = res.well_defined;
        j["projection"] = res.proj.table();
        j["quotient"] = solution_to_json(res.quotient);
        out << j.dump(2) << "\n";
        return res.well_defined ? 0 : 1;
      }
      SemiTrussRetract res = retract_semitruss(semitruss_from_json(in));
      j["type"] = "retract-semitruss";
      j["projection"] = res.proj.table();
      j["retract"] = semitruss_to_json(res.g);
      json audit_j;
      audit_j["well_defined"] = res.well_defined;
      audit_j["epimorphism"] = res.epimorphism;
      audit_j["nondegenerate"] = res.g_nondegenerate;
      audit_j["mul_cancellative"] = res.g_mul_cancellative;
      audit_j["sigma_determined_by_pair"] = res.sigma_determined_by_pair;
      audit_j["skew_brace_condition"] = res.skew_brace_condition;
      audit_j["skew_brace"] = res.g_is_skew_brace;
      j["audit"] = audit_j;
      out << j.dump(2) << "\n";
      return 0;
    }
    if (*grow) {
      Solution s = detail::load_lnd_solution(path);
      GradedClasses g = grow_classes(s, degree, detail::parse_flavor(flavor_name), budget_words);
      const char* fname = flavor_name == "add" || flavor_name == "additive" ? "additive"
                                                                            : "multiplicative";
      if (csv) {
        out << "flavor,degree,dim\n";
        for (std::size_t k = 0; k < g.dims.size(); ++k)
          out << fname << "," << k << "," << g.dims[k] << "\n";
      } else {
        json j;
        j["flavor"] = fname;
        j["dims"] = g.dims;
        out << j.dump(2) << "\n";
      }
      return 0;
    }
    if (*dims) {
      Solution s = detail::load_lnd_solution(path);
      GradedDims d = graded_dims(s, degree, budget_words);
      if (csv) {
        out << "flavor,degree,dim\n";
        for (std::size_t k = 0; k < d.dims_mul.size(); ++k)
          out << "multiplicative," << k << "," << d.dims_mul[k] << "\n";
        for (std::size_t k = 0; k < d.dims_add.size(); ++k)
          out << "additive," << k << "," << d.dims_add[k] << "\n";
      } else {
        json j;
        j["dims"] = json::array({json{{"flavor", "multiplicative"}, {"dims", d.dims_mul}},
                                 json{{"flavor", "additive"}, {"dims", d.dims_add}}});
        j["pi_agrees"] = d.pi_agrees;
        out << j.dump(2) << "\n";
      }
      return 0;
    }
    if (*nform) {
      Solution s = detail::load_lnd_solution(path);
      Word w = detail::parse_word(word_csv);
      GradedClasses g =
          grow_classes(s, static_cast<int>(w.size()), Flavor::additive, budget_words);
      json j;
      j["word"] = w;
      j["coefficients"] = greedy_normal_form(g, w);
      out << j.dump(2) << "\n";
      return 0;
    }
    if (*bv) {
      Solution s = detail::load_lnd_solution(path);
      BvReport rep = bv_decomposition(s, degree, budget_words);
      json j;
      j["type"] = "bv-decomposition";
      j["v"] = rep.v;
      j["classes_checked"] = rep.classes_checked;
      j["greedy_split_exact"] = rep.greedy_split_exact;
      j["all_decompose"] = rep.all_decompose;
      out << j.dump(2) << "\n";
      return 0;
    }
    if (*mvalid || *mbuild) {
      json in = load_json_file(path);
      if (detail::sniff(in) == detail::InputKind::system_st) {
        MatchedSystemST sys = system_st_from_json(in);
        if (*mvalid) {
          SystemReport rep = validate_system_semitruss(sys);
          out << system_report_to_json(rep).dump(2) << "\n";
          return rep.valid ? 0 : 1;
        }
        out << semitruss_to_json(matched_product_semitruss(sys)).dump(2) << "\n";
        return 0;
      }
      MatchedSystemSol sys = system_sol_from_json(in);
      if (*mvalid) {
        SystemReport rep = validate_system_solutions(sys);
        out << system_report_to_json(rep).dump(2) << "\n";
        return rep.valid ? 0 : 1;
      }
      out << solution_to_json(matched_product_solutions(sys)).dump(2) << "\n";
      return 0;
    }
    if (*cana) {
      json in = load_json_file(path);
      CSemigroup c = detail::sniff(in) == detail::InputKind::semitruss
                         ? generate_c(semitruss_from_json(in))
                         : generate_c(solution_from_json(in));
      int v = idempotent_exponent(c);
      json j;
      j["type"] = "c-analyze";
      j["size"] = c.elements.size();
      j["generators"] = c.gens.size();
      j["idempotents"] = c.idempotents;
      j["exponent"] = v;
      j["band_at_exponent"] = band_check(c, v);
      out << j.dump(2) << "\n";
      return 0;
    }
    if (*decomp) {
      SemiTruss t = semitruss_from_json(load_json_file(path));
      LeftSimpleReport rep = left_simple_decomposition(t);
      json j;
      j["type"] = "left-simple-decomposition";
      j["c_size"] = rep.c.elements.size();
      j["left_simple"] = rep.left_simple;
      if (rep.left_simple) {
        json blocks = json::array();
        for (const DecompositionBlock& b : rep.blocks) {
          json bj;
          bj["idempotent"] = rep.c.elements[b.idempotent].table();
          bj["group_order"] = b.group.size();
          bj["members"] = b.members;
          bj["orbit"] = b.orbit;
          bj["left_ideal"] = b.left_ideal;
          bj["restricted_bijective_nondegenerate"] = b.restricted_bijective;
          blocks.push_back(bj);
        }
        j["blocks"] = blocks;
        j["partition_ok"] = rep.partition_ok;
        j["cross_formula_ok"] = rep.cross_formula_ok;
      } else {
        json ideals = json::array();
        for (const auto& ideal : rep.principal_left_ideals) ideals.push_back(ideal);
        j["principal_left_ideals"] = ideals;
      }
      out << j.dump(2) << "\n";
      return rep.left_simple ? 0 : 1;
    }
    if (*enumerate_cmd) {
      spec.n = n;
      spec.budget = budget_candidates;
      spec.jobs = jobs;
      EnumerationSummary summary =
          enumerate(spec, [&out](const Solution& s) { out << solution_to_json(s).dump() << "\n"; });
      out << enumeration_summary_to_json(summary).dump() << "\n";
      return 0;
    }
    if (*audit) {
      json j;
      if (audit_kind == "theorem-b") {
        TheoremBAudit a = audit_theorem_b(n, jobs);
        j["type"] = "audit-theorem-b";
        j["n"] = n;
        j["checked"] = a.checked;
        j["counterexamples"] = a.counterexamples;
        out << j.dump(2) << "\n";
        return a.counterexamples == 0 ? 0 : 1;
      }
      if (audit_kind == "involutive-dim") {
        InvolutiveDimAudit a = audit_involutive_dim(n, jobs);
        j["type"] = "audit-involutive-dim";
        j["n"] = n;
        j["checked"] = a.checked;
        j["max_dim_r2"] = a.max_dim;
        j["maximizers"] = a.maximizers;
        j["involutive"] = a.involutive;
        j["maximizers_are_involutive"] = a.maximizers_are_involutive;
        out << j.dump(2) << "\n";
        return a.maximizers_are_involutive ? 0 : 1;
      }
      throw input_error("unknown audit kind \"" + audit_kind + "\"");
    }
  } catch (const input_error& e) {
    out << json{{"error", {{"kind", "input"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 2;
  } catch (const resource_error& e) {
    out << json{{"error", {{"kind", "resource"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 3;
  } catch (const precondition_error& e) {
    out << json{{"error", {{"kind", "precondition"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}

}  // namespace ybst::cli
