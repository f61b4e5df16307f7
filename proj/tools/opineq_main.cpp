// Command line front end: verify (campaigns), eval (single inputs or witness
// replay), search (counterexample hunting), range (boundary CSV), list.
// Exit codes: 0 = clean, 2 = certified violation of a corrected-variant row,
// 3 = configuration, parse, or input error.

#include <CLI11.hpp>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "opineq/catalog.hpp"
#include "opineq/harness.hpp"

namespace {

using opineq::ExponentParams;
using opineq::catalog::Variant;
using opineq::catalog::Verdict;
using opineq::harness::ordered_json;

int run_verify(const std::string& config_path) {
  opineq::harness::CampaignConfig cfg = opineq::harness::read_config(config_path);
  opineq::harness::CampaignReport rep = opineq::harness::run_campaign(cfg);
  opineq::harness::write_report(rep, cfg.output_path);
  int holds = 0, violated = 0, inconclusive = 0;
  for (const auto& g : rep.groups) {
    holds += g.holds;
    violated += g.violated;
    inconclusive += g.inconclusive;
  }
  std::cout << "report: " << cfg.output_path << "\n"
            << "groups: " << rep.groups.size() << "  holds: " << holds
            << "  violated: " << violated
            << "  inconclusive: " << inconclusive
            << "  corrected violations: " << rep.corrected_violations << "\n";
  return opineq::harness::exit_code(rep);
}

struct EvalArgs {
  std::string matrix_path;
  std::string second_path;
  std::string x_path;
  std::string y_path;
  std::string witness_path;
  std::string id;
  std::string variant;
  double width_scale = 1.0;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for numerical-radius inequalities"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run a campaign from a JSON config");
  std::string config_path;
  verify->add_option("--config", config_path, "campaign config JSON file")
      ->required();

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate one inequality on explicit inputs");
  EvalArgs ea;
  eval->add_option("--matrix", ea.matrix_path, "matrix JSON file (t)");
  eval->add_option("--second", ea.second_path, "second matrix JSON file (s)");
  eval->add_option("--x", ea.x_path, "vector JSON file");
  eval->add_option("--y", ea.y_path, "vector JSON file");
  eval->add_option("--witness", ea.witness_path,
                   "replay a serialized result row instead of reading inputs");
  eval->add_option("--ineq", ea.id, "registry id");
  eval->add_option("--variant", ea.variant, "AS_PRINTED (default) or CORRECTED");
  eval->add_option("--width-scale", ea.width_scale,
                   "scales enclosure width targets");
  double a_in = 0, b_in = 0, alpha_in = 0, beta_in = 0, gamma_in = 0,
         delta_in = 0, m_in = 0, r_in = 0, s_in = 0, p_in = 0, q_in = 0;
  auto* a_opt = eval->add_option("--a", a_in, "scalar input a");
  auto* b_opt = eval->add_option("--b", b_in, "scalar input b");
  auto* alpha_opt = eval->add_option("--alpha", alpha_in, "weight alpha");
  auto* beta_opt = eval->add_option("--beta", beta_in, "weight beta");
  auto* gamma_opt = eval->add_option("--gamma", gamma_in, "weight gamma");
  auto* delta_opt = eval->add_option("--delta", delta_in, "weight delta");
  auto* m_opt = eval->add_option("--m", m_in, "power m");
  auto* r_opt = eval->add_option("--r", r_in, "power r");
  auto* s_opt = eval->add_option("--s", s_in, "power s");
  auto* p_opt = eval->add_option("--p", p_in, "conjugate exponent p");
  auto* q_opt = eval->add_option("--q", q_in, "conjugate exponent q");

  // search
  auto* search = app.add_subcommand("search", "hunt for minimum-slack witnesses");
  std::string search_id, search_variant = "AS_PRINTED";
  std::vector<int> search_dims;
  int budget = 1000;
  std::uint64_t search_seed = 7;
  search->add_option("--ineq", search_id, "registry id")->required();
  search->add_option("--variant", search_variant, "AS_PRINTED or CORRECTED");
  search->add_option("--dims", search_dims, "dimensions to explore")
      ->delimiter(',');
  search->add_option("--budget", budget, "evaluation budget");
  search->add_option("--seed", search_seed, "random seed");

  // range
  auto* range = app.add_subcommand("range", "export numerical range boundary CSV");
  std::string range_matrix, range_out;
  int points = 720;
  range->add_option("--matrix", range_matrix, "matrix JSON file")->required();
  range->add_option("--points", points, "number of support directions (>= 3)");
  range->add_option("--out", range_out, "output CSV path")->required();

  // list
  auto* list = app.add_subcommand("list", "print the inequality registry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (verify->parsed()) return run_verify(config_path);

    if (eval->parsed()) {
      opineq::catalog::IneqResult result;
      ordered_json witness;
      if (!ea.witness_path.empty()) {
        std::ifstream in(ea.witness_path, std::ios::binary);
        if (!in) throw opineq::IoFailure("cannot open " + ea.witness_path);
        ordered_json row;
        try {
          row = ordered_json::parse(in);
        } catch (const nlohmann::json::exception& ex) {
          throw opineq::ParseError(std::string(ea.witness_path) + ": " + ex.what());
        }
        result = opineq::harness::replay(row);
        witness = row.value("witness", ordered_json::object());
      } else {
        if (ea.id.empty())
          throw opineq::ConfigInvalid("eval requires --ineq (or --witness)");
        std::optional<Variant> variant;
        if (!ea.variant.empty())
          variant = opineq::catalog::variant_from_name(ea.variant);
        const auto& rec = opineq::catalog::resolve_record(ea.id, variant);
        opineq::catalog::EvalInput in;
        if (!ea.matrix_path.empty())
          in.t = opineq::matcore::read_matrix_json(ea.matrix_path);
        if (!ea.second_path.empty())
          in.s = opineq::matcore::read_matrix_json(ea.second_path);
        if (!ea.x_path.empty())
          in.x = opineq::harness::read_vector_json(ea.x_path);
        if (!ea.y_path.empty())
          in.y = opineq::harness::read_vector_json(ea.y_path);
        if (a_opt->count()) in.a = a_in;
        if (b_opt->count()) in.b = b_in;
        ExponentParams params;
        if (alpha_opt->count()) params.alpha = alpha_in;
        if (beta_opt->count()) params.beta = beta_in;
        if (gamma_opt->count()) params.gamma = gamma_in;
        if (delta_opt->count()) params.delta = delta_in;
        if (m_opt->count()) params.m = m_in;
        if (r_opt->count()) params.r = r_in;
        if (s_opt->count()) params.s = s_in;
        if (p_opt->count()) {
          params.p = p_in;
          params.q = q_opt->count() ? q_in : p_in / (p_in - 1.0);
        } else if (q_opt->count()) {
          params.q = q_in;
          params.p = q_in / (q_in - 1.0);
        }
        result = opineq::harness::eval_single(rec, in, params, ea.width_scale);
        witness["inputs"] = opineq::harness::inputs_json(in);
        witness["params"] = opineq::harness::params_json(params);
      }
      std::cout << opineq::harness::dump_17(
          opineq::harness::result_json(result, std::move(witness)));
      return result.variant == Variant::CORRECTED &&
                     result.verdict == Verdict::VIOLATED
                 ? 2
                 : 0;
    }

    if (search->parsed()) {
      Variant v = opineq::catalog::variant_from_name(search_variant);
      opineq::harness::SearchResult sr =
          opineq::harness::search(search_id, v, search_dims, budget, search_seed);
      ordered_json o;
      o["confirmed"] = sr.confirmed;
      o["best_slack"] = sr.best_slack;
      o["evals"] = sr.evals;
      o["dim"] = sr.dim;
      o["row"] = opineq::harness::result_json(sr.best, sr.witness);
      std::cout << opineq::harness::dump_17(o);
      return sr.confirmed && v == Variant::CORRECTED ? 2 : 0;
    }

    if (range->parsed()) {
      opineq::harness::export_range(range_matrix, points, range_out);
      std::cout << "wrote " << range_out << "\n";
      return 0;
    }

    if (list->parsed()) {
      for (const auto& row : opineq::catalog::list_registry()) {
        std::printf("%-16s %-11s %-20s %-16s %s\n", row.id.c_str(),
                    opineq::catalog::variant_name(row.variant).c_str(),
                    row.paper_eq.c_str(),
                    opineq::catalog::kind_name(row.kind).c_str(),
                    row.hypothesis.c_str());
      }
      std::printf("%zu rows\n", opineq::catalog::list_registry().size());
      return 0;
    }
  } catch (const opineq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
