#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "opineq/harness.hpp"

using namespace opineq;
using harness::CampaignConfig;
using harness::CampaignReport;
using nlohmann::ordered_json;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Reports differ only in the timestamp line when deterministic.
std::string strip_timestamp(const std::string& text) {
  std::string out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find("\"timestamp\"") != std::string::npos) continue;
    out += line;
    out += '\n';
  }
  return out;
}

CampaignConfig small_config(const std::string& out_name) {
  CampaignConfig cfg;
  cfg.dims = {2, 3};
  cfg.samples_per_dim = 4;
  cfg.seed = 12345;
  cfg.ineq_ids = {"KITT2003_1_7", "REM_2_11"};
  cfg.variants = "both";
  cfg.output_path =
      (std::filesystem::temp_directory_path() / out_name).string();
  return cfg;
}

}  // namespace

TEST_CASE("full precision json dump") {
  ordered_json j;
  j["third"] = 1.0 / 3.0;
  j["arr"] = {1.5, 2.0};
  j["nested"] = {{"k", "v"}};
  const std::string text = harness::dump_17(j);
  CHECK(text.find("0.33333333333333331") != std::string::npos);
  CHECK(text.find("\"arr\": [\n    1.5,\n    2\n  ]") != std::string::npos);
  CHECK(text.find("\"nested\": {\n    \"k\": \"v\"\n  }") !=
        std::string::npos);

  // The dump always ends with a newline so files are POSIX text files.
  ordered_json simple = 2.5;
  CHECK(harness::dump_17(simple) == "2.5\n");
}

TEST_CASE("matrix and vector json round-trips preserve bits") {
  matcore::Matrix m(2, 2);
  m << matcore::Complex(1.0 / 3.0, -2.0 / 7.0), 0.1, 1e-300,
      matcore::Complex(0.0, 1e300);
  matcore::ComplexMatrix t(std::move(m));
  ordered_json j = harness::matrix_json(t);
  matcore::ComplexMatrix back = harness::matrix_from_json(j);
  CHECK(back.raw() == t.raw());
  // Serialize through text as the CLI does.
  matcore::ComplexMatrix reparsed =
      harness::matrix_from_json(ordered_json::parse(harness::dump_17(j)));
  CHECK(reparsed.raw() == t.raw());

  matcore::Vector v(3);
  v << matcore::Complex(0.2, 0.3), matcore::Complex(-1.0 / 3.0, 0.0),
      matcore::Complex(0.0, 5e-12);
  ordered_json vj = harness::vector_json(v);
  CHECK(harness::vector_from_json(vj) == v);
}

TEST_CASE("params and inputs round-trip") {
  ExponentParams p;
  p.alpha = 0.9;
  p.beta = 0.3;
  p.m = 3.0;
  p.r = 2.5;
  p.p = 3.0;
  p.q = 1.5;
  ordered_json pj = harness::params_json(p);
  ExponentParams back = harness::params_from_json(pj);
  CHECK(back.alpha == p.alpha);
  CHECK(back.q == p.q);

  catalog::EvalInput in;
  matcore::Matrix m(2, 2);
  m << 0.0, 1.0, 0.0, 0.0;
  in.t = matcore::ComplexMatrix(std::move(m));
  in.x = gen::sample_unit_vector(2, 1);
  in.a = 2.0;
  ordered_json ij = harness::inputs_json(in);
  catalog::EvalInput got = harness::inputs_from_json(ij);
  REQUIRE(got.t.has_value());
  CHECK(got.t->raw() == in.t->raw());
  REQUIRE(got.x.has_value());
  CHECK(*got.x == *in.x);
  REQUIRE(got.a.has_value());
  CHECK(*got.a == 2.0);
  CHECK(!got.s.has_value());
  CHECK(!got.hint.has_value());
}

TEST_CASE("config parsing validates keys and values") {
  ordered_json j = {{"dims", {2, 3}},
                    {"samples_per_dim", 5},
                    {"seed", 7},
                    {"ineq_ids", "all"},
                    {"variants", "both"},
                    {"width_scale", 1.0},
                    {"output", "r.json"}};
  CampaignConfig cfg = harness::config_from_json(j);
  CHECK(cfg.dims == std::vector<int>{2, 3});
  CHECK(cfg.samples_per_dim == 5);
  CHECK(cfg.ineq_ids.empty());  // "all" selects every row

  j["bogus_key"] = 1;
  CHECK_THROWS_AS(harness::config_from_json(j), ConfigInvalid);
  j.erase("bogus_key");

  j["variants"] = "sideways";
  CHECK_THROWS_AS(harness::config_from_json(j), ConfigInvalid);
  j["variants"] = "corrected";

  j["dims"] = ordered_json::array();
  CHECK_THROWS_AS(harness::config_from_json(j), ConfigInvalid);
  j["dims"] = {2};

  // Unknown ids are rejected up front, before any campaign work starts.
  j["ineq_ids"] = {"NOT_A_ROW"};
  CHECK_THROWS_AS(harness::config_from_json(j), UnknownId);
}

TEST_CASE("campaign aggregates groups deterministically") {
  CampaignConfig cfg = small_config("opineq_report_a.json");
  CampaignReport rep = harness::run_campaign(cfg);

  // KITT2003_1_7 has one variant, REM_2_11 has two; two dims each.
  CHECK(rep.groups.size() == 6);
  for (const auto& g : rep.groups) {
    CHECK(g.count == 4);
    CHECK(g.holds + g.violated + g.inconclusive == g.count);
  }
  CHECK(rep.corrected_violations == 0);
  CHECK(harness::exit_code(rep) == 0);

  ordered_json j = harness::report_json(rep);
  CHECK(j["schema"] == "opineq-report/1");
  CHECK(j["version"] == harness::kVersion);
  CHECK(j["seed"] == 12345);
  CHECK(j["groups"].size() == 6);

  // Group ordering is (id, variant, dim).
  CHECK(j["groups"][0]["id"] == "KITT2003_1_7");
  CHECK(j["groups"][0]["dim"] == 2);
  CHECK(j["groups"][2]["id"] == "REM_2_11");
  CHECK(j["groups"][2]["variant"] == "AS_PRINTED");
  CHECK(j["groups"][4]["variant"] == "CORRECTED");

  harness::write_report(rep, cfg.output_path);
  const std::string a = slurp(cfg.output_path);
  CHECK(!a.empty());
  CHECK(a.back() == '\n');

  // Identical config, fresh run: bytes match modulo the timestamp. The
  // config (including the output path) is embedded in the report, so the
  // rerun must target the same file.
  CampaignReport rep2 = harness::run_campaign(cfg);
  harness::write_report(rep2, cfg.output_path);
  const std::string b = slurp(cfg.output_path);
  CHECK(strip_timestamp(a) == strip_timestamp(b));

  std::filesystem::remove(cfg.output_path);
}

TEST_CASE("campaign is independent of the thread count") {
  CampaignConfig cfg = small_config("opineq_report_t1.json");
  cfg.threads = 1;
  CampaignReport one = harness::run_campaign(cfg);
  cfg.threads = 4;
  CampaignReport four = harness::run_campaign(cfg);
  CHECK(harness::dump_17(harness::report_json(one)["groups"]) ==
        harness::dump_17(harness::report_json(four)["groups"]));
}

TEST_CASE("rows replay to the same verdict") {
  CampaignConfig cfg = small_config("opineq_report_r.json");
  CampaignReport rep = harness::run_campaign(cfg);
  ordered_json j = harness::report_json(rep);
  int replayed = 0;
  for (const auto& g : j["groups"]) {
    if (!g["min_slack_row"].is_object()) continue;
    catalog::IneqResult again = harness::replay(g["min_slack_row"]);
    CHECK(catalog::verdict_name(again.verdict) ==
          g["min_slack_row"]["verdict"].get<std::string>());
    CHECK(again.slack ==
          doctest::Approx(g["min_slack_row"]["slack"].get<double>())
              .epsilon(1e-12));
    ++replayed;
  }
  CHECK(replayed == 6);
}

TEST_CASE("campaign validation rejects bad configs") {
  CampaignConfig cfg = small_config("never_written.json");
  cfg.dims = {};
  CHECK_THROWS_AS(harness::run_campaign(cfg), ConfigInvalid);
  cfg = small_config("never_written.json");
  cfg.samples_per_dim = 0;
  CHECK_THROWS_AS(harness::run_campaign(cfg), ConfigInvalid);
  cfg = small_config("never_written.json");
  cfg.width_scale = -1.0;
  CHECK_THROWS_AS(harness::run_campaign(cfg), ConfigInvalid);
  cfg = small_config("never_written.json");
  cfg.dims = {0};
  CHECK_THROWS_AS(harness::run_campaign(cfg), ConfigInvalid);
}

TEST_CASE("search confirms the printed dragomir failure and shrinks") {
  harness::SearchResult res =
      harness::search("DRAGOMIR", catalog::Variant::AS_PRINTED, {2, 3}, 500,
                      7);
  CHECK(res.confirmed);
  CHECK(res.best_slack < 0.0);
  CHECK(res.dim <= 2);
  CHECK(res.evals > 0);
  CHECK(res.best.verdict == catalog::Verdict::VIOLATED);
  // The stored witness replays to the same violation.
  ordered_json row = harness::result_json(res.best, res.witness);
  catalog::IneqResult again = harness::replay(row);
  CHECK(again.verdict == catalog::Verdict::VIOLATED);

  CHECK_THROWS_AS(
      harness::search("DRAGOMIR", catalog::Variant::AS_PRINTED, {2}, 0, 7),
      ConfigInvalid);
  CHECK_THROWS_AS(
      harness::search("NOPE", catalog::Variant::AS_PRINTED, {2}, 10, 7),
      UnknownId);
}

TEST_CASE("corrected violations drive the exit code") {
  CampaignReport rep;
  rep.corrected_violations = 1;
  CHECK(harness::exit_code(rep) == 2);
}

TEST_CASE("thread count resolution") {
  CHECK(harness::thread_count(3) == 3);
  setenv("OPINEQ_THREADS", "2", 1);
  CHECK(harness::thread_count(0) == 2);
  unsetenv("OPINEQ_THREADS");
  CHECK(harness::thread_count(0) >= 1);
}
