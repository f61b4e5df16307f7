#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "opineq/catalog.hpp"
#include "opineq/gen.hpp"

namespace opineq::harness {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "opineq-report/1";
inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kMaxEqualityRows = 10;

// JSON writer rendering every float with 17 significant digits so doubles
// round-trip exactly and reports are byte-comparable across runs.
std::string dump_17(const ordered_json& j, int indent = 2);

ordered_json matrix_json(const matcore::ComplexMatrix& t);
matcore::ComplexMatrix matrix_from_json(const ordered_json& j);
ordered_json vector_json(const matcore::Vector& v);
matcore::Vector vector_from_json(const ordered_json& j);
matcore::Vector read_vector_json(const std::string& path);
ordered_json params_json(const ExponentParams& p);
ExponentParams params_from_json(const ordered_json& j);
ordered_json inputs_json(const catalog::EvalInput& in);
catalog::EvalInput inputs_from_json(const ordered_json& j);

// {"id","variant","lhs":[lo,hi],"rhs":[lo,hi],"slack","verdict","equality",
//  "witness":{"generator":...,"inputs":...,"params":...}}
ordered_json result_json(const catalog::IneqResult& r, ordered_json witness);

struct CampaignConfig {
  std::vector<int> dims{2, 3, 4};
  int samples_per_dim = 50;
  std::uint64_t seed = 1;
  std::vector<std::string> ineq_ids;  // empty = every registry id
  std::string variants = "both";      // AS_PRINTED | CORRECTED | both
  std::vector<gen::Family> families;  // rotation; empty = default mix
  double width_scale = 1.0;           // scales enclosure width targets
  std::string output_path = "report.json";
  int threads = 0;  // 0 = OPINEQ_THREADS env var, then hardware count
};

CampaignConfig config_from_json(const ordered_json& j);
CampaignConfig read_config(const std::string& path);
void validate(const CampaignConfig& cfg);

struct GroupReport {
  std::string id;
  catalog::Variant variant = catalog::Variant::AS_PRINTED;
  int dim = 0;
  int count = 0;
  int holds = 0;
  int violated = 0;
  int inconclusive = 0;
  int equality_count = 0;
  double min_slack = 0.0;
  int min_slack_draw = -1;
  ordered_json min_slack_row;               // full result row incl. witness
  std::vector<ordered_json> equality_rows;  // capped at kMaxEqualityRows
  std::vector<ordered_json> violation_rows; // every VIOLATED draw, replayable
};

struct CampaignReport {
  std::string timestamp;  // the only field exempt from byte determinism
  std::uint64_t seed = 0;
  CampaignConfig config;
  std::vector<GroupReport> groups;  // sorted by (id, variant, dim)
  int corrected_violations = 0;
};

// Deterministic given cfg: draws are keyed by draw index, results are merged
// in (id, variant, dim, draw) order, so thread scheduling cannot leak in.
CampaignReport run_campaign(const CampaignConfig& cfg);
ordered_json report_json(const CampaignReport& rep);
void write_report(const CampaignReport& rep, const std::string& path);
int exit_code(const CampaignReport& rep);  // 2 = corrected violation, else 0

catalog::IneqResult eval_single(const catalog::IneqRecord& rec,
                                const catalog::EvalInput& in,
                                const ExponentParams& params,
                                double width_scale = 1.0);

// Re-evaluates a serialized result row from its embedded witness; the verdict
// and slack must reproduce within 1e-10.
catalog::IneqResult replay(const ordered_json& result_row);

struct SearchResult {
  bool confirmed = false;  // certified violation at the reported witness
  double best_slack = 0.0;
  catalog::IneqResult best;
  ordered_json witness;    // inputs + params after shrinking
  int evals = 0;
  int dim = 0;
};

// Random restarts across generator families plus coordinate-wise complex
// hill-descent on slack; confirmed violations are shrunk by principal
// submatrix reduction and rounding entries to one decimal.
SearchResult search(const std::string& id, catalog::Variant variant,
                    const std::vector<int>& dims, int budget,
                    std::uint64_t seed);

void export_range(const std::string& matrix_path, int points,
                  const std::string& out_path);

int thread_count(int requested);  // resolves OPINEQ_THREADS / hardware

}  // namespace opineq::harness
