#include "opineq/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "opineq/radius.hpp"

namespace opineq::harness {
namespace {

using catalog::EvalInput;
using catalog::IneqRecord;
using catalog::IneqResult;
using catalog::InputKind;
using catalog::Variant;
using matcore::Complex;
using matcore::ComplexMatrix;
using matcore::Matrix;
using matcore::Vector;

void dump_value(const ordered_json& j, std::string& out, int indent,
                int depth) {
  switch (j.type()) {
    case nlohmann::detail::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      std::size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        out.append(static_cast<std::size_t>(indent) * (depth + 1), ' ');
        out += ordered_json(it.key()).dump();
        out += ": ";
        dump_value(it.value(), out, indent, depth + 1);
        if (i + 1 < j.size()) out += ',';
        out += '\n';
      }
      out.append(static_cast<std::size_t>(indent) * depth, ' ');
      out += '}';
      return;
    }
    case nlohmann::detail::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        out.append(static_cast<std::size_t>(indent) * (depth + 1), ' ');
        dump_value(j[i], out, indent, depth + 1);
        if (i + 1 < j.size()) out += ',';
        out += '\n';
      }
      out.append(static_cast<std::size_t>(indent) * depth, ' ');
      out += ']';
      return;
    }
    case nlohmann::detail::value_t::number_float: {
      double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t row_tag(const IneqRecord& rec) {
  return fnv1a(rec.id + ":" + catalog::variant_name(rec.variant));
}

std::string iso_timestamp() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoFailure("read failed on " + path);
  return ss.str();
}

ordered_json parse_json(const std::string& text, const std::string& what) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(what + ": " + e.what());
  }
}

const std::vector<gen::Family> kDefaultFamilies = {
    gen::Family::GINIBRE,         gen::Family::GUE,
    gen::Family::HAAR_UNITARY,    gen::Family::NORMAL,
    gen::Family::NILPOTENT_SHIFT, gen::Family::RANK_ONE,
};

gen::Family pick_family(const std::vector<gen::Family>& fams, int dim,
                        int draw) {
  gen::Family f = fams[static_cast<std::size_t>(draw) % fams.size()];
  if (f == gen::Family::PARAM_2X2 && dim != 2) f = gen::Family::GINIBRE;
  return f;
}

struct Drawn {
  EvalInput in;
  ordered_json generator;
};

// Materializes inputs matching the row's input kind. Structured two-operator
// hypotheses (PSD with selfadjoint product; modulus-commuting pair) come from
// their dedicated pair families regardless of the requested rotation.
Drawn make_inputs(const IneqRecord& rec, gen::Family fam, int dim,
                  std::uint64_t seed, int draw) {
  Drawn d;
  auto unit = [&](std::uint64_t tag) {
    return gen::sample_unit_vector(
        dim, gen::mix_seed(seed, tag, static_cast<std::uint64_t>(draw)));
  };
  switch (rec.kind) {
    case InputKind::OPERATOR: {
      gen::GeneratorSpec gs{fam, dim, seed, static_cast<std::uint64_t>(draw), {}};
      d.in.t = gen::sample(gs).first;
      break;
    }
    case InputKind::OPERATOR_PAIR: {
      gen::GeneratorSpec g1{fam, dim, seed, 2 * static_cast<std::uint64_t>(draw), {}};
      gen::GeneratorSpec g2{fam, dim, seed, 2 * static_cast<std::uint64_t>(draw) + 1, {}};
      d.in.t = gen::sample(g1).first;
      d.in.s = gen::sample(g2).first;
      break;
    }
    case InputKind::PSD_VECTOR: {
      gen::GeneratorSpec gs{fam, dim, seed, static_cast<std::uint64_t>(draw), {}};
      d.in.t = ComplexMatrix(matcore::abs_op(gen::sample(gs).first).matrix());
      d.in.x = unit(0xA11);
      d.in.y = unit(0xB22);
      break;
    }
    case InputKind::PAIR_VECTOR: {
      fam = rec.id == "KITTANEH_FG_1_4" ? gen::Family::FG_PAIR
                                        : gen::Family::REID_PAIR;
      gen::GeneratorSpec gs{fam, dim, seed, static_cast<std::uint64_t>(draw), {}};
      gen::Sample smp = gen::sample(gs);
      d.in.t = smp.first;
      d.in.s = smp.second;
      d.in.hint = smp.hint;
      d.in.x = unit(0xA11);
      d.in.y = unit(0xB22);
      break;
    }
    case InputKind::OPERATOR_VECTOR: {
      gen::GeneratorSpec gs{fam, dim, seed, static_cast<std::uint64_t>(draw), {}};
      d.in.t = gen::sample(gs).first;
      d.in.x = unit(0xA11);
      d.in.y = unit(0xB22);
      break;
    }
    case InputKind::SCALAR: {
      auto [a, b] = gen::sample_scalars(
          gen::mix_seed(seed, 0x5CA1, static_cast<std::uint64_t>(draw)));
      d.in.a = a;
      d.in.b = b;
      break;
    }
  }
  d.generator = ordered_json{{"family", gen::family_name(fam)},
                             {"dim", dim},
                             {"seed", seed},
                             {"draw", draw}};
  return d;
}

ExponentParams draw_params(const IneqRecord& rec, std::uint64_t seed,
                           int draw) {
  return gen::sample_params(
      rec.profile,
      gen::mix_seed(seed ^ row_tag(rec), 0xFA57, static_cast<std::uint64_t>(draw)));
}

std::string normalize_variants(const std::string& v) {
  std::string n = v;
  std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) {
    return static_cast<char>(std::toupper(c));
  });
  std::replace(n.begin(), n.end(), '-', '_');
  if (n == "BOTH") return "both";
  if (n == "AS_PRINTED" || n == "CORRECTED") return n;
  throw ConfigInvalid("variants must be AS_PRINTED, CORRECTED, or both");
}

}  // namespace

std::string dump_17(const ordered_json& j, int indent) {
  std::string out;
  dump_value(j, out, indent, 0);
  out += '\n';
  return out;
}

ordered_json matrix_json(const ComplexMatrix& t) {
  int n = t.dim();
  ordered_json re = ordered_json::array();
  ordered_json im = ordered_json::array();
  for (int i = 0; i < n; ++i) {
    ordered_json rrow = ordered_json::array();
    ordered_json irow = ordered_json::array();
    for (int k = 0; k < n; ++k) {
      rrow.push_back(t.raw()(i, k).real());
      irow.push_back(t.raw()(i, k).imag());
    }
    re.push_back(std::move(rrow));
    im.push_back(std::move(irow));
  }
  return ordered_json{{"n", n}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const ordered_json& j) {
  // Shortest-round-trip dump preserves every double bit-exactly.
  return matcore::parse_matrix_json(j.dump());
}

ordered_json vector_json(const Vector& v) {
  ordered_json re = ordered_json::array();
  ordered_json im = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  return ordered_json{{"n", static_cast<int>(v.size())},
                      {"re", std::move(re)},
                      {"im", std::move(im)}};
}

Vector vector_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw ParseError("vector JSON must be an object with re and im arrays");
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (!re.is_array() || !im.is_array() || re.size() != im.size() || re.empty())
    throw ParseError("vector JSON re/im must be equal-length non-empty arrays");
  Vector v(static_cast<Eigen::Index>(re.size()));
  for (std::size_t i = 0; i < re.size(); ++i) {
    if (!re[i].is_number() || !im[i].is_number())
      throw ParseError("vector JSON entries must be numbers");
    v(static_cast<Eigen::Index>(i)) =
        Complex(re[i].get<double>(), im[i].get<double>());
  }
  if (!v.allFinite()) throw ParseError("vector JSON entries must be finite");
  return v;
}

Vector read_vector_json(const std::string& path) {
  return vector_from_json(parse_json(read_file(path), path));
}

ordered_json params_json(const ExponentParams& p) {
  return ordered_json{{"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma},
                      {"delta", p.delta}, {"m", p.m},       {"r", p.r},
                      {"s", p.s},         {"p", p.p},       {"q", p.q}};
}

ExponentParams params_from_json(const ordered_json& j) {
  if (!j.is_object()) throw ParseError("params JSON must be an object");
  ExponentParams p;
  p.alpha = j.value("alpha", p.alpha);
  p.beta = j.value("beta", p.beta);
  p.gamma = j.value("gamma", p.gamma);
  p.delta = j.value("delta", p.delta);
  p.m = j.value("m", p.m);
  p.r = j.value("r", p.r);
  p.s = j.value("s", p.s);
  p.p = j.value("p", p.p);
  p.q = j.value("q", p.q);
  return p;
}

ordered_json inputs_json(const EvalInput& in) {
  ordered_json o = ordered_json::object();
  if (in.t) o["t"] = matrix_json(*in.t);
  if (in.s) o["s"] = matrix_json(*in.s);
  if (in.hint) {
    o["hint"] =
        ordered_json{{"base", matrix_json(ComplexMatrix(in.hint->base.matrix()))},
                     {"coeffs", in.hint->coeffs}};
  }
  if (in.x) o["x"] = vector_json(*in.x);
  if (in.y) o["y"] = vector_json(*in.y);
  if (in.a) o["a"] = *in.a;
  if (in.b) o["b"] = *in.b;
  return o;
}

catalog::EvalInput inputs_from_json(const ordered_json& j) {
  if (!j.is_object()) throw ParseError("inputs JSON must be an object");
  EvalInput in;
  try {
    if (j.contains("t")) in.t = matrix_from_json(j.at("t"));
    if (j.contains("s")) in.s = matrix_from_json(j.at("s"));
    if (j.contains("hint")) {
      const auto& h = j.at("hint");
      matcore::PSDMatrix base(
          matcore::HermitianMatrix(matrix_from_json(h.at("base"))));
      std::vector<double> coeffs = h.at("coeffs").get<std::vector<double>>();
      in.hint = matcore::PolyHint{std::move(base), std::move(coeffs)};
    }
    if (j.contains("x")) in.x = vector_from_json(j.at("x"));
    if (j.contains("y")) in.y = vector_from_json(j.at("y"));
    if (j.contains("a")) in.a = j.at("a").get<double>();
    if (j.contains("b")) in.b = j.at("b").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("inputs JSON: ") + e.what());
  }
  return in;
}

ordered_json result_json(const IneqResult& r, ordered_json witness) {
  ordered_json o;
  o["id"] = r.id;
  o["variant"] = catalog::variant_name(r.variant);
  o["lhs"] = ordered_json::array({r.lhs.lo, r.lhs.hi});
  o["rhs"] = ordered_json::array({r.rhs.lo, r.rhs.hi});
  o["slack"] = r.slack;
  o["verdict"] = catalog::verdict_name(r.verdict);
  o["equality"] = r.equality;
  o["witness"] = std::move(witness);
  return o;
}

CampaignConfig config_from_json(const ordered_json& j) {
  if (!j.is_object()) throw ConfigInvalid("config must be a JSON object");
  static const std::vector<std::string> known = {
      "dims",     "samples_per_dim", "seed",        "ineq_ids",
      "variants", "families",        "width_scale", "output"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find(known.begin(), known.end(), it.key()) == known.end())
      throw ConfigInvalid("unknown config key: " + it.key());
  }
  CampaignConfig cfg;
  try {
    if (j.contains("dims")) cfg.dims = j.at("dims").get<std::vector<int>>();
    if (j.contains("samples_per_dim"))
      cfg.samples_per_dim = j.at("samples_per_dim").get<int>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("ineq_ids")) {
      const auto& ids = j.at("ineq_ids");
      if (ids.is_string()) {
        if (ids.get<std::string>() != "all")
          throw ConfigInvalid("ineq_ids must be \"all\" or a list of ids");
      } else {
        cfg.ineq_ids = ids.get<std::vector<std::string>>();
        if (cfg.ineq_ids.empty())
          throw ConfigInvalid("ineq_ids list must not be empty");
      }
    }
    if (j.contains("variants"))
      cfg.variants = j.at("variants").get<std::string>();
    if (j.contains("families")) {
      for (const auto& name : j.at("families"))
        cfg.families.push_back(gen::family_from_name(name.get<std::string>()));
    }
    if (j.contains("width_scale"))
      cfg.width_scale = j.at("width_scale").get<double>();
    if (j.contains("output")) cfg.output_path = j.at("output").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigInvalid(std::string("config: ") + e.what());
  }
  validate(cfg);
  return cfg;
}

CampaignConfig read_config(const std::string& path) {
  return config_from_json(parse_json(read_file(path), path));
}

void validate(const CampaignConfig& cfg) {
  if (cfg.dims.empty()) throw ConfigInvalid("dims must not be empty");
  for (int d : cfg.dims)
    if (d < 1 || d > matcore::kMaxDim)
      throw ConfigInvalid("dims entries must lie in [1,256]");
  if (cfg.samples_per_dim < 1)
    throw ConfigInvalid("samples_per_dim must be >= 1");
  if (!(cfg.width_scale > 0.0))
    throw ConfigInvalid("width_scale must be positive");
  normalize_variants(cfg.variants);
  for (const auto& id : cfg.ineq_ids)
    if (!catalog::has_record(id, Variant::AS_PRINTED))
      throw UnknownId("config names unknown inequality id: " + id);
}

int thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("OPINEQ_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace {

struct Task {
  const IneqRecord* rec;
  int dim;
  int draw;
};

struct Outcome {
  IneqResult result;
  ordered_json row;
};

Outcome run_task(const Task& t, const CampaignConfig& cfg,
                 const std::vector<gen::Family>& fams) {
  gen::Family fam = pick_family(fams, t.dim, t.draw);
  Drawn d = make_inputs(*t.rec, fam, t.dim, cfg.seed, t.draw);
  ExponentParams params = draw_params(*t.rec, cfg.seed, t.draw);
  catalog::EvalOptions opts;
  opts.width_scale = cfg.width_scale;
  IneqResult res = catalog::evaluate(*t.rec, d.in, params, opts);
  ordered_json witness;
  witness["generator"] = std::move(d.generator);
  witness["inputs"] = inputs_json(d.in);
  witness["params"] = params_json(params);
  return Outcome{res, result_json(res, std::move(witness))};
}

}  // namespace

CampaignReport run_campaign(const CampaignConfig& cfg) {
  validate(cfg);
  const std::vector<gen::Family>& fams =
      cfg.families.empty() ? kDefaultFamilies : cfg.families;
  std::string variants = normalize_variants(cfg.variants);

  // Select rows, then order them by (id, variant) for stable reports.
  std::vector<const IneqRecord*> rows;
  auto want_id = [&](const std::string& id) {
    return cfg.ineq_ids.empty() ||
           std::find(cfg.ineq_ids.begin(), cfg.ineq_ids.end(), id) !=
               cfg.ineq_ids.end();
  };
  for (const auto& rec : catalog::registry()) {
    if (!want_id(rec.id)) continue;
    if (variants == "AS_PRINTED" && rec.variant != Variant::AS_PRINTED)
      continue;
    if (variants == "CORRECTED" && rec.variant != Variant::CORRECTED) continue;
    rows.push_back(&rec);
  }
  if (rows.empty()) throw ConfigInvalid("config selects no registry rows");
  std::sort(rows.begin(), rows.end(),
            [](const IneqRecord* a, const IneqRecord* b) {
              if (a->id != b->id) return a->id < b->id;
              return catalog::variant_name(a->variant) <
                     catalog::variant_name(b->variant);
            });

  std::vector<Task> tasks;
  tasks.reserve(rows.size() * cfg.dims.size() *
                static_cast<std::size_t>(cfg.samples_per_dim));
  for (const IneqRecord* rec : rows)
    for (int dim : cfg.dims)
      for (int draw = 0; draw < cfg.samples_per_dim; ++draw)
        tasks.push_back({rec, dim, draw});

  std::vector<Outcome> outcomes(tasks.size());
  int nthreads = std::min<int>(thread_count(cfg.threads),
                               static_cast<int>(tasks.size()));
  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  std::exception_ptr error;
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        outcomes[i] = run_task(tasks[i], cfg, fams);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  CampaignReport rep;
  rep.timestamp = iso_timestamp();
  rep.seed = cfg.seed;
  rep.config = cfg;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const Task& t = tasks[i];
    const Outcome& oc = outcomes[i];
    if (rep.groups.empty() || rep.groups.back().id != t.rec->id ||
        rep.groups.back().variant != t.rec->variant ||
        rep.groups.back().dim != t.dim) {
      GroupReport g;
      g.id = t.rec->id;
      g.variant = t.rec->variant;
      g.dim = t.dim;
      g.min_slack = std::numeric_limits<double>::infinity();
      rep.groups.push_back(std::move(g));
    }
    GroupReport& g = rep.groups.back();
    g.count += 1;
    switch (oc.result.verdict) {
      case catalog::Verdict::HOLDS:
        g.holds += 1;
        break;
      case catalog::Verdict::VIOLATED:
        g.violated += 1;
        g.violation_rows.push_back(oc.row);
        if (t.rec->variant == Variant::CORRECTED) rep.corrected_violations += 1;
        break;
      default:
        g.inconclusive += 1;
        break;
    }
    if (oc.result.equality) {
      g.equality_count += 1;
      if (static_cast<int>(g.equality_rows.size()) < kMaxEqualityRows)
        g.equality_rows.push_back(oc.row);
    }
    if (oc.result.slack < g.min_slack) {
      g.min_slack = oc.result.slack;
      g.min_slack_draw = t.draw;
      g.min_slack_row = oc.row;
    }
  }
  return rep;
}

ordered_json report_json(const CampaignReport& rep) {
  ordered_json cfg;
  cfg["dims"] = rep.config.dims;
  cfg["samples_per_dim"] = rep.config.samples_per_dim;
  cfg["seed"] = rep.config.seed;
  cfg["ineq_ids"] = rep.config.ineq_ids.empty()
                        ? ordered_json("all")
                        : ordered_json(rep.config.ineq_ids);
  cfg["variants"] = normalize_variants(rep.config.variants);
  ordered_json fams = ordered_json::array();
  for (gen::Family f :
       rep.config.families.empty() ? kDefaultFamilies : rep.config.families)
    fams.push_back(gen::family_name(f));
  cfg["families"] = std::move(fams);
  cfg["width_scale"] = rep.config.width_scale;
  cfg["output"] = rep.config.output_path;

  ordered_json groups = ordered_json::array();
  for (const GroupReport& g : rep.groups) {
    ordered_json go;
    go["id"] = g.id;
    go["variant"] = catalog::variant_name(g.variant);
    go["dim"] = g.dim;
    go["count"] = g.count;
    go["holds"] = g.holds;
    go["violated"] = g.violated;
    go["inconclusive"] = g.inconclusive;
    go["equality_count"] = g.equality_count;
    go["min_slack"] = g.min_slack;
    go["min_slack_draw"] = g.min_slack_draw;
    go["min_slack_row"] = g.min_slack_row;
    go["equality_rows"] = g.equality_rows;
    go["violation_rows"] = g.violation_rows;
    groups.push_back(std::move(go));
  }

  ordered_json o;
  o["schema"] = kSchema;
  o["version"] = kVersion;
  o["timestamp"] = rep.timestamp;
  o["seed"] = rep.seed;
  o["config"] = std::move(cfg);
  o["corrected_violations"] = rep.corrected_violations;
  o["groups"] = std::move(groups);
  return o;
}

void write_report(const CampaignReport& rep, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoFailure("cannot open " + path + " for writing");
  out << dump_17(report_json(rep));
  if (!out) throw IoFailure("write failed on " + path);
}

int exit_code(const CampaignReport& rep) {
  return rep.corrected_violations > 0 ? 2 : 0;
}

catalog::IneqResult eval_single(const IneqRecord& rec, const EvalInput& in,
                                const ExponentParams& params,
                                double width_scale) {
  catalog::EvalOptions opts;
  opts.width_scale = width_scale;
  return catalog::evaluate(rec, in, params, opts);
}

catalog::IneqResult replay(const ordered_json& result_row) {
  try {
    std::string id = result_row.at("id").get<std::string>();
    Variant v =
        catalog::variant_from_name(result_row.at("variant").get<std::string>());
    const ordered_json& witness = result_row.at("witness");
    EvalInput in = inputs_from_json(witness.at("inputs"));
    ExponentParams params =
        params_from_json(witness.value("params", ordered_json::object()));
    return catalog::evaluate(id, v, in, params);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("result row JSON: ") + e.what());
  }
}

namespace {

// Slack of an input under a record, or nothing if the input leaves the row's
// hypothesis set (descent steps can wander out of it).
std::optional<IneqResult> guarded_eval(const IneqRecord& rec,
                                       const EvalInput& in,
                                       const ExponentParams& params) {
  try {
    return catalog::evaluate(rec, in, params, {});
  } catch (const HypothesisViolated&) {
    return std::nullopt;
  }
}

Matrix rounded_tenths(const Matrix& m) {
  Matrix out = m;
  for (Eigen::Index i = 0; i < out.rows(); ++i)
    for (Eigen::Index k = 0; k < out.cols(); ++k)
      out(i, k) = Complex(std::round(out(i, k).real() * 10.0) / 10.0,
                          std::round(out(i, k).imag() * 10.0) / 10.0);
  return out;
}

Matrix drop_index(const Matrix& m, int k) {
  int n = static_cast<int>(m.rows());
  Matrix out(n - 1, n - 1);
  for (int i = 0, oi = 0; i < n; ++i) {
    if (i == k) continue;
    for (int j = 0, oj = 0; j < n; ++j) {
      if (j == k) continue;
      out(oi, oj) = m(i, j);
      ++oj;
    }
    ++oi;
  }
  return out;
}

Vector drop_coord_unit(const Vector& v, int k) {
  Vector out(v.size() - 1);
  for (Eigen::Index i = 0, o = 0; i < v.size(); ++i) {
    if (i == k) continue;
    out(o++) = v(i);
  }
  double n = out.norm();
  if (n < 1e-12) {
    out.setZero();
    out(0) = 1.0;
  } else {
    out /= n;
  }
  return out;
}

EvalInput shrink_inputs(const EvalInput& in, int k) {
  EvalInput out;
  if (in.t) out.t = ComplexMatrix(drop_index(in.t->raw(), k));
  if (in.s) out.s = ComplexMatrix(drop_index(in.s->raw(), k));
  // Polynomial hints do not survive a principal submatrix cut.
  if (in.x) out.x = drop_coord_unit(*in.x, k);
  if (in.y) out.y = drop_coord_unit(*in.y, k);
  out.a = in.a;
  out.b = in.b;
  return out;
}

}  // namespace

SearchResult search(const std::string& id, Variant variant,
                    const std::vector<int>& dims, int budget,
                    std::uint64_t seed) {
  const IneqRecord& rec = catalog::find_record(id, variant);
  if (budget < 1) throw ConfigInvalid("search budget must be >= 1");
  std::vector<int> dd = dims.empty() ? std::vector<int>{2, 3} : dims;
  for (int d : dd)
    if (d < 1 || d > matcore::kMaxDim)
      throw ConfigInvalid("search dims must lie in [1,256]");

  std::vector<gen::Family> fams = kDefaultFamilies;
  fams.push_back(gen::Family::PARAM_2X2);

  SearchResult sr;
  sr.best_slack = std::numeric_limits<double>::infinity();
  EvalInput best_in;
  ExponentParams best_params;
  bool have_best = false;

  auto consider = [&](const EvalInput& in, const ExponentParams& params,
                      int dim) -> bool {
    if (sr.evals >= budget) return false;
    ++sr.evals;
    std::optional<IneqResult> res = guarded_eval(rec, in, params);
    if (res && res->slack < sr.best_slack) {
      sr.best_slack = res->slack;
      sr.best = *res;
      best_in = in;
      best_params = params;
      sr.dim = dim;
      have_best = true;
      return true;
    }
    return false;
  };

  // Coordinate-wise complex perturbations of t, greedy on slack.
  auto descend = [&](int dim) {
    if (!best_in.t) return;
    if (rec.kind == InputKind::PAIR_VECTOR || rec.kind == InputKind::SCALAR)
      return;
    double scale = std::max(1.0, matcore::frobenius_norm(*best_in.t));
    double step = 0.25 * scale;
    while (step > 1e-6 * scale && sr.evals < budget) {
      bool improved = false;
      int n = best_in.t->dim();
      for (int i = 0; i < n && sr.evals < budget; ++i) {
        for (int k = 0; k < n && sr.evals < budget; ++k) {
          static const Complex dirs[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
          for (const Complex& dir : dirs) {
            if (sr.evals >= budget) break;
            Matrix m = best_in.t->raw();
            m(i, k) += step * dir;
            EvalInput cand = best_in;
            cand.t = ComplexMatrix(m);
            if (consider(cand, best_params, dim)) improved = true;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
  };

  for (int r = 0; sr.evals < budget; ++r) {
    int dim = dd[static_cast<std::size_t>(r) % dd.size()];
    gen::Family fam = pick_family(fams, dim, r);
    Drawn d = make_inputs(rec, fam, dim, seed, r);
    ExponentParams params = draw_params(rec, seed, r);
    if (consider(d.in, params, dim)) descend(dim);
  }

  // Shrinking: try smaller principal submatrices, then coarse entries,
  // keeping every step that preserves a certified violation.
  if (have_best && sr.best.verdict == catalog::Verdict::VIOLATED &&
      best_in.t && rec.kind != InputKind::PAIR_VECTOR) {
    bool shrunk = true;
    while (shrunk && best_in.t->dim() > 1) {
      shrunk = false;
      int n = best_in.t->dim();
      for (int k = 0; k < n; ++k) {
        EvalInput cand = shrink_inputs(best_in, k);
        ++sr.evals;
        std::optional<IneqResult> res = guarded_eval(rec, cand, best_params);
        if (res && res->verdict == catalog::Verdict::VIOLATED) {
          best_in = cand;
          sr.best = *res;
          sr.best_slack = res->slack;
          sr.dim = best_in.t->dim();
          shrunk = true;
          break;
        }
      }
    }
    EvalInput cand = best_in;
    cand.t = ComplexMatrix(rounded_tenths(best_in.t->raw()));
    if (cand.s) cand.s = ComplexMatrix(rounded_tenths(cand.s->raw()));
    ++sr.evals;
    std::optional<IneqResult> res = guarded_eval(rec, cand, best_params);
    if (res && res->verdict == catalog::Verdict::VIOLATED) {
      best_in = cand;
      sr.best = *res;
      sr.best_slack = res->slack;
    }
  }

  sr.confirmed =
      have_best && sr.best.verdict == catalog::Verdict::VIOLATED;
  ordered_json witness;
  witness["inputs"] = inputs_json(best_in);
  witness["params"] = params_json(best_params);
  sr.witness = std::move(witness);
  return sr;
}

void export_range(const std::string& matrix_path, int points,
                  const std::string& out_path) {
  ComplexMatrix t = matcore::read_matrix_json(matrix_path);
  radius::RangeBoundary b = radius::range_boundary(t, points);
  radius::write_boundary_csv(b, out_path);
}

}  // namespace opineq::harness
