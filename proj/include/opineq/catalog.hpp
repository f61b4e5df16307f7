#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "opineq/matcore.hpp"
#include "opineq/params.hpp"

namespace opineq::catalog {

enum class Variant { AS_PRINTED, CORRECTED };
enum class Verdict { HOLDS, VIOLATED, INCONCLUSIVE };

// What inputs a registry row consumes.
enum class InputKind {
  OPERATOR,         // one matrix t
  OPERATOR_PAIR,    // t and s
  PSD_VECTOR,       // PSD matrix (passed as t) and vector x (y optional)
  PAIR_VECTOR,      // structured pair (t = A, s = B) and vector(s)
  OPERATOR_VECTOR,  // matrix t and vectors x, y
  SCALAR,           // positive reals a, b
};

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& name);  // accepts "as-printed" too
std::string verdict_name(Verdict v);
std::string kind_name(InputKind k);

struct EvalInput {
  std::optional<matcore::ComplexMatrix> t;
  std::optional<matcore::ComplexMatrix> s;     // second operator / B
  std::optional<matcore::PolyHint> hint;       // spectral-radius hint for s
  std::optional<matcore::Vector> x;
  std::optional<matcore::Vector> y;
  std::optional<double> a;                     // scalar rows
  std::optional<double> b;
};

struct EvalOptions {
  double width_scale = 1.0;  // multiplies enclosure width targets
  bool allow_retry = true;   // one retry at 100x tighter width on INCONCLUSIVE
};

struct LhsRhs {
  Interval lhs;
  Interval rhs;
};

struct IneqRecord {
  std::string id;
  std::string paper_eq;
  Variant variant = Variant::AS_PRINTED;
  InputKind kind = InputKind::OPERATOR;
  std::string hypothesis;  // human-readable side conditions
  std::string notes;
  ParamProfile profile;    // admissible parameter boxes for sampling
  std::function<void(const EvalInput&, const ExponentParams&)> require;
  std::function<LhsRhs(const EvalInput&, const ExponentParams&,
                       const EvalOptions&)>
      eval;
};

struct IneqResult {
  std::string id;
  Variant variant = Variant::AS_PRINTED;
  Interval lhs;
  Interval rhs;
  double slack = 0.0;  // rhs.lo - lhs.hi
  Verdict verdict = Verdict::INCONCLUSIVE;
  bool equality = false;  // non-violated with |slack| <= 1e-8 * scale
};

double verdict_tol(const Interval& rhs);  // 1e-9 * max(1, |rhs.hi|)

const std::vector<IneqRecord>& registry();
bool has_record(const std::string& id, Variant v);
const IneqRecord& find_record(const std::string& id, Variant v);
// Defaults to the AS_PRINTED row when no variant requested.
const IneqRecord& resolve_record(const std::string& id,
                                 std::optional<Variant> v);
const ParamProfile& param_profile(const std::string& id);

struct RegistryRow {
  std::string id;
  std::string paper_eq;
  Variant variant;
  InputKind kind;
  std::string hypothesis;
};
std::vector<RegistryRow> list_registry();

IneqResult evaluate(const IneqRecord& rec, const EvalInput& in,
                    const ExponentParams& params, const EvalOptions& opts = {});
IneqResult evaluate(const std::string& id, Variant v, const EvalInput& in,
                    const ExponentParams& params, const EvalOptions& opts = {});
IneqResult evaluate_scalar(const std::string& id, double a, double b,
                           const ExponentParams& params);

// Upper-bound comparison: the plain half-norm bound against its two
// correction-refined forms. Corrections vanish identically on matrices
// (singular-value traces match), so the chain is expected degenerate.
struct ChainReport {
  Interval kitt2005_upper;     // RHS of KITT2005_UPPER
  Interval rem_2_11_corrected; // RHS of REM_2_11, CORRECTED variant
  Interval rem_2_14;           // RHS of REM_2_14
  bool chain_holds = false;    // 2.14 <= 2.11 <= upper within tolerance
  bool degenerate = false;     // correction infima ~ 0
  double correction = 0.0;     // shared infimum value (upper endpoint)
};
ChainReport refinement_chain(const matcore::ComplexMatrix& t);

}  // namespace opineq::catalog
