#include "opineq/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <optional>
#include <utility>

#include "opineq/radius.hpp"
#include "opineq/sphereopt.hpp"

namespace opineq::catalog {
namespace {

using matcore::Complex;
using matcore::ComplexMatrix;
using matcore::HermitianMatrix;
using matcore::Matrix;
using matcore::PSDMatrix;
using matcore::Vector;

double clamp0(double v) { return v < 0.0 ? 0.0 : v; }

Interval norm_iv(const Matrix& m) {
  double v = matcore::operator_norm(ComplexMatrix(m));
  double slop = matcore::kNormSlop * std::max(1.0, v);
  return make_interval(clamp0(v - slop), v + slop, Method::EXACT_FORMULA);
}

Interval radius_iv(const ComplexMatrix& t, const EvalOptions& o) {
  double target = o.width_scale * radius::default_width_target(t);
  return radius::numerical_radius(t, target).value;
}

// T*T + TT* without a detour through eigendecompositions.
Matrix gram_sum(const ComplexMatrix& t) {
  return t.raw().adjoint() * t.raw() + t.raw() * t.raw().adjoint();
}

const ComplexMatrix& need_t(const EvalInput& in) {
  if (!in.t) throw ConfigInvalid("evaluation input is missing matrix t");
  return *in.t;
}

const ComplexMatrix& need_s(const EvalInput& in, int dim) {
  if (!in.s) throw ConfigInvalid("evaluation input is missing matrix s");
  if (in.s->dim() != dim)
    throw DimensionMismatch("matrices t and s have different dimensions");
  return *in.s;
}

const Vector& need_vec(const std::optional<Vector>& v, const char* name,
                       int dim) {
  if (!v) throw ConfigInvalid(std::string("evaluation input is missing vector ") + name);
  if (static_cast<int>(v->size()) != dim)
    throw DimensionMismatch(std::string("vector ") + name +
                            " does not match the matrix dimension");
  if (!v->allFinite())
    throw ConfigInvalid(std::string("vector ") + name + " has non-finite entries");
  return *v;
}

void need_unit(const Vector& x, const char* pred) {
  if (std::abs(x.norm() - 1.0) > 1e-9) throw HypothesisViolated(pred);
}

double need_scalar(const std::optional<double>& v, const char* name) {
  if (!v) throw ConfigInvalid(std::string("evaluation input is missing scalar ") + name);
  if (!std::isfinite(*v)) throw ConfigInvalid(std::string("scalar ") + name + " is not finite");
  return *v;
}

PSDMatrix as_psd(const ComplexMatrix& m, const char* pred) {
  try {
    return PSDMatrix(HermitianMatrix(m));
  } catch (const NotHermitian&) {
    throw HypothesisViolated(pred);
  } catch (const NotPSD&) {
    throw HypothesisViolated(pred);
  }
}

void req(bool cond, const char* pred) {
  if (!cond) throw HypothesisViolated(pred);
}

// Lazily computed |t| and |t*| plus their fractional powers.
struct Ops {
  const ComplexMatrix& t;
  std::optional<PSDMatrix> abs_t;
  std::optional<PSDMatrix> abs_ts;

  explicit Ops(const ComplexMatrix& m) : t(m) {}

  const PSDMatrix& a() {
    if (!abs_t) abs_t = matcore::abs_op(t);
    return *abs_t;
  }
  const PSDMatrix& as() {
    if (!abs_ts) abs_ts = matcore::abs_op(matcore::adjoint(t));
    return *abs_ts;
  }
  PSDMatrix ap(double e) { return matcore::frac_power(a(), e); }
  PSDMatrix asp(double e) { return matcore::frac_power(as(), e); }

  // t |t|^e; exponents within round-off of 0 collapse to t itself.
  ComplexMatrix weighted(double e) {
    if (e < 0.0) e = 0.0;
    if (e == 0.0) return t;
    return ComplexMatrix(t.raw() * ap(e).matrix());
  }
};

Interval inf_line(const PSDMatrix& a, const PSDMatrix& b) {
  return sphereopt::inf_form_diff(a, b).value;
}

Interval inf_sq(const PSDMatrix& a, const PSDMatrix& b) {
  return sphereopt::inf_sq_form_diff(a, b).value;
}

Interval inf_pow(const PSDMatrix& a, const PSDMatrix& b, double u, double v) {
  if (u == 1.0 && v == 1.0) return inf_sq(a, b);
  return sphereopt::inf_power_diff({a, b, u, v}).value;
}

double qf(const Matrix& m, const Vector& x) { return matcore::quad_form(m, x); }

// ---- parameter predicates shared across rows ----

void req_alpha_unit(const ExponentParams& p) {
  req(p.alpha >= 0.0 && p.alpha <= 1.0, "alpha in [0,1]");
}

void req_alpha_beta(const ExponentParams& p) {
  req(p.alpha >= 0.0 && p.beta >= 0.0, "alpha >= 0 and beta >= 0");
  req(p.alpha + p.beta >= 1.0 - 1e-12, "alpha + beta >= 1");
}

void req_gamma_delta(const ExponentParams& p) {
  req(p.gamma >= 0.0 && p.delta >= 0.0, "gamma >= 0 and delta >= 0");
  req(p.gamma + p.delta >= 1.0 - 1e-12, "gamma + delta >= 1");
}

void req_r_ge1(const ExponentParams& p) { req(p.r >= 1.0 - 1e-12, "r >= 1"); }
void req_s_ge1(const ExponentParams& p) { req(p.s >= 1.0 - 1e-12, "s >= 1"); }

void req_conjugate(const ExponentParams& p) {
  req(p.p > 1.0 && p.q > 1.0, "p > 1 and q > 1");
  req(std::abs(1.0 / p.p + 1.0 / p.q - 1.0) <= 1e-12, "1/p + 1/q = 1");
}

// ---- profile factories ----

ParamProfile prof_none() { return {}; }

ParamProfile prof_alpha_unit() {
  ParamProfile p;
  p.alpha_unit = true;
  return p;
}

ParamProfile prof_ab() {
  ParamProfile p;
  p.uses_alpha_beta = true;
  return p;
}

ParamProfile prof_ab_r() {
  ParamProfile p = prof_ab();
  p.uses_r = true;
  return p;
}

ParamProfile prof_ab_m_r() {
  ParamProfile p = prof_ab_r();
  p.uses_m = true;
  return p;
}

ParamProfile prof_ab_r_s() {
  ParamProfile p = prof_ab_r();
  p.uses_s = true;
  return p;
}

ParamProfile prof_ab_s() {
  ParamProfile p = prof_ab();
  p.uses_s = true;
  return p;
}

ParamProfile prof_tied_s() {
  ParamProfile p;
  p.uses_s = true;
  p.s_lo = 1.0;
  p.s_hi = 2.0;
  p.tie_alpha_beta_inv_s = true;
  return p;
}

ParamProfile prof_r_box(double lo, double hi) {
  ParamProfile p;
  p.uses_r = true;
  p.r_lo = lo;
  p.r_hi = hi;
  return p;
}

ParamProfile prof_pq() {
  ParamProfile p;
  p.uses_pq = true;
  return p;
}

ParamProfile prof_scalar_mr() {
  ParamProfile p;
  p.uses_m = true;
  p.m_integer = true;
  p.uses_r = true;
  return p;
}

ParamProfile prof_ab_s_pq() {
  ParamProfile p = prof_ab_s();
  p.uses_pq = true;
  return p;
}

ParamProfile prof_abgd_r() {
  ParamProfile p = prof_ab_r();
  p.uses_gamma_delta = true;
  return p;
}

ParamProfile prof_abgd() {
  ParamProfile p = prof_ab();
  p.uses_gamma_delta = true;
  return p;
}

// ---- registry construction ----

std::vector<IneqRecord> build_registry() {
  std::vector<IneqRecord> rows;
  auto push = [&rows](IneqRecord r) { rows.push_back(std::move(r)); };

  // |<A x, y>|^2 <= <A x, x> <A y, y> for A >= 0.
  push({"SCHWARZ_1_1", "1.1", Variant::AS_PRINTED, InputKind::PSD_VECTOR,
       "A >= 0", "two-vector quadratic form bound", prof_none(),
       [](const EvalInput& in, const ExponentParams&) {
         const auto& a = need_t(in);
         as_psd(a, "A is positive semidefinite");
         need_vec(in.x, "x", a.dim());
         need_vec(in.y, "y", a.dim());
       },
       [](const EvalInput& in, const ExponentParams&, const EvalOptions&) {
         const auto& am = need_t(in);
         PSDMatrix a = as_psd(am, "A is positive semidefinite");
         const Vector& x = need_vec(in.x, "x", am.dim());
         const Vector& y = need_vec(in.y, "y", am.dim());
         double lhs = std::norm(y.dot(a.matrix() * x));
         double rhs = clamp0(qf(a.matrix(), x)) * clamp0(qf(a.matrix(), y));
         return LhsRhs{point_interval(lhs), point_interval(rhs)};
       }});

  // |<A B x, x>| <= ||B|| <A x, x> for A >= 0 with AB selfadjoint.
  push({"REID_1_2", "1.2", Variant::AS_PRINTED, InputKind::PAIR_VECTOR,
       "A >= 0, AB selfadjoint", "selfadjoint-product bound", prof_none(),
       [](const EvalInput& in, const ExponentParams&) {
         const auto& a = need_t(in);
         const auto& b = need_s(in, a.dim());
         as_psd(a, "A is positive semidefinite");
         Matrix ab = a.raw() * b.raw();
         double defect = matcore::operator_norm(ComplexMatrix(ab - ab.adjoint()));
         double scale = std::max(1.0, matcore::operator_norm(a) *
                                          matcore::operator_norm(b));
         req(defect <= 1e-8 * scale, "AB is selfadjoint");
         need_vec(in.x, "x", a.dim());
       },
       [](const EvalInput& in, const ExponentParams&, const EvalOptions&) {
         const auto& am = need_t(in);
         const auto& b = need_s(in, am.dim());
         PSDMatrix a = as_psd(am, "A is positive semidefinite");
         const Vector& x = need_vec(in.x, "x", am.dim());
         double lhs = std::abs(x.dot(a.matrix() * (b.raw() * x)));
         double form = clamp0(qf(a.matrix(), x));
         return LhsRhs{point_interval(lhs), scale(norm_iv(b.raw()), form)};
       }});

  // |<T x, y>|^2 <= <|T|^{2a} x, x> <|T*|^{2(1-a)} y, y>.
  push({"KATO_1_3", "1.3", Variant::AS_PRINTED, InputKind::OPERATOR_VECTOR,
       "alpha in [0,1]", "mixed two-vector bound", prof_alpha_unit(),
       [](const EvalInput& in, const ExponentParams& p) {
         const auto& t = need_t(in);
         need_vec(in.x, "x", t.dim());
         need_vec(in.y, "y", t.dim());
         req_alpha_unit(p);
       },
       [](const EvalInput& in, const ExponentParams& p, const EvalOptions&) {
         Ops ops(need_t(in));
         const Vector& x = need_vec(in.x, "x", ops.t.dim());
         const Vector& y = need_vec(in.y, "y", ops.t.dim());
         double lhs = std::norm(y.dot(ops.t.raw() * x));
         double rhs = clamp0(qf(ops.ap(2.0 * p.alpha).matrix(), x)) *
                      clamp0(qf(ops.asp(2.0 * (1.0 - p.alpha)).matrix(), y));
         return LhsRhs{point_interval(lhs), point_interval(rhs)};
       }});

  // |<A B x, y>| <= r(B) |||A|^a x|| |||A*|^{1-a} y|| when |A|B = B*|A|.
  push({"KITTANEH_FG_1_4", "1.4", Variant::AS_PRINTED, InputKind::PAIR_VECTOR,
       "|A|B = B*|A| (defect <= 1e-8), alpha in [0,1]",
       "spectral-radius weighted bound; uses the polynomial hint when present",
       prof_alpha_unit(),
       [](const EvalInput& in, const ExponentParams& p) {
         const auto& a = need_t(in);
         const auto& b = need_s(in, a.dim());
         req(matcore::commutation_defect(a, b) <= 1e-8, "|A|B = B*|A|");
         need_vec(in.x, "x", a.dim());
         need_vec(in.y, "y", a.dim());
         req_alpha_unit(p);
       },
       [](const EvalInput& in, const ExponentParams& p, const EvalOptions&) {
         Ops ops(need_t(in));
         const auto& b = need_s(in, ops.t.dim());
         const Vector& x = need_vec(in.x, "x", ops.t.dim());
         const Vector& y = need_vec(in.y, "y", ops.t.dim());
         double lhs = std::abs(y.dot(ops.t.raw() * (b.raw() * x)));
         const matcore::PolyHint* hint = in.hint ? &*in.hint : nullptr;
         Interval rad = matcore::spectral_radius(b, hint).enclosure;
         double nx = (ops.ap(p.alpha).matrix() * x).norm();
         double ny = (ops.asp(1.0 - p.alpha).matrix() * y).norm();
         return LhsRhs{point_interval(lhs), scale(rad, nx * ny)};
       }});

  // |<T |T|^{a+b-1} x, y>|^2 <= <|T|^{2a} x, x> <|T*|^{2b} y, y>.
  push({"FURUTA_1_5", "1.5", Variant::AS_PRINTED, InputKind::OPERATOR_VECTOR,
       "alpha, beta >= 0, alpha + beta >= 1", "weighted two-vector bound",
       prof_ab(),
       [](const EvalInput& in, const ExponentParams& p) {
         const auto& t = need_t(in);
         need_vec(in.x, "x", t.dim());
         need_vec(in.y, "y", t.dim());
         req_alpha_beta(p);
       },
       [](const EvalInput& in, const ExponentParams& p, const EvalOptions&) {
         Ops ops(need_t(in));
         const Vector& x = need_vec(in.x, "x", ops.t.dim());
         const Vector& y = need_vec(in.y, "y", ops.t.dim());
         ComplexMatrix w = ops.weighted(p.alpha + p.beta - 1.0);
         double lhs = std::norm(y.dot(w.raw() * x));
         double rhs = clamp0(qf(ops.ap(2.0 * p.alpha).matrix(), x)) *
                      clamp0(qf(ops.asp(2.0 * p.beta).matrix(), y));
         return LhsRhs{point_interval(lhs), point_interval(rhs)};
       }});

  // (1/2)||T|| <= w(T) <= ||T||, encoded as max of the two gaps <= 0.
  push({"NORM_SANDWICH_1_6", "1.6", Variant::AS_PRINTED, InputKind::OPERATOR,
       "none", "two-sided norm bracket as a single max-form row", prof_none(),
       [](const EvalInput& in, const ExponentParams&) { need_t(in); },
       [](const EvalInput& in, const ExponentParams&, const EvalOptions& o) {
         const auto& t = need_t(in);
         Interval w = radius_iv(t, o);
         Interval n = norm_iv(t.raw());
         Interval lhs = max_of(sub(scale(n, 0.5), w), sub(w, n));
         return LhsRhs{lhs, point_interval(0.0)};
       }});

  // w(T) <= (1/2)(||T|| + ||T^2||^{1/2}).
  push({"KITT2003_1_7", "1.7", Variant::AS_PRINTED, InputKind::OPERATOR, "none",
       "power-norm refinement of the upper norm bound", prof_none(),
       [](const EvalInput& in, const ExponentParams&) { need_t(in); },
       [](const EvalInput& in, const ExponentParams&, const EvalOptions& o) {
         const auto& t = need_t(in);
         Interval lhs = radius_iv(t, o);
         Interval sq = pow_nonneg(norm_iv(t.raw() * t.raw()), 0.5);
         Interval rhs = scale(add(norm_iv(t.raw()), sq), 0.5);
         return LhsRhs{lhs, rhs};
       }});

  // (1/4)||T*T + TT*|| <= w(T)^2.
  push({"KITT2005_LOWER", "1.8", Variant::AS_PRINTED, InputKind::OPERATOR,
       "none", "lower half of the gram-sum bracket", prof_none(),
       [](const EvalInput& in, const ExponentParams&) { need_t(in); },
       [](const EvalInput& in, const ExponentParams&, const EvalOptions& o) {
         const auto& t = need_t(in);
         Interval lhs = scale(norm_iv(gram_sum(t)), 0.25);
         Interval rhs = pow_nonneg(radius_iv(t, o), 2.0);
         return LhsRhs{lhs, rhs};
       }});

  // w(T)^2 <= (1/2)||T*T + TT*||.
  push({"KITT2005_UPPER", "1.8", Variant::AS_PRINTED, InputKind::OPERATOR,
       "none", "upper half of the gram-sum bracket", prof_none(),
       [](const EvalInput& in, const ExponentParams&) { need_t(in); },
       [](const EvalInput& in, const ExponentParams&, const EvalOptions& o) {
         const auto& t = need_t(in);
         Interval lhs = pow_nonneg(radius_iv(t, o), 2.0);
         Interval rhs = scale(norm_iv(gram_sum(t)), 0.5);
         return LhsRhs{lhs, rhs};
       }});

  // w(T) <= (1/2)(||T|| + w(Aluthge(T))).
  push({"YAMAZAKI", "display after 1.8", Variant::AS_PRINTED,
       InputKind::OPERATOR, "none", "Aluthge-transform refinement",
       prof_none(),
       [](const EvalInput& in, const ExponentParams&) { need_t(in); },
       [](const EvalInput& in, const ExponentParams&, const EvalOptions& o) {
         const auto& t = need_t(in);
         Interval lhs = radius_iv(t, o);
         Interval wa = radius_iv(matcore::aluthge(t), o);
         Interval rhs = scale(add(norm_iv(t.raw()), wa), 0.5);
         return LhsRhs{lhs, rhs};
       }});

  // w(T)^2 <= (1/2)(||T|| + w(T^2)) as printed; the square on ||T|| restores
  // homogeneity and is the corrected reading.
  push({"DRAGOMIR", "display after 1.8", Variant::AS_PRINTED,
       InputKind::OPERATOR, "none",
       "printed form is not degree-2 homogeneous; fails on scaled identities",
       prof_none(),
       [](const EvalInput& in, const ExponentParams&) { need_t(in); },
       [](const EvalInput& in, const ExponentParams&, const EvalOptions& o) {
         const auto& t = need_t(in);
         Interval lhs = pow_nonneg(radius_iv(t, o), 2.0);
         Interval w2 = radius_iv(ComplexMatrix(t.raw() * t.raw()), o);
         Interval rhs = scale(add(norm_iv(t.raw()), w2), 0.5);
         return LhsRhs{lhs, rhs};
       }});

  push({"DRAGOMIR", "display after 1.8", Variant::CORRECTED,
       InputKind::OPERATOR, "none", "degree-2 homogeneous reading",
       prof_none(),
       [](const EvalInput& in, const ExponentParams&) { need_t(in); },
       [](const EvalInput& in, const ExponentParams&, const EvalOptions& o) {
         const auto& t = need_t(in);
         Interval lhs = pow_nonneg(radius_iv(t, o), 2.0);
         Interval w2 = radius_iv(ComplexMatrix(t.raw() * t.raw()), o);
         Interval rhs = scale(add(pow_nonneg(norm_iv(t.raw()), 2.0), w2), 0.5);
         return LhsRhs{lhs, rhs};
       }});

  // <S x, x>^r <= <S^r x, x> for unit x, r >= 1.
  push({"JENSEN_2_1", "2.1", Variant::AS_PRINTED, InputKind::PSD_VECTOR,
       "S >= 0, x unit, r >= 1", "convexity direction of the power form",
       prof_r_box(1.0, 3.0),
       [](const EvalInput& in, const ExponentParams& p) {
         const auto& s = need_t(in);
         as_psd(s, "S is positive semidefinite");
         const Vector& x = need_vec(in.x, "x", s.dim());
         need_unit(x, "x is a unit vector");
         req_r_ge1(p);
       },
       [](const EvalInput& in, const ExponentParams& p, const EvalOptions&) {
         PSDMatrix s = as_psd(need_t(in), "S is positive semidefinite");
         const Vector& x = need_vec(in.x, "x", s.dim());
         double base = clamp0(qf(s.matrix(), x));
         double lhs = std::pow(base, p.r);
         double rhs = clamp0(qf(matcore::frac_power(s, p.r).matrix(), x));
         return LhsRhs{point_interval(lhs), point_interval(rhs)};
       }});

  // <S^r x, x> <= <S x, x>^r for unit x, r in [0,1].
  push({"JENSEN_2_2", "2.2", Variant::AS_PRINTED, InputKind::PSD_VECTOR,
       "S >= 0, x unit, r in [0,1]", "concavity direction of the power form",
       prof_r_box(0.0, 1.0),
       [](const EvalInput& in, const ExponentParams& p) {
         const auto& s = need_t(in);
         as_psd(s, "S is positive semidefinite");
         const Vector& x = need_vec(in.x, "x", s.dim());
         need_unit(x, "x is a unit vector");
         req(p.r >= 0.0 && p.r <= 1.0, "r in [0,1]");
       },
       [](const EvalInput& in, const ExponentParams& p, const EvalOptions&) {
         PSDMatrix s = as_psd(need_t(in), "S is positive semidefinite");
         const Vector& x = need_vec(in.x, "x", s.dim());
         double base = clamp0(qf(s.matrix(), x));
         double lhs = clamp0(qf(matcore::frac_power(s, p.r).matrix(), x));
         double rhs = std::pow(base, p.r);
         return LhsRhs{point_interval(lhs), point_interval(rhs)};
       }});

  // ab + min(1/p,1/q)(a^{p/2} - b^{q/2})^2 <= a^p/p + b^q/q.
  push({"YOUNG_REF_2_3", "2.3", Variant::AS_PRINTED, InputKind::SCALAR,
       "a, b > 0, p, q > 1 conjugate", "scalar product-split refinement",
       prof_pq(),
       [](const EvalInput& in, const ExponentParams& p) {
         req(need_scalar(in.a, "a") > 0.0 && need_scalar(in.b, "b") > 0.0,
             "a > 0 and b > 0");
         req_conjugate(p);
       },
       [](const EvalInput& in, const ExponentParams& p, const EvalOptions&) {
         double a = need_scalar(in.a, "a");
         double b = need_scalar(in.b, "b");
         double gap = std::pow(a, p.p / 2.0) - std::pow(b, p.q / 2.0);
         double lhs = a * b + p.r0() * gap * gap;
         double rhs = std::pow(a, p.p) / p.p + std::pow(b, p.q) / p.q;
         return LhsRhs{point_interval(lhs), point_interval(rhs)};
       }});

  // (a^{1/p} b^{1/q})^m + r0^m (a^{m/2} - b^{m/2})^2 <= (a^r/p + b^r/q)^{m/r}.
  push({"SMS_2_4", "2.4", Variant::AS_PRINTED, InputKind::SCALAR,
       "a, b > 0, m integer >= 1, r >= 1, p, q > 1 conjugate",
       "powered scalar refinement; integer m", prof_scalar_mr(),
       [](const EvalInput& in, const ExponentParams& p) {
         req(need_scalar(in.a, "a") > 0.0 && need_scalar(in.b, "b") > 0.0,
             "a > 0 and b > 0");
         req(std::abs(p.m - std::round(p.m)) <= 1e-9 && p.m >= 1.0 - 1e-9,
             "m is a positive integer");
         req_r_ge1(p);
         req_conjugate(p);
       },
       [](const EvalInput& in, const ExponentParams& p, const EvalOptions&) {
         double a = need_scalar(in.a, "a");
         double b = need_scalar(in.b, "b");
         double gap = std::pow(a, p.m / 2.0) - std::pow(b, p.m / 2.0);
         double lhs = std::pow(std::pow(a, 1.0 / p.p) * std::pow(b, 1.0 / p.q), p.m) +
                      std::pow(p.r0(), p.m) * gap * gap;
         double rhs = std::pow(std::pow(a, p.r) / p.p + std::pow(b, p.r) / p.q,
                               p.m / p.r);
         return LhsRhs{point_interval(lhs), point_interval(rhs)};
       }});

  // w(T|T|^{a+b-1})^m <= 2^{-m/r} || |T|^{2ra} + |T*|^{2rb} ||^{m/r}
  //                      - 2^{-m} inf (<|T|^{2a}>^{m/2} - <|T*|^{2b}>^{m/2})^2.
  push({"THM2_4_2_5", "2.5", Variant::AS_PRINTED, InputKind::OPERATOR,
       "alpha, beta >= 0, alpha + beta >= 1, m >= 1, r >= 1",
       "powered weighted-radius bound with subtracted correction infimum",
       prof_ab_m_r(),
       [](const EvalInput& in, const ExponentParams& p) {
         need_t(in);
         req_alpha_beta(p);
         req(p.m >= 1.0 - 1e-12, "m >= 1");
         req_r_ge1(p);
       },
       [](const EvalInput& in, const ExponentParams& p, const EvalOptions& o) {
         Ops ops(need_t(in));
         Interval w = radius_iv(ops.weighted(p.alpha + p.beta - 1.0), o);
         Interval lhs = pow_nonneg(w, p.m);
         Matrix core = ops.ap(2.0 * p.r * p.alpha).matrix() +
                       ops.asp(2.0 * p.r * p.beta).matrix();
         Interval main = scale(pow_nonneg(norm_iv(core), p.m / p.r),
                               std::pow(2.0, -p.m / p.r));
         Interval corr = inf_pow(ops.ap(2.0 * p.alpha), ops.asp(2.0 * p.beta),
                                 p.m / 2.0, p.m / 2.0);
         return LhsRhs{lhs, sub(main, scale(corr, std::pow(2.0, -p.m)))};
       }});

  // w(T|T|^{a+b-1})^2 <= 2^{-2/r} || |T|^{2ra} + |T*|^{2rb} ||^{2/r}
  //                      - (1/4) inf (<|T|^{2a}> - <|T*|^{2b}>)^2.
  push({"COR2_5_2_6", "2.6", Variant::AS_PRINTED, InputKind::OPERATOR,
       "alpha, beta >= 0, alpha + beta >= 1, r >= 1",
       "squared weighted-radius bound with subtracted correction infimum",
       prof_ab_r(),
       [](const EvalInput& in, const ExponentParams& p) {
         need_t(in);
         req_alpha_beta(p);
         req_r_ge1(p);
       },
       [](const EvalInput& in, const ExponentParams& p, const EvalOptions& o) {
         Ops ops(need_t(in));
         Interval w = radius_iv(ops.weighted(p.alpha + p.beta - 1.0), o);
         Interval lhs = pow_nonneg(w, 2.0);
         Matrix core = ops.ap(2.0 * p.r * p.alpha).matrix() +
                       ops.asp(2.0 * p.r * p.beta).matrix();
         Interval main = scale(pow_nonneg(norm_iv(core), 2.0 / p.r),
                               std::pow(2.0, -2.0 / p.r));
         Interval corr = inf_sq(ops.ap(2.0 * p.alpha), ops.asp(2.0 * p.beta));
         return LhsRhs{lhs, sub(main, scale(corr, 0.25))};
       }});

  // w(T)^2 <= (1/4)|| |T| + |T*| ||^2 - (1/4) inf (<|T|> - <|T*|>)^2.
  push({"REM_HALF", "remark after 2.6", Variant::AS_PRINTED,
       InputKind::OPERATOR, "none", "half-power specialization", prof_none(),
       [](const EvalInput& in, const ExponentParams&) { need_t(in); },
       [](const EvalInput& in, const ExponentParams&, const EvalOptions& o) {
         Ops ops(need_t(in));
         Interval lhs = pow_nonneg(radius_iv(ops.t, o), 2.0);
         Matrix core = ops.a().matrix() + ops.as().matrix();
         Interval main = scale(pow_nonneg(norm_iv(core), 2.0), 0.25);
         Interval corr = inf_sq(ops.a(), ops.as());
         return LhsRhs{lhs, sub(main, scale(corr, 0.25))};
       }});

  // w(T|T|)^2 <= (1/4)||T*T + TT*||^2 - (1/4) inf (<|T|^2> - <|T*|^2>)^2.
  push({"REM_TTABS", "remark after 2.6", Variant::AS_PRINTED,
       InputKind::OPERATOR, "none", "unit-power specialization", prof_none(),
       [](const EvalInput& in, const ExponentParams&) { need_t(in); },
       [](const EvalInput& in, const ExponentParams&, const EvalOptions& o) {
         Ops ops(need_t(in));
         Interval lhs = pow_nonneg(radius_iv(ops.weighted(1.0), o), 2.0);
         Interval main = scale(pow_nonneg(norm_iv(gram_sum(ops.t)), 2.0), 0.25);
         Interval corr = inf_sq(ops.ap(2.0), ops.asp(2.0));
         return LhsRhs{lhs, sub(main, scale(corr, 0.25))};
       }});

  // w(T|T|^{a+b-1})^{2s} <= 2^{-2/r} || |T|^{2rsa} + |T*|^{2rsb} ||^{2/r} - C,
  // printed C = (1/4) inf [<|T|^{2sra}> - <|T*|^{2rsb}>] (unsquared),
  // corrected C = (1/4) inf (<|T|^{2sa}> - <|T*|^{2sb}>)^2.
  {
    auto require = [](const EvalInput& in, const ExponentParams& p) {
      need_t(in);
      req_alpha_beta(p);
      req_r_ge1(p);
      req_s_ge1(p);
    };
    auto main_part = [](Ops& ops, const ExponentParams& p) {
      Matrix core = ops.ap(2.0 * p.r * p.s * p.alpha).matrix() +
                    ops.asp(2.0 * p.r * p.s * p.beta).matrix();
      return scale(pow_nonneg(norm_iv(core), 2.0 / p.r),
                   std::pow(2.0, -2.0 / p.r));
    };
    push({"THM2_7_2_7", "2.7", Variant::AS_PRINTED, InputKind::OPERATOR,
         "alpha, beta >= 0, alpha + beta >= 1, r >= 1, s >= 1",
         "printed correction is an unsquared bracket and can exceed the bound",
         prof_ab_r_s(), require,
         [main_part](const EvalInput& in, const ExponentParams& p,
                     const EvalOptions& o) {
           Ops ops(need_t(in));
           Interval lhs =
               pow_nonneg(radius_iv(ops.weighted(p.alpha + p.beta - 1.0), o),
                          2.0 * p.s);
           Interval corr = inf_line(ops.ap(2.0 * p.s * p.r * p.alpha),
                                    ops.asp(2.0 * p.r * p.s * p.beta));
           return LhsRhs{lhs, sub(main_part(ops, p), scale(corr, 0.25))};
         }});
    push({"THM2_7_2_7", "2.7", Variant::CORRECTED, InputKind::OPERATOR,
         "alpha, beta >= 0, alpha + beta >= 1, r >= 1, s >= 1",
         "squared correction at the s-power weights", prof_ab_r_s(), require,
         [main_part](const EvalInput& in, const ExponentParams& p,
                     const EvalOptions& o) {
           Ops ops(need_t(in));
           Interval lhs =
               pow_nonneg(radius_iv(ops.weighted(p.alpha + p.beta - 1.0), o),
                          2.0 * p.s);
           Interval corr = inf_sq(ops.ap(2.0 * p.s * p.alpha),
                                  ops.asp(2.0 * p.s * p.beta));
           return LhsRhs{lhs, sub(main_part(ops, p), scale(corr, 0.25))};
         }});
  }

  // r = 1 case: w(T|T|^{a+b-1})^{2s} <= (1/4)|| |T|^{2sa} + |T*|^{2sb} ||^2 - C.
  {
    auto require = [](const EvalInput& in, const ExponentParams& p) {
      need_t(in);
      req_alpha_beta(p);
      req_s_ge1(p);
    };
    auto main_part = [](Ops& ops, const ExponentParams& p) {
      Matrix core = ops.ap(2.0 * p.s * p.alpha).matrix() +
                    ops.asp(2.0 * p.s * p.beta).matrix();
      return scale(pow_nonneg(norm_iv(core), 2.0), 0.25);
    };
    push({"COR2_8_2_8", "2.8", Variant::AS_PRINTED, InputKind::OPERATOR,
         "alpha, beta >= 0, alpha + beta >= 1, s >= 1",
         "printed correction is an unsquared bracket", prof_ab_s(), require,
         [main_part](const EvalInput& in, const ExponentParams& p,
                     const EvalOptions& o) {
           Ops ops(need_t(in));
           Interval lhs =
               pow_nonneg(radius_iv(ops.weighted(p.alpha + p.beta - 1.0), o),
                          2.0 * p.s);
           Interval corr =
               inf_line(ops.ap(2.0 * p.s * p.alpha), ops.asp(2.0 * p.s * p.beta));
           return LhsRhs{lhs, sub(main_part(ops, p), scale(corr, 0.25))};
         }});
    push({"COR2_8_2_8", "2.8", Variant::CORRECTED, InputKind::OPERATOR,
         "alpha, beta >= 0, alpha + beta >= 1, s >= 1", "squared correction",
         prof_ab_s(), require,
         [main_part](const EvalInput& in, const ExponentParams& p,
                     const EvalOptions& o) {
           Ops ops(need_t(in));
           Interval lhs =
               pow_nonneg(radius_iv(ops.weighted(p.alpha + p.beta - 1.0), o),
                          2.0 * p.s);
           Interval corr =
               inf_sq(ops.ap(2.0 * p.s * p.alpha), ops.asp(2.0 * p.s * p.beta));
           return LhsRhs{lhs, sub(main_part(ops, p), scale(corr, 0.25))};
         }});
  }

  // alpha = beta = 1/s, s in [1,2]:
  // w(T|T|^{2/s-1})^{2s} <= (1/4)||T*T + TT*||^2 - C on the squared moduli.
  {
    auto require = [](const EvalInput& in, const ExponentParams& p) {
      need_t(in);
      req(p.s >= 1.0 - 1e-12 && p.s <= 2.0 + 1e-12, "s in [1,2]");
      req(std::abs(p.alpha - 1.0 / p.s) <= 1e-9 &&
              std::abs(p.beta - 1.0 / p.s) <= 1e-9,
          "alpha = beta = 1/s");
    };
    auto eval_common = [](const EvalInput& in, const ExponentParams& p,
                          const EvalOptions& o, bool squared) {
      Ops ops(need_t(in));
      Interval lhs =
          pow_nonneg(radius_iv(ops.weighted(2.0 / p.s - 1.0), o), 2.0 * p.s);
      Interval main = scale(pow_nonneg(norm_iv(gram_sum(ops.t)), 2.0), 0.25);
      Interval corr = squared ? inf_sq(ops.ap(2.0), ops.asp(2.0))
                              : inf_line(ops.ap(2.0), ops.asp(2.0));
      return LhsRhs{lhs, sub(main, scale(corr, 0.25))};
    };
    push({"REM_2_9", "2.9", Variant::AS_PRINTED, InputKind::OPERATOR,
         "s in [1,2], alpha = beta = 1/s", "printed unsquared correction",
         prof_tied_s(), require,
         [eval_common](const EvalInput& in, const ExponentParams& p,
                       const EvalOptions& o) { return eval_common(in, p, o, false); }});
    push({"REM_2_9", "2.9", Variant::CORRECTED, InputKind::OPERATOR,
         "s in [1,2], alpha = beta = 1/s", "squared correction", prof_tied_s(),
         require,
         [eval_common](const EvalInput& in, const ExponentParams& p,
                       const EvalOptions& o) { return eval_common(in, p, o, true); }});
  }

  // s = 1 case of the previous row: w(T|T|)^2 bound.
  {
    auto require = [](const EvalInput& in, const ExponentParams&) {
      need_t(in);
    };
    auto eval_common = [](const EvalInput& in, const EvalOptions& o,
                          bool squared) {
      Ops ops(need_t(in));
      Interval lhs = pow_nonneg(radius_iv(ops.weighted(1.0), o), 2.0);
      Interval main = scale(pow_nonneg(norm_iv(gram_sum(ops.t)), 2.0), 0.25);
      Interval corr = squared ? inf_sq(ops.ap(2.0), ops.asp(2.0))
                              : inf_line(ops.ap(2.0), ops.asp(2.0));
      return LhsRhs{lhs, sub(main, scale(corr, 0.25))};
    };
    push({"REM_2_10", "2.10", Variant::AS_PRINTED, InputKind::OPERATOR, "none",
         "printed unsquared correction", prof_none(), require,
         [eval_common](const EvalInput& in, const ExponentParams&,
                       const EvalOptions& o) { return eval_common(in, o, false); }});
    push({"REM_2_10", "2.10", Variant::CORRECTED, InputKind::OPERATOR, "none",
         "squared correction", prof_none(), require,
         [eval_common](const EvalInput& in, const ExponentParams&,
                       const EvalOptions& o) { return eval_common(in, o, true); }});
  }

  // w(T)^2 <= (1/2)||T*T + TT*|| - C; printed C is the unsquared bracket on
  // the squared moduli, corrected C = (1/4) inf (<|T|> - <|T*|>)^2.
  {
    auto require = [](const EvalInput& in, const ExponentParams&) {
      need_t(in);
    };
    push({"REM_2_11", "2.11", Variant::AS_PRINTED, InputKind::OPERATOR, "none",
         "printed unsquared correction on squared moduli", prof_none(), require,
         [](const EvalInput& in, const ExponentParams&, const EvalOptions& o) {
           Ops ops(need_t(in));
           Interval lhs = pow_nonneg(radius_iv(ops.t, o), 2.0);
           Interval main = scale(norm_iv(gram_sum(ops.t)), 0.5);
           Interval corr = inf_line(ops.ap(2.0), ops.asp(2.0));
           return LhsRhs{lhs, sub(main, scale(corr, 0.25))};
         }});
    push({"REM_2_11", "2.11", Variant::CORRECTED, InputKind::OPERATOR, "none",
         "squared correction on the moduli themselves", prof_none(), require,
         [](const EvalInput& in, const ExponentParams&, const EvalOptions& o) {
           Ops ops(need_t(in));
           Interval lhs = pow_nonneg(radius_iv(ops.t, o), 2.0);
           Interval main = scale(norm_iv(gram_sum(ops.t)), 0.5);
           Interval corr = inf_sq(ops.a(), ops.as());
           return LhsRhs{lhs, sub(main, scale(corr, 0.25))};
         }});
  }

  // w(T|T|^{a+b-1})^{2s} <= || (1/p)|T|^{2spa} + (1/q)|T*|^{2sqb} ||
  //                         - r0 inf (<|T|^{2sa}>^{p/2} - <|T*|^{2sb}>^{q/2})^2.
  push({"THM2_5B_2_12", "2.12", Variant::AS_PRINTED, InputKind::OPERATOR,
       "alpha, beta >= 0, alpha + beta >= 1, s >= 1, p, q > 1 conjugate",
       "conjugate-weight main term with powered correction", prof_ab_s_pq(),
       [](const EvalInput& in, const ExponentParams& p) {
         need_t(in);
         req_alpha_beta(p);
         req_s_ge1(p);
         req_conjugate(p);
       },
       [](const EvalInput& in, const ExponentParams& p, const EvalOptions& o) {
         Ops ops(need_t(in));
         Interval lhs = pow_nonneg(
             radius_iv(ops.weighted(p.alpha + p.beta - 1.0), o), 2.0 * p.s);
         Matrix core =
             ops.ap(2.0 * p.s * p.p * p.alpha).matrix() / p.p +
             ops.asp(2.0 * p.s * p.q * p.beta).matrix() / p.q;
         Interval main = norm_iv(core);
         Interval corr = inf_pow(ops.ap(2.0 * p.s * p.alpha),
                                 ops.asp(2.0 * p.s * p.beta), p.p / 2.0,
                                 p.q / 2.0);
         return LhsRhs{lhs, sub(main, scale(corr, p.r0()))};
       }});

  // p = q = 2 case: (1/2)|| |T|^{4sa} + |T*|^{4sb} || - (1/2) inf (...)^2.
  push({"THM2_5B_2_13", "2.13", Variant::AS_PRINTED, InputKind::OPERATOR,
       "alpha, beta >= 0, alpha + beta >= 1, s >= 1",
       "symmetric-weight case of the conjugate bound", prof_ab_s(),
       [](const EvalInput& in, const ExponentParams& p) {
         need_t(in);
         req_alpha_beta(p);
         req_s_ge1(p);
       },
       [](const EvalInput& in, const ExponentParams& p, const EvalOptions& o) {
         Ops ops(need_t(in));
         Interval lhs = pow_nonneg(
             radius_iv(ops.weighted(p.alpha + p.beta - 1.0), o), 2.0 * p.s);
         Matrix core = ops.ap(4.0 * p.s * p.alpha).matrix() +
                       ops.asp(4.0 * p.s * p.beta).matrix();
         Interval main = scale(norm_iv(core), 0.5);
         Interval corr =
             inf_sq(ops.ap(2.0 * p.s * p.alpha), ops.asp(2.0 * p.s * p.beta));
         return LhsRhs{lhs, sub(main, scale(corr, 0.5))};
       }});

  // w(T)^2 <= (1/2)||T*T + TT*|| - (1/2) inf (<|T|> - <|T*|>)^2.
  push({"REM_2_14", "2.14", Variant::AS_PRINTED, InputKind::OPERATOR, "none",
       "half-weight case; correction vanishes when |T| and |T*| share a "
       "minimizing direction",
       prof_none(),
       [](const EvalInput& in, const ExponentParams&) { need_t(in); },
       [](const EvalInput& in, const ExponentParams&, const EvalOptions& o) {
         Ops ops(need_t(in));
         Interval lhs = pow_nonneg(radius_iv(ops.t, o), 2.0);
         Interval main = scale(norm_iv(gram_sum(ops.t)), 0.5);
         Interval corr = inf_sq(ops.a(), ops.as());
         return LhsRhs{lhs, sub(main, scale(corr, 0.5))};
       }});

  // w(T|T|^{a+b-1} + S|S|^{g+d-1}) <=
  //   2^{-1/r} || |T|^{2ra} + |T*|^{2rb} ||^{1/r}
  // + 2^{-1/r} || |S|^{2rg} + |S*|^{2rd} ||^{1/r}
  // - (1/2) inf (<|T|^{2a}>^{1/2} - <|T*|^{2b}>^{1/2})^2
  // - (1/2) inf (<|S|^{2g}>^{1/2} - <|S*|^{2d}>^{1/2})^2.
  push({"THM2_15_2_15", "2.15", Variant::AS_PRINTED, InputKind::OPERATOR_PAIR,
       "alpha + beta >= 1, gamma + delta >= 1, r >= 1, dims match",
       "sum-of-operators bound with one correction per summand",
       prof_abgd_r(),
       [](const EvalInput& in, const ExponentParams& p) {
         const auto& t = need_t(in);
         need_s(in, t.dim());
         req_alpha_beta(p);
         req_gamma_delta(p);
         req_r_ge1(p);
       },
       [](const EvalInput& in, const ExponentParams& p, const EvalOptions& o) {
         Ops top(need_t(in));
         Ops sop(need_s(in, top.t.dim()));
         ComplexMatrix summed(top.weighted(p.alpha + p.beta - 1.0).raw() +
                              sop.weighted(p.gamma + p.delta - 1.0).raw());
         Interval lhs = radius_iv(summed, o);
         double coef = std::pow(2.0, -1.0 / p.r);
         Interval main_t =
             scale(pow_nonneg(norm_iv(top.ap(2.0 * p.r * p.alpha).matrix() +
                                      top.asp(2.0 * p.r * p.beta).matrix()),
                              1.0 / p.r),
                   coef);
         Interval main_s =
             scale(pow_nonneg(norm_iv(sop.ap(2.0 * p.r * p.gamma).matrix() +
                                      sop.asp(2.0 * p.r * p.delta).matrix()),
                              1.0 / p.r),
                   coef);
         Interval corr_t = inf_pow(top.ap(2.0 * p.alpha),
                                   top.asp(2.0 * p.beta), 0.5, 0.5);
         Interval corr_s = inf_pow(sop.ap(2.0 * p.gamma),
                                   sop.asp(2.0 * p.delta), 0.5, 0.5);
         Interval rhs = sub(sub(add(main_t, main_s), scale(corr_t, 0.5)),
                            scale(corr_s, 0.5));
         return LhsRhs{lhs, rhs};
       }});

  // r = 1 case: single norm of the four-term sum minus the two corrections.
  push({"COR_2_16", "2.16", Variant::AS_PRINTED, InputKind::OPERATOR_PAIR,
       "alpha + beta >= 1, gamma + delta >= 1, dims match",
       "merged main term at r = 1", prof_abgd(),
       [](const EvalInput& in, const ExponentParams& p) {
         const auto& t = need_t(in);
         need_s(in, t.dim());
         req_alpha_beta(p);
         req_gamma_delta(p);
       },
       [](const EvalInput& in, const ExponentParams& p, const EvalOptions& o) {
         Ops top(need_t(in));
         Ops sop(need_s(in, top.t.dim()));
         ComplexMatrix summed(top.weighted(p.alpha + p.beta - 1.0).raw() +
                              sop.weighted(p.gamma + p.delta - 1.0).raw());
         Interval lhs = radius_iv(summed, o);
         Matrix core = top.ap(2.0 * p.alpha).matrix() +
                       top.asp(2.0 * p.beta).matrix() +
                       sop.ap(2.0 * p.gamma).matrix() +
                       sop.asp(2.0 * p.delta).matrix();
         Interval corr_t = inf_pow(top.ap(2.0 * p.alpha),
                                   top.asp(2.0 * p.beta), 0.5, 0.5);
         Interval corr_s = inf_pow(sop.ap(2.0 * p.gamma),
                                   sop.asp(2.0 * p.delta), 0.5, 0.5);
         Interval rhs = sub(sub(scale(norm_iv(core), 0.5), scale(corr_t, 0.5)),
                            scale(corr_s, 0.5));
         return LhsRhs{lhs, rhs};
       }});

  // S = T, all weights 1/2:
  // w(T) <= (1/2)|| |T| + |T*| || - (1/2) inf (<|T|>^{1/2} - <|T*|>^{1/2})^2.
  push({"REM_SUM_HALF", "remark after 2.16", Variant::AS_PRINTED,
       InputKind::OPERATOR, "none", "half-weight collapse of the sum bound",
       prof_none(),
       [](const EvalInput& in, const ExponentParams&) { need_t(in); },
       [](const EvalInput& in, const ExponentParams&, const EvalOptions& o) {
         Ops ops(need_t(in));
         Interval lhs = radius_iv(ops.t, o);
         Interval main =
             scale(norm_iv(ops.a().matrix() + ops.as().matrix()), 0.5);
         Interval corr = inf_pow(ops.a(), ops.as(), 0.5, 0.5);
         return LhsRhs{lhs, sub(main, scale(corr, 0.5))};
       }});

  // S = T, all weights 1:
  // w(T|T|) <= (1/2)||T*T + TT*|| - (1/2) inf (<|T|^2>^{1/2} - <|T*|^2>^{1/2})^2.
  push({"REM_SUM_ONE", "remark after 2.16", Variant::AS_PRINTED,
       InputKind::OPERATOR, "none", "unit-weight collapse of the sum bound",
       prof_none(),
       [](const EvalInput& in, const ExponentParams&) { need_t(in); },
       [](const EvalInput& in, const ExponentParams&, const EvalOptions& o) {
         Ops ops(need_t(in));
         Interval lhs = radius_iv(ops.weighted(1.0), o);
         Interval main = scale(norm_iv(gram_sum(ops.t)), 0.5);
         Interval corr = inf_pow(ops.ap(2.0), ops.asp(2.0), 0.5, 0.5);
         return LhsRhs{lhs, sub(main, scale(corr, 0.5))};
       }});

  return rows;
}

IneqResult classify(const IneqRecord& rec, const LhsRhs& v, double tol) {
  IneqResult res;
  res.id = rec.id;
  res.variant = rec.variant;
  res.lhs = v.lhs;
  res.rhs = v.rhs;
  res.slack = v.rhs.lo - v.lhs.hi;
  if (v.lhs.hi <= v.rhs.lo + tol) {
    res.verdict = Verdict::HOLDS;
  } else if (v.lhs.lo > v.rhs.hi + tol) {
    res.verdict = Verdict::VIOLATED;
  } else {
    res.verdict = Verdict::INCONCLUSIVE;
  }
  res.equality = res.verdict == Verdict::HOLDS &&
                 std::abs(res.slack) <= 1e-8 * std::max(1.0, std::abs(v.rhs.hi));
  return res;
}

}  // namespace

std::string variant_name(Variant v) {
  return v == Variant::AS_PRINTED ? "AS_PRINTED" : "CORRECTED";
}

Variant variant_from_name(const std::string& name) {
  std::string n = name;
  std::transform(n.begin(), n.end(), n.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  std::replace(n.begin(), n.end(), '-', '_');
  if (n == "AS_PRINTED") return Variant::AS_PRINTED;
  if (n == "CORRECTED") return Variant::CORRECTED;
  throw ConfigInvalid("unknown variant name: " + name);
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::HOLDS:
      return "HOLDS";
    case Verdict::VIOLATED:
      return "VIOLATED";
    default:
      return "INCONCLUSIVE";
  }
}

std::string kind_name(InputKind k) {
  switch (k) {
    case InputKind::OPERATOR:
      return "operator";
    case InputKind::OPERATOR_PAIR:
      return "operator-pair";
    case InputKind::PSD_VECTOR:
      return "psd+vector";
    case InputKind::PAIR_VECTOR:
      return "pair+vector";
    case InputKind::OPERATOR_VECTOR:
      return "operator+vector";
    default:
      return "scalar";
  }
}

double verdict_tol(const Interval& rhs) {
  return 1e-9 * std::max(1.0, std::abs(rhs.hi));
}

const std::vector<IneqRecord>& registry() {
  static const std::vector<IneqRecord> rows = build_registry();
  return rows;
}

bool has_record(const std::string& id, Variant v) {
  for (const auto& r : registry())
    if (r.id == id && r.variant == v) return true;
  return false;
}

const IneqRecord& find_record(const std::string& id, Variant v) {
  for (const auto& r : registry())
    if (r.id == id && r.variant == v) return r;
  throw UnknownId("no registry row " + id + " / " + variant_name(v));
}

const IneqRecord& resolve_record(const std::string& id,
                                 std::optional<Variant> v) {
  return find_record(id, v.value_or(Variant::AS_PRINTED));
}

const ParamProfile& param_profile(const std::string& id) {
  return resolve_record(id, std::nullopt).profile;
}

std::vector<RegistryRow> list_registry() {
  std::vector<RegistryRow> out;
  out.reserve(registry().size());
  for (const auto& r : registry())
    out.push_back({r.id, r.paper_eq, r.variant, r.kind, r.hypothesis});
  return out;
}

IneqResult evaluate(const IneqRecord& rec, const EvalInput& in,
                    const ExponentParams& params, const EvalOptions& opts) {
  rec.require(in, params);
  LhsRhs v = rec.eval(in, params, opts);
  IneqResult res = classify(rec, v, verdict_tol(v.rhs));
  if (res.verdict == Verdict::INCONCLUSIVE && opts.allow_retry) {
    EvalOptions tighter = opts;
    tighter.width_scale = opts.width_scale * 0.01;
    tighter.allow_retry = false;
    v = rec.eval(in, params, tighter);
    res = classify(rec, v, verdict_tol(v.rhs));
  }
  return res;
}

IneqResult evaluate(const std::string& id, Variant v, const EvalInput& in,
                    const ExponentParams& params, const EvalOptions& opts) {
  return evaluate(find_record(id, v), in, params, opts);
}

IneqResult evaluate_scalar(const std::string& id, double a, double b,
                           const ExponentParams& params) {
  const IneqRecord& rec = resolve_record(id, std::nullopt);
  if (rec.kind != InputKind::SCALAR)
    throw UnknownId("registry row " + id + " does not take scalar inputs");
  EvalInput in;
  in.a = a;
  in.b = b;
  rec.require(in, params);
  LhsRhs v = rec.eval(in, params, {});
  // Exact floating-point comparison: a much tighter tolerance applies.
  double tol = 1e-12 * std::max(1.0, std::abs(v.rhs.hi));
  return classify(rec, v, tol);
}

ChainReport refinement_chain(const matcore::ComplexMatrix& t) {
  ChainReport rep;
  Interval upper = scale(norm_iv(gram_sum(t)), 0.5);
  PSDMatrix at = matcore::abs_op(t);
  PSDMatrix ats = matcore::abs_op(matcore::adjoint(t));
  Interval corr = inf_sq(at, ats);
  rep.kitt2005_upper = upper;
  rep.rem_2_11_corrected = sub(upper, scale(corr, 0.25));
  rep.rem_2_14 = sub(upper, scale(corr, 0.5));
  double tol = 1e-8 * std::max(1.0, std::abs(upper.hi));
  rep.chain_holds = rep.rem_2_14.hi <= rep.rem_2_11_corrected.lo + tol &&
                    rep.rem_2_11_corrected.hi <= upper.lo + tol;
  rep.correction = corr.hi;
  rep.degenerate = corr.hi <= 1e-8;
  return rep;
}

}  // namespace opineq::catalog
