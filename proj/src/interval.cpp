#include "opineq/interval.hpp"

#include <algorithm>
#include <cmath>

namespace opineq {

namespace {

// Higher rank = weaker certification; combined results inherit the weakest.
int method_rank(Method m) {
  switch (m) {
    case Method::EXACT_FORMULA: return 0;
    case Method::SWEEP_SUPPORT: return 1;
    case Method::GRID_LIPSCHITZ: return 2;
    case Method::GELFAND: return 3;
    case Method::SAMPLING_LOWER: return 4;
  }
  return 4;
}

Method weaker(Method a, Method b) {
  return method_rank(a) >= method_rank(b) ? a : b;
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::EXACT_FORMULA: return "EXACT_FORMULA";
    case Method::GRID_LIPSCHITZ: return "GRID_LIPSCHITZ";
    case Method::GELFAND: return "GELFAND";
    case Method::SWEEP_SUPPORT: return "SWEEP_SUPPORT";
    case Method::SAMPLING_LOWER: return "SAMPLING_LOWER";
  }
  return "UNKNOWN";
}

Interval make_interval(double lo, double hi, Method m) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error("interval endpoints must be finite");
  }
  if (lo > hi) {
    throw Error("interval lower endpoint exceeds upper endpoint");
  }
  return Interval{lo, hi, m};
}

Interval point_interval(double v, Method m) { return make_interval(v, v, m); }

Interval add(const Interval& a, const Interval& b) {
  return make_interval(a.lo + b.lo, a.hi + b.hi, weaker(a.method, b.method));
}

Interval sub(const Interval& a, const Interval& b) {
  return make_interval(a.lo - b.hi, a.hi - b.lo, weaker(a.method, b.method));
}

Interval scale(const Interval& a, double c) {
  if (c >= 0) return make_interval(a.lo * c, a.hi * c, a.method);
  return make_interval(a.hi * c, a.lo * c, a.method);
}

Interval shift(const Interval& a, double c) {
  return make_interval(a.lo + c, a.hi + c, a.method);
}

Interval max_of(const Interval& a, const Interval& b) {
  return make_interval(std::max(a.lo, b.lo), std::max(a.hi, b.hi),
                       weaker(a.method, b.method));
}

Interval pow_nonneg(const Interval& a, double e) {
  if (e < 0) throw NegativeExponent("pow_nonneg: exponent must be >= 0");
  const double lo = std::max(a.lo, 0.0);
  const double hi = std::max(a.hi, 0.0);
  if (e == 0.0) return make_interval(1.0, 1.0, a.method);  // 0^0 = 1 convention
  return make_interval(std::pow(lo, e), std::pow(hi, e), a.method);
}

}  // namespace opineq
