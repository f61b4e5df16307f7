#pragma once

#include <string>

#include "opineq/errors.hpp"

namespace opineq {

// Provenance tag for an enclosure. EXACT_FORMULA marks closed-form endpoints,
// the others name the algorithm that certified the bracket.
enum class Method {
  EXACT_FORMULA,
  GRID_LIPSCHITZ,
  GELFAND,
  SWEEP_SUPPORT,
  SAMPLING_LOWER,
};

std::string method_name(Method m);

// Closed enclosure [lo, hi] of a real scalar. Invariant: lo <= hi, both finite.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  Method method = Method::EXACT_FORMULA;

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double v) const { return lo <= v && v <= hi; }
};

Interval make_interval(double lo, double hi, Method m);
Interval point_interval(double v, Method m = Method::EXACT_FORMULA);

// Endpoint arithmetic. Enclosure is preserved: if x in a and y in b then
// x+y in add(a,b), etc. Method of the result is the weaker of the operands'.
Interval add(const Interval& a, const Interval& b);
Interval sub(const Interval& a, const Interval& b);
Interval scale(const Interval& a, double c);
Interval shift(const Interval& a, double c);
Interval max_of(const Interval& a, const Interval& b);
// t^e for t >= 0 (lo is clamped at 0), e >= 0; monotone, so endpoints map.
Interval pow_nonneg(const Interval& a, double e);

}  // namespace opineq
