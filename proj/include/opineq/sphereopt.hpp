#pragma once

#include <cstdint>

#include "opineq/matcore.hpp"

namespace opineq::sphereopt {

using matcore::PSDMatrix;
using matcore::Vector;

inline constexpr int kSweepAngles = 720;

// Inputs for inf over unit x of (<a x,x>^u - <b x,x>^v)^2. Forms are clamped
// at 0 before powering; exponents must be positive.
struct FormPair {
  PSDMatrix a;
  PSDMatrix b;
  double u = 1.0;
  double v = 1.0;
};

struct InfResult {
  Interval value;
  Vector witness;            // unit vector; evaluating the objective at it
                             // lands in [value.lo, value.hi + 1e-9*scale]
  bool attained_zero = false;
};

// inf <(a-b)x, x> over the unit sphere = lambda_min(a - b). Exact.
InfResult inf_form_diff(const PSDMatrix& a, const PSDMatrix& b);

// inf (<a x,x> - <b x,x>)^2. Exact: the form difference ranges over
// [lambda_min, lambda_max] of a-b, so the square's infimum is 0 when that
// interval straddles 0 and min of the squared endpoints otherwise.
InfResult inf_sq_form_diff(const PSDMatrix& a, const PSDMatrix& b);

// General exponents. The joint quadratic-form range
// F = {(<a x,x>, <b x,x>)} is convex and compact; s^u - t^v is monotone in
// each coordinate, so its extrema over F sit on the boundary. The boundary is
// swept with kSweepAngles support directions (top eigenvector of
// cos(theta) a + sin(theta) b); a sign change forces an exact zero (located
// by bisection along the connecting arc), otherwise the best support angle is
// refined by golden section, mid-edge arcs are scanned, and a projected
// gradient polish runs from the best point. The reported lower endpoint is
// deflated by the refinement's observed improvement as an uncertainty margin.
InfResult inf_power_diff(const FormPair& pair);

// Test oracle: random unit starts (explicit seed) followed by short projected
// gradient descents; returns the smallest objective value seen.
double sphere_brute_oracle(const FormPair& pair, int samples,
                           int descent_steps, std::uint64_t seed);

}  // namespace opineq::sphereopt
