#pragma once

#include <iosfwd>
#include <vector>

#include "opineq/matcore.hpp"

namespace opineq::radius {

using matcore::ComplexMatrix;
using matcore::Vector;

inline constexpr int kInitialAngles = 64;
inline constexpr int kMaxRounds = 24;

struct RadiusResult {
  Interval value;                  // certified: w(t) in [lo, hi]
  bool width_met = true;           // false = round cap hit first
  int rounds = 0;
  std::vector<double> peak_angles; // maximizing angles, ties retained
  Vector witness;                  // unit x with |<t x, x>| = value.lo
};

double default_width_target(const ComplexMatrix& t);  // 1e-8 * max(1, ||t||)

// Encloses w(t) = max_theta lambda_max((e^{i theta} t + e^{-i theta} t*)/2).
// theta -> lambda_max is the support function of the (convex) numerical
// range, so on each grid arc the intersection of the two endpoint support
// lines caps the maximum; arcs whose cap exceeds the running lower bound
// are bisected, at most kMaxRounds times. Hermitian and skew-Hermitian
// inputs short-circuit to max |eigenvalue|.
RadiusResult numerical_radius(const ComplexMatrix& t, double width_target);
RadiusResult numerical_radius(const ComplexMatrix& t);

struct RangeBoundary {
  std::vector<double> angles;                  // strictly increasing in [0, 2pi)
  std::vector<std::complex<double>> points;    // <t x_k, x_k>, boundary contact
};

// Supporting points of the numerical range in `count` uniform directions:
// x_k is a top eigenvector of Re(e^{-i theta_k} t... ) equivalently
// H(theta_k); <t x_k, x_k> lies on the boundary of W(t).
RangeBoundary range_boundary(const ComplexMatrix& t, int count);

// CSV with header "theta,re,im", one row per angle, %.17g formatting.
void write_boundary_csv(const RangeBoundary& b, std::ostream& out);
void write_boundary_csv(const RangeBoundary& b, const std::string& path);

}  // namespace opineq::radius
