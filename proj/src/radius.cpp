#include "opineq/radius.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>

namespace opineq::radius {

namespace {

using matcore::Complex;
using matcore::Matrix;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Matrix direction_part(const Matrix& t, double theta) {
  const Complex z = std::polar(1.0, theta);
  return (z * t + std::conj(z) * t.adjoint()) / 2.0;
}

double top_eig(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian,
                                               Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error("eigendecomposition failed to converge");
  }
  return solver.eigenvalues()(hermitian.rows() - 1);
}

Vector top_vec(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian);
  if (solver.info() != Eigen::Success) {
    throw Error("eigendecomposition failed to converge");
  }
  return solver.eigenvectors().col(hermitian.rows() - 1);
}

struct Node {
  double theta;
  double h;  // lambda_max(direction_part(theta))
};

// Hard cap on subdivision nodes; the vertex bound converges quadratically so
// this is never reached for sane width targets.
constexpr size_t kMaxNodes = size_t{1} << 21;

// The field of values is convex with support function h(theta), so inside an
// arc of width gap < pi/2 the peak modulus is bounded by the intersection of
// the two support lines: |z|^2 = (ha^2 + hb^2 - 2 ha hb cos gap) / sin^2 gap.
// Arcs with a nonpositive support value cannot contain the peak of a nonzero
// operator (the peak direction sees w * cos(gap) > 0 at both ends).
double arc_peak_bound(double ha, double hb, double gap) {
  if (ha <= 0.0 || hb <= 0.0) return std::max({ha, hb, 0.0});
  // (ha - hb)^2 + 4 ha hb sin^2(gap/2) equals the textbook
  // ha^2 + hb^2 - 2 ha hb cos(gap) without the cancellation that corrupts it
  // once the true value drops near rounding noise of the squared terms.
  const double sh = std::sin(0.5 * gap);
  const double num = (ha - hb) * (ha - hb) + 4.0 * ha * hb * sh * sh;
  const double v = std::sqrt(std::max(num, 0.0)) / std::sin(gap);
  return std::max({v, ha, hb});
}

bool near_hermitian(const Matrix& m) {
  return (m - m.adjoint()).norm() <=
         matcore::kHermitianTol * std::max(1.0, m.norm());
}

// Exact route for (skew-)Hermitian t: w = max |eigenvalue|. `phase` rotates
// reported peak angles (0 for Hermitian, the i-factor for skew-Hermitian).
RadiusResult selfadjoint_radius(const Matrix& h, const Matrix& t, double phase_pos,
                                double phase_neg, double width_target) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver((h + h.adjoint()) / 2.0);
  if (solver.info() != Eigen::Success) {
    throw Error("eigendecomposition failed to converge");
  }
  const int n = static_cast<int>(h.rows());
  const double hi_eig = solver.eigenvalues()(n - 1);
  const double lo_eig = solver.eigenvalues()(0);
  const double r = std::max(hi_eig, -lo_eig);
  const double slop = matcore::kNormSlop * std::max(1.0, r);

  RadiusResult res;
  res.witness = (hi_eig >= -lo_eig) ? solver.eigenvectors().col(n - 1)
                                    : solver.eigenvectors().col(0);
  const double tie = matcore::kNormSlop * std::max(1.0, r);
  if (hi_eig >= r - tie) res.peak_angles.push_back(phase_pos);
  if (-lo_eig >= r - tie) res.peak_angles.push_back(phase_neg);
  std::sort(res.peak_angles.begin(), res.peak_angles.end());
  const double attained = std::abs(res.witness.dot(t * res.witness));
  const double lo = std::max(attained, std::max(0.0, r - slop));
  res.value = make_interval(std::min(lo, r + slop), r + slop,
                            Method::EXACT_FORMULA);
  res.width_met = res.value.width() <= width_target;
  res.rounds = 0;
  return res;
}

}  // namespace

double default_width_target(const ComplexMatrix& t) {
  return 1e-8 * std::max(1.0, matcore::operator_norm(t));
}

RadiusResult numerical_radius(const ComplexMatrix& t) {
  return numerical_radius(t, default_width_target(t));
}

RadiusResult numerical_radius(const ComplexMatrix& t, double width_target) {
  if (!(width_target > 0.0) || !std::isfinite(width_target)) {
    throw ConfigInvalid("numerical_radius: width_target must be positive");
  }
  const int n = t.dim();
  const double scale = matcore::operator_norm(t);

  if (scale == 0.0) {
    RadiusResult res;
    res.value = make_interval(0.0, 0.0, Method::EXACT_FORMULA);
    res.peak_angles = {0.0};
    res.witness = Vector::Unit(n, 0);
    return res;
  }
  if (near_hermitian(t.raw())) {
    return selfadjoint_radius(t.raw(), t.raw(), 0.0, std::numbers::pi,
                              width_target);
  }
  {
    const Matrix h = Complex(0, -1) * t.raw();
    if (near_hermitian(h)) {
      // t = i h: the real part in direction theta is -sin(theta) * h.
      return selfadjoint_radius(h, t.raw(), 1.5 * std::numbers::pi,
                                0.5 * std::numbers::pi, width_target);
    }
  }

  std::vector<Node> nodes;
  nodes.reserve(4096);
  for (int k = 0; k < kInitialAngles; ++k) {
    const double theta = kTwoPi * k / kInitialAngles;
    nodes.push_back({theta, top_eig(direction_part(t.raw(), theta))});
  }

  double lo = nodes[0].h;
  for (const Node& nd : nodes) lo = std::max(lo, nd.h);

  const auto current_hi = [&]() {
    double hi = lo;
    for (size_t i = 0; i < nodes.size(); ++i) {
      const Node& a = nodes[i];
      const Node& b = nodes[(i + 1) % nodes.size()];
      const double gap = (i + 1 < nodes.size()) ? b.theta - a.theta
                                                : b.theta + kTwoPi - a.theta;
      hi = std::max(hi, arc_peak_bound(a.h, b.h, gap));
    }
    return hi;
  };

  int rounds = 0;
  double hi = current_hi();
  while (hi - lo > width_target && rounds < kMaxRounds &&
         nodes.size() < kMaxNodes) {
    std::vector<Node> next;
    next.reserve(nodes.size() * 2);
    for (size_t i = 0; i < nodes.size(); ++i) {
      const Node& a = nodes[i];
      const Node& b = nodes[(i + 1) % nodes.size()];
      const double gap = (i + 1 < nodes.size()) ? b.theta - a.theta
                                                : b.theta + kTwoPi - a.theta;
      next.push_back(a);
      if (arc_peak_bound(a.h, b.h, gap) > lo + width_target) {
        const double mid = a.theta + 0.5 * gap;
        Node m{mid, top_eig(direction_part(t.raw(), mid))};
        lo = std::max(lo, m.h);
        next.push_back(m);
      }
    }
    nodes = std::move(next);
    ++rounds;
    // Each round's bound is valid on its own, so the enclosure may only
    // tighten.
    hi = std::min(hi, current_hi());
  }

  RadiusResult res;
  res.rounds = rounds;
  res.width_met = hi - lo <= width_target;

  double best = -1.0;
  double best_theta = 0.0;
  for (const Node& nd : nodes) {
    if (nd.h > best) {
      best = nd.h;
      best_theta = nd.theta;
    }
  }
  const double tie = 1e-12 * std::max(1.0, scale);
  for (const Node& nd : nodes) {
    if (nd.h >= best - tie) res.peak_angles.push_back(nd.theta);
  }
  res.witness = top_vec(direction_part(t.raw(), best_theta));
  // |<t x, x>| >= Re(e^{i theta} <t x, x>) = h(theta*), so the witness can
  // only tighten the lower endpoint.
  const double attained = std::abs(res.witness.dot(t.raw() * res.witness));
  lo = std::max(lo, attained);
  res.value = make_interval(std::min(lo, hi), hi, Method::GRID_LIPSCHITZ);
  return res;
}

RangeBoundary range_boundary(const ComplexMatrix& t, int count) {
  if (count < 3) throw ConfigInvalid("range_boundary: count must be >= 3");
  RangeBoundary rb;
  rb.angles.reserve(count);
  rb.points.reserve(count);
  for (int k = 0; k < count; ++k) {
    const double theta = kTwoPi * k / count;
    const Vector x = top_vec(direction_part(t.raw(), theta));
    rb.angles.push_back(theta);
    rb.points.push_back(x.dot(t.raw() * x));
  }
  return rb;
}

void write_boundary_csv(const RangeBoundary& b, std::ostream& out) {
  out << "theta,re,im\n";
  char buf[96];
  for (size_t i = 0; i < b.angles.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g", b.angles[i],
                  b.points[i].real(), b.points[i].imag());
    out << buf << "\n";
  }
}

void write_boundary_csv(const RangeBoundary& b, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoFailure("cannot open for write: " + path);
  write_boundary_csv(b, out);
  if (!out) throw IoFailure("write failed: " + path);
}

}  // namespace opineq::radius
