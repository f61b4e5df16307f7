// Test-side reference implementations. These deliberately avoid the library's
// algorithms: norms go through SVD, radii through random sampling with a local
// hill climb, and form minima through brute sampling, so agreement is evidence
// rather than tautology.
#pragma once

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <complex>
#include <random>

#include "opineq/matcore.hpp"

namespace oracles {

using opineq::matcore::Complex;
using opineq::matcore::Matrix;
using opineq::matcore::Vector;

inline double svd_norm(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

// Largest eigenvalue modulus; equals the numerical radius for normal inputs.
inline double eig_radius(const Matrix& m) {
  Eigen::ComplexEigenSolver<Matrix> es(m, false);
  double best = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    best = std::max(best, std::abs(es.eigenvalues()(i)));
  }
  return best;
}

inline Vector random_unit(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector x(n);
  for (int i = 0; i < n; ++i) x(i) = Complex(gauss(rng), gauss(rng));
  if (x.norm() < 1e-12) return Vector::Unit(n, 0);
  x.normalize();
  return x;
}

// Sampling lower bound for sup |<Tx,x>| with random-direction hill climbing.
inline double sampled_radius(const Matrix& t, int samples, int climbs,
                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = static_cast<int>(t.rows());
  const auto value = [&](const Vector& x) { return std::abs(x.dot(t * x)); };
  double best = 0.0;
  Vector best_x = Vector::Unit(n, 0);
  for (int s = 0; s < samples; ++s) {
    Vector x = random_unit(n, rng);
    const double v = value(x);
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  double step = 0.5;
  for (int it = 0; it < climbs; ++it) {
    Vector cand = best_x + step * random_unit(n, rng);
    cand.normalize();
    const double v = value(cand);
    if (v > best) {
      best = v;
      best_x = cand;
    } else {
      step = std::max(step * 0.93, 1e-6);
    }
  }
  return best;
}

// Brute minimum of (<Ax,x> - <Bx,x>)^2 over the unit sphere.
inline double brute_min_form_sq(const Matrix& a, const Matrix& b, int samples,
                                int climbs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = static_cast<int>(a.rows());
  const Matrix d = a - b;
  const auto value = [&](const Vector& x) {
    const double f = x.dot(d * x).real();
    return f * f;
  };
  double best = std::numeric_limits<double>::infinity();
  Vector best_x = Vector::Unit(n, 0);
  for (int s = 0; s < samples; ++s) {
    Vector x = random_unit(n, rng);
    const double v = value(x);
    if (v < best) {
      best = v;
      best_x = x;
    }
  }
  double step = 0.5;
  for (int it = 0; it < climbs; ++it) {
    Vector cand = best_x + step * random_unit(n, rng);
    cand.normalize();
    const double v = value(cand);
    if (v < best) {
      best = v;
      best_x = cand;
    } else {
      step = std::max(step * 0.93, 1e-7);
    }
  }
  return best;
}

}  // namespace oracles
