#include "opineq/matcore.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace opineq::matcore {

namespace {

double rel_scale(double v) { return std::max(1.0, v); }

}  // namespace

ComplexMatrix::ComplexMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) {
    throw DimensionMismatch("matrix must be square");
  }
  const int n = static_cast<int>(m_.rows());
  if (n < 1 || n > kMaxDim) {
    throw DimensionOutOfRange("matrix dimension must be in [1, 256]");
  }
  if (!m_.allFinite()) {
    throw Error("matrix entries must be finite");
  }
}

ComplexMatrix ComplexMatrix::identity(int n) {
  return ComplexMatrix(Matrix::Identity(n, n));
}

ComplexMatrix ComplexMatrix::zero(int n) {
  return ComplexMatrix(Matrix::Zero(n, n));
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m)
    : mat_(ComplexMatrix(Matrix((m.raw() + m.raw().adjoint()) / 2.0))) {
  const double defect = (m.raw() - m.raw().adjoint()).norm();
  if (defect > kHermitianTol * rel_scale(m.raw().norm())) {
    throw NotHermitian("matrix is not Hermitian within tolerance");
  }
}

EighResult eigh(const HermitianMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m.raw());
  if (solver.info() != Eigen::Success) {
    throw Error("eigendecomposition failed to converge");
  }
  return EighResult{solver.eigenvalues(), solver.eigenvectors()};
}

PSDMatrix::PSDMatrix(const HermitianMatrix& a) {
  EighResult e = eigh(a);
  const double clip = kPsdClipTol * rel_scale(a.raw().norm());
  for (Eigen::Index i = 0; i < e.eigenvalues.size(); ++i) {
    double& lam = e.eigenvalues(i);
    if (lam < -clip) {
      throw NotPSD("matrix has an eigenvalue below the PSD clip window");
    }
    if (lam < 0.0) lam = 0.0;
  }
  vec_ = std::move(e.eigenvectors);
  lam_ = std::move(e.eigenvalues);
  Matrix rec = vec_ * lam_.asDiagonal().toDenseMatrix().cast<Complex>() *
               vec_.adjoint();
  mat_ = (rec + rec.adjoint()) / 2.0;  // exact Hermitian representative
}

PSDMatrix PSDMatrix::from_spectrum(Matrix eigenvectors, RealVector eigenvalues) {
  if (eigenvectors.rows() != eigenvectors.cols() ||
      eigenvectors.rows() != eigenvalues.size()) {
    throw DimensionMismatch("spectral form shapes disagree");
  }
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    if (!(eigenvalues(i) >= 0.0) || !std::isfinite(eigenvalues(i))) {
      throw NotPSD("spectral form requires finite eigenvalues >= 0");
    }
  }
  PSDMatrix p;
  p.vec_ = std::move(eigenvectors);
  p.lam_ = std::move(eigenvalues);
  Matrix rec = p.vec_ * p.lam_.asDiagonal().toDenseMatrix().cast<Complex>() *
               p.vec_.adjoint();
  p.mat_ = (rec + rec.adjoint()) / 2.0;
  return p;
}

ComplexMatrix adjoint(const ComplexMatrix& t) {
  return ComplexMatrix(t.raw().adjoint());
}

PSDMatrix abs_op(const ComplexMatrix& t) {
  const Matrix gram = t.raw().adjoint() * t.raw();
  PSDMatrix sq{HermitianMatrix(ComplexMatrix(gram))};
  RealVector lam = sq.eigenvalues();
  for (Eigen::Index i = 0; i < lam.size(); ++i) lam(i) = std::sqrt(lam(i));
  return PSDMatrix::from_spectrum(sq.eigenvectors(), std::move(lam));
}

PSDMatrix frac_power(const PSDMatrix& a, double e) {
  if (e < 0) throw NegativeExponent("frac_power: exponent must be >= 0");
  RealVector lam = a.eigenvalues();
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    lam(i) = (e == 0.0) ? 1.0 : std::pow(lam(i), e);  // 0^0 = 1
  }
  return PSDMatrix::from_spectrum(a.eigenvectors(), std::move(lam));
}

namespace {

// Canonical gauge for a kernel basis: each column's largest entry is made
// real positive, then columns sort lexicographically by (re, im) entries.
// Keeps the polar completion deterministic under eigenvector phase ambiguity.
std::vector<Vector> canonical_kernel_basis(const Matrix& vectors, int k) {
  std::vector<Vector> cols;
  cols.reserve(k);
  for (int j = 0; j < k; ++j) {
    Vector v = vectors.col(j);
    Eigen::Index imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    if (std::abs(v(imax)) > 1e-300) v *= std::conj(v(imax)) / std::abs(v(imax));
    cols.push_back(std::move(v));
  }
  std::sort(cols.begin(), cols.end(), [](const Vector& a, const Vector& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a(i).real() != b(i).real()) return a(i).real() < b(i).real();
      if (a(i).imag() != b(i).imag()) return a(i).imag() < b(i).imag();
    }
    return false;
  });
  return cols;
}

}  // namespace

PolarParts polar_decompose(const ComplexMatrix& t) {
  const int n = t.dim();
  PSDMatrix p = abs_op(t);
  const double lam_max = p.eigenvalues()(n - 1);
  const double cut = 1e-12 * rel_scale(lam_max);

  // Numerical kernel = the k smallest eigendirections of |t|.
  int k = 0;
  while (k < n && p.eigenvalues()(k) <= cut) ++k;

  Matrix u = Matrix::Zero(n, n);
  for (int i = k; i < n; ++i) {
    u += (t.raw() * p.eigenvectors().col(i)) *
         (p.eigenvectors().col(i).adjoint() / p.eigenvalues()(i));
  }
  if (k > 0) {
    // Complete over the kernel: ker|t| maps onto ker|t*| = range(t)^perp,
    // bases paired in ascending eigenvalue order on both sides.
    PSDMatrix ps = abs_op(adjoint(t));
    const std::vector<Vector> src = canonical_kernel_basis(p.eigenvectors(), k);
    const std::vector<Vector> dst = canonical_kernel_basis(ps.eigenvectors(), k);
    for (int j = 0; j < k; ++j) {
      u += dst[j] * src[j].adjoint();
    }
  }
  return PolarParts{ComplexMatrix(std::move(u)), std::move(p)};
}

ComplexMatrix aluthge(const ComplexMatrix& t) {
  PolarParts parts = polar_decompose(t);
  const Matrix root = frac_power(parts.p, 0.5).matrix();
  return ComplexMatrix(root * parts.u.raw() * root);
}

double operator_norm(const ComplexMatrix& t) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(t.raw().adjoint() * t.raw(),
                                               Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error("eigendecomposition failed to converge");
  }
  return std::sqrt(std::max(0.0, solver.eigenvalues()(t.dim() - 1)));
}

double frobenius_norm(const ComplexMatrix& t) { return t.raw().norm(); }

double commutation_defect(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("commutation_defect: dimensions disagree");
  }
  const Matrix am = abs_op(a).matrix();
  const Matrix d = am * b.raw() - b.raw().adjoint() * am;
  return operator_norm(ComplexMatrix(d));
}

namespace {

// Exact path when b equals the recorded polynomial of a PSD matrix.
bool hint_applies(const ComplexMatrix& b, const PolyHint& hint, double* out) {
  if (hint.base.dim() != b.dim() || hint.coeffs.empty()) return false;
  const int n = b.dim();
  RealVector q = RealVector::Zero(n);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0, x = 1.0;
    for (double c : hint.coeffs) {
      acc += c * x;
      x *= hint.base.eigenvalues()(i);
    }
    q(i) = acc;
  }
  Matrix rec = hint.base.eigenvectors() *
               q.asDiagonal().toDenseMatrix().cast<Complex>() *
               hint.base.eigenvectors().adjoint();
  if ((rec - b.raw()).norm() > 1e-8 * rel_scale(b.raw().norm())) return false;
  *out = q.cwiseAbs().maxCoeff();
  return true;
}

bool near_hermitian(const Matrix& m) {
  return (m - m.adjoint()).norm() <= kHermitianTol * rel_scale(m.norm());
}

double max_abs_eig(const Matrix& hermitian_part) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part,
                                               Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error("eigendecomposition failed to converge");
  }
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

SpectralRadiusResult spectral_radius(const ComplexMatrix& b,
                                     const PolyHint* hint) {
  const int n = b.dim();
  double r = 0.0;
  if (hint != nullptr && hint_applies(b, *hint, &r)) {
    const double slop = kNormSlop * rel_scale(r);
    return {make_interval(std::max(0.0, r - slop), r + slop,
                          Method::EXACT_FORMULA),
            true, 0};
  }
  if (near_hermitian(b.raw())) {
    r = max_abs_eig((b.raw() + b.raw().adjoint()) / 2.0);
    const double slop = kNormSlop * rel_scale(r);
    return {make_interval(std::max(0.0, r - slop), r + slop,
                          Method::EXACT_FORMULA),
            true, 0};
  }
  if (near_hermitian(Matrix(Complex(0, -1) * b.raw()))) {
    // Skew-Hermitian: spectrum is i * spec(-i b).
    Matrix h = Complex(0, -1) * b.raw();
    r = max_abs_eig((h + h.adjoint()) / 2.0);
    const double slop = kNormSlop * rel_scale(r);
    return {make_interval(std::max(0.0, r - slop), r + slop,
                          Method::EXACT_FORMULA),
            true, 0};
  }

  // Gelfand: x_k = ||b^(2^k)||^(1/2^k) decreases to rho(b), giving the upper
  // endpoint. The lower endpoint comes from |tr(b^m)| <= n rho^m, so
  // rho >= (|tr(b^m)| / n)^(1/m), evaluated in log space on the renormalized
  // iterates so neither side ever overflows.
  const double width_target = 1e-6 * rel_scale(operator_norm(b));
  Matrix cur = b.raw();
  double log_x = 0.0;  // running sum of 2^-j * ln s_j = ln x_k
  double x = 0.0;
  double lo = 0.0;
  int k = 0;
  for (;; ++k) {
    const double s = operator_norm(ComplexMatrix(cur));
    if (s == 0.0) {
      // A power vanished: b is nilpotent, radius exactly 0.
      return {make_interval(0.0, 0.0, Method::EXACT_FORMULA), true, k};
    }
    log_x += std::ldexp(std::log(s), -k);
    const double xk = std::exp(log_x);
    x = (k == 0) ? xk : std::min(x, xk);  // theoretical monotonicity, enforced
    const double abs_tr = std::abs(cur.trace());
    if (abs_tr > 1e-300) {
      // tr(b^m) = tr(cur) * (||b^m|| / s), recovered through log_x.
      const double log_lo =
          log_x + std::ldexp(std::log(abs_tr) - std::log(s) - std::log(n), -k);
      lo = std::max(lo, std::exp(log_lo));
    }
    if (x - lo <= width_target || k >= 20) break;
    cur /= s;
    cur = cur * cur;
  }
  // Shave the certified endpoints by the accumulated squaring slop.
  lo = std::max(0.0, lo * (1.0 - 1e-9));
  x *= 1.0 + 1e-9;
  lo = std::min(lo, x);
  const bool converged = x - lo <= width_target;
  return {make_interval(lo, x, Method::GELFAND), converged, k};
}

double quad_form(const Matrix& m, const Vector& x) {
  return x.dot(m * x).real();
}

}  // namespace opineq::matcore
