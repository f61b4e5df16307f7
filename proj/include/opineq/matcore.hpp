#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "opineq/errors.hpp"
#include "opineq/interval.hpp"

namespace opineq::matcore {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr int kMaxDim = 256;

// Tolerances (relative to max(1, scale) unless noted).
inline constexpr double kHermitianTol = 1e-12;  // ||m-m*||_F / max(1,||m||_F)
inline constexpr double kPsdClipTol = 1e-10;    // clip window below 0
inline constexpr double kPolarTol = 1e-10;      // polar reconstruction residual
inline constexpr double kNormSlop = 1e-12;      // eigensolver slop on norm values

// Square complex matrix with finite entries, 1 <= n <= 256.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(Matrix m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& raw() const { return m_; }

  static ComplexMatrix identity(int n);
  static ComplexMatrix zero(int n);

 private:
  Matrix m_;
};

// Wrapper certifying ||m - m*||_F <= 1e-12 * max(1, ||m||_F). The stored
// matrix is the symmetrized (m + m*)/2 so downstream code sees an exact
// Hermitian representative.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const ComplexMatrix& m);

  int dim() const { return mat_.dim(); }
  const Matrix& raw() const { return mat_.raw(); }
  const ComplexMatrix& base() const { return mat_; }

 private:
  ComplexMatrix mat_;
};

struct EighResult {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // columns, orthonormal
};

// Hermitian eigendecomposition. Post: reconstruction residual
// ||V diag(lam) V* - m||_F <= 1e-10 * max(1, ||m||_F).
EighResult eigh(const HermitianMatrix& m);

// Positive semidefinite matrix stored in spectral form. Construction clips
// eigenvalues in [-1e-10*s, 0) to 0 where s = max(1, ||a||_F) and rejects
// anything below the window.
class PSDMatrix {
 public:
  explicit PSDMatrix(const HermitianMatrix& a);

  int dim() const { return static_cast<int>(lam_.size()); }
  const Matrix& matrix() const { return mat_; }          // clipped reconstruction
  const RealVector& eigenvalues() const { return lam_; } // ascending, >= 0
  const Matrix& eigenvectors() const { return vec_; }
  double eigen_floor() const { return lam_(0); }

  // Spectral-form constructor for functions of an existing PSDMatrix.
  static PSDMatrix from_spectrum(Matrix eigenvectors, RealVector eigenvalues);

 private:
  PSDMatrix() = default;
  Matrix vec_;
  RealVector lam_;
  Matrix mat_;
};

struct PolarParts {
  ComplexMatrix u;  // unitary within 1e-10
  PSDMatrix p;      // |t|
};

ComplexMatrix adjoint(const ComplexMatrix& t);

// |t| = (t* t)^(1/2) via the Hermitian eigenkernel.
PSDMatrix abs_op(const ComplexMatrix& t);

// a^e for e >= 0 on the PSD cone; 0^0 = 1 so a^0 = I exactly.
PSDMatrix frac_power(const PSDMatrix& a, double e);

// t = u p with p = |t|; on ker(p) the unitary factor is completed
// deterministically (kernel bases matched in ascending eigenvalue order).
PolarParts polar_decompose(const ComplexMatrix& t);

// |t|^(1/2) u |t|^(1/2) with (u, |t|) from polar_decompose.
ComplexMatrix aluthge(const ComplexMatrix& t);

double operator_norm(const ComplexMatrix& t);  // largest singular value
double frobenius_norm(const ComplexMatrix& t);

// || |a| b - b* |a| ||: zero iff b*|a| is selfadjoint.
double commutation_defect(const ComplexMatrix& a, const ComplexMatrix& b);

// Records b = sum_k coeffs[k] * base^k for the exact spectral-radius path.
struct PolyHint {
  PSDMatrix base;
  std::vector<double> coeffs;  // ascending degree
};

struct SpectralRadiusResult {
  Interval enclosure;
  bool converged = true;  // false = Gelfand fallback hit its iteration cap
  int iterations = 0;
};

// Spectral radius enclosure. Paths, in order: polynomial hint (exact),
// Hermitian / skew-Hermitian (exact, max |eigenvalue|), Gelfand iteration
// x_k = ||b^(2^k)||^(2^-k) for the upper endpoint with the trace bound
// rho >= (|tr(b^(2^k))| / n)^(2^-k) certifying the lower one.
SpectralRadiusResult spectral_radius(const ComplexMatrix& b,
                                     const PolyHint* hint = nullptr);

// Real part of <m x, x>; m need not be Hermitian.
double quad_form(const Matrix& m, const Vector& x);

// --- matrix JSON interchange: {"n": n, "re": [[..]], "im": [[..]]} ---
ComplexMatrix parse_matrix_json(const std::string& text);
ComplexMatrix read_matrix_json(const std::string& path);
std::string matrix_to_json(const ComplexMatrix& t);
void write_matrix_json(const ComplexMatrix& t, const std::string& path);

}  // namespace opineq::matcore
