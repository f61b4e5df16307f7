#include "opineq/gen.hpp"

#include <Eigen/QR>
#include <cmath>
#include <numbers>

#include "opineq/catalog.hpp"

namespace opineq::gen {

namespace {

using matcore::Complex;
using matcore::Matrix;
using matcore::Vector;

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t k1, std::uint64_t k2,
         std::uint64_t k3) {
  state_ = mix64(seed + kGolden);
  state_ = mix64(state_ ^ (k1 + kGolden));
  state_ = mix64(state_ ^ (k2 + kGolden));
  state_ = mix64(state_ ^ (k3 + kGolden));
}

std::uint64_t Rng::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

double Rng::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log1p(-u1));  // u1 < 1 always
  const double th = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(th);
  have_spare_ = true;
  return r * std::cos(th);
}

Complex Rng::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return Complex(re, im) / std::sqrt(2.0);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag,
                       std::uint64_t draw) {
  return mix64(mix64(seed + kGolden) ^ (tag + kGolden)) ^ mix64(draw + kGolden);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::GINIBRE: return "GINIBRE";
    case Family::GUE: return "GUE";
    case Family::HAAR_UNITARY: return "HAAR_UNITARY";
    case Family::NORMAL: return "NORMAL";
    case Family::NILPOTENT_SHIFT: return "NILPOTENT_SHIFT";
    case Family::RANK_ONE: return "RANK_ONE";
    case Family::REID_PAIR: return "REID_PAIR";
    case Family::FG_PAIR: return "FG_PAIR";
    case Family::PARAM_2X2: return "PARAM_2X2";
  }
  return "GINIBRE";
}

Family family_from_name(const std::string& name) {
  for (Family f :
       {Family::GINIBRE, Family::GUE, Family::HAAR_UNITARY, Family::NORMAL,
        Family::NILPOTENT_SHIFT, Family::RANK_ONE, Family::REID_PAIR,
        Family::FG_PAIR, Family::PARAM_2X2}) {
    if (family_name(f) == name) return f;
  }
  throw ParseError("unknown generator family: " + name);
}

namespace {

Matrix ginibre(int n, Rng& rng) {
  Matrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = rng.complex_gaussian();
  }
  return g;
}

Matrix haar_unitary(int n, Rng& rng) {
  const Matrix g = ginibre(n, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().template triangularView<Eigen::Upper>();
  // Phase correction: multiply columns by the phases of diag(R) to make the
  // distribution Haar rather than QR-convention dependent.
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= (std::abs(d) > 1e-300) ? d / std::abs(d) : Complex(1, 0);
  }
  return q;
}

// Polynomial in a PSD matrix through its spectral form.
Matrix poly_of(const matcore::PSDMatrix& base, const std::vector<double>& c) {
  matcore::RealVector lam = base.eigenvalues();
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    double acc = 0.0, x = 1.0;
    for (double ck : c) {
      acc += ck * x;
      x *= base.eigenvalues()(i);
    }
    lam(i) = acc;
  }
  Matrix rec = base.eigenvectors() *
               lam.asDiagonal().toDenseMatrix().cast<Complex>() *
               base.eigenvectors().adjoint();
  return (rec + rec.adjoint()) / 2.0;
}

}  // namespace

Sample sample(const GeneratorSpec& spec) {
  const int n = spec.dim;
  if (n < 1 || n > matcore::kMaxDim) {
    throw DimensionOutOfRange("generator dim must be in [1, 256]");
  }
  Rng rng(spec.seed, 10 + static_cast<std::uint64_t>(spec.family),
          static_cast<std::uint64_t>(n), spec.draw);

  switch (spec.family) {
    case Family::GINIBRE:
      return Sample{matcore::ComplexMatrix(ginibre(n, rng)), {}, {}, {}};
    case Family::GUE: {
      const Matrix g = ginibre(n, rng);
      return Sample{matcore::ComplexMatrix((g + g.adjoint()) / 2.0), {}, {}, {}};
    }
    case Family::HAAR_UNITARY:
      return Sample{matcore::ComplexMatrix(haar_unitary(n, rng)), {}, {}, {}};
    case Family::NORMAL: {
      const Matrix u = haar_unitary(n, rng);
      Vector z(n);
      for (int i = 0; i < n; ++i) z(i) = rng.complex_gaussian();
      return Sample{
          matcore::ComplexMatrix(u * z.asDiagonal().toDenseMatrix() *
                                 u.adjoint()),
          {}, {}, {}};
    }
    case Family::NILPOTENT_SHIFT: {
      Matrix j = Matrix::Zero(n, n);
      for (int i = 0; i + 1 < n; ++i) j(i, i + 1) = 1.0;
      return Sample{matcore::ComplexMatrix(std::move(j)), {}, {}, {}};
    }
    case Family::RANK_ONE: {
      Vector x(n), y(n);
      for (int i = 0; i < n; ++i) x(i) = rng.complex_gaussian();
      for (int i = 0; i < n; ++i) y(i) = rng.complex_gaussian();
      return Sample{matcore::ComplexMatrix(Matrix(x * y.adjoint())), {}, {}, {}};
    }
    case Family::REID_PAIR: {
      const Matrix g = ginibre(n, rng);
      Matrix h = (g + g.adjoint()) / 2.0;
      matcore::EighResult e = matcore::eigh(
          matcore::HermitianMatrix(matcore::ComplexMatrix(h)));
      const double shift = std::min(0.0, e.eigenvalues(0));
      Matrix a = h - shift * Matrix::Identity(n, n);
      std::vector<double> coeffs(4);
      for (double& c : coeffs) c = rng.uniform(-1.0, 1.0);
      matcore::PSDMatrix a_psd{
          matcore::HermitianMatrix(matcore::ComplexMatrix(a))};
      Matrix b = poly_of(a_psd, coeffs);
      Sample s{matcore::ComplexMatrix(std::move(a)),
               matcore::ComplexMatrix(std::move(b)),
               matcore::PolyHint{a_psd, coeffs}, coeffs};
      return s;
    }
    case Family::FG_PAIR: {
      const Matrix g = ginibre(n, rng);
      matcore::ComplexMatrix a(g);
      matcore::PSDMatrix abs_a = matcore::abs_op(a);
      std::vector<double> coeffs(4);
      for (double& c : coeffs) c = rng.uniform(-1.0, 1.0);
      Matrix b = poly_of(abs_a, coeffs);
      Sample s{std::move(a), matcore::ComplexMatrix(std::move(b)),
               matcore::PolyHint{std::move(abs_a), coeffs}, coeffs};
      return s;
    }
    case Family::PARAM_2X2: {
      if (n != 2) {
        throw DimensionOutOfRange("PARAM_2X2 requires dim == 2");
      }
      double t = 0, a = 0, b = 0, c = 0;
      if (!spec.extra.empty()) {
        t = spec.extra.size() > 0 ? spec.extra[0] : 0.0;
        a = spec.extra.size() > 1 ? spec.extra[1] : 0.0;
        b = spec.extra.size() > 2 ? spec.extra[2] : 0.0;
        c = spec.extra.size() > 3 ? spec.extra[3] : 0.0;
      } else {
        switch (spec.draw % 4) {
          case 0:  // scaled nilpotent
            t = rng.uniform(0.5, 4.0);
            break;
          case 1:  // scaled identity
            a = c = rng.uniform(0.5, 4.0);
            break;
          case 2:  // real upper triangular
            a = rng.uniform(-2.0, 2.0);
            c = rng.uniform(-2.0, 2.0);
            b = rng.uniform(0.5, 3.0);
            break;
          default:  // generic upper triangular, larger spread
            a = rng.uniform(-3.0, 3.0);
            c = rng.uniform(-3.0, 3.0);
            b = rng.uniform(-3.0, 3.0);
            break;
        }
      }
      Matrix m(2, 2);
      if (a == 0.0 && b == 0.0 && c == 0.0) {
        m << 0.0, t, 0.0, 0.0;
      } else {
        m << a, b, 0.0, c;
      }
      return Sample{matcore::ComplexMatrix(std::move(m)), {}, {},
                    std::vector<double>{t, a, b, c}};
    }
  }
  throw ConfigInvalid("unhandled generator family");
}

Vector sample_unit_vector(int dim, std::uint64_t seed) {
  if (dim < 1 || dim > matcore::kMaxDim) {
    throw DimensionOutOfRange("vector dim must be in [1, 256]");
  }
  Rng rng(seed, 1001, static_cast<std::uint64_t>(dim), 0);
  Vector x(dim);
  for (int i = 0; i < dim; ++i) x(i) = rng.complex_gaussian();
  if (x.norm() < 1e-12) x = Vector::Unit(dim, 0);
  x.normalize();
  return x;
}

ExponentParams sample_params(const ParamProfile& prof, std::uint64_t seed) {
  Rng rng(seed, 2002, 0, 0);
  ExponentParams p;
  if (prof.tie_alpha_beta_inv_s) {
    p.s = rng.uniform(prof.s_lo, prof.s_hi);
    p.alpha = p.beta = 1.0 / p.s;
  } else {
    if (prof.uses_alpha_beta) {
      do {
        p.alpha = rng.uniform(0.0, 2.0);
        p.beta = rng.uniform(0.0, 2.0);
      } while (p.alpha + p.beta < 1.0);
    }
    if (prof.alpha_unit) p.alpha = rng.uniform(0.0, 1.0);
    if (prof.uses_s) p.s = rng.uniform(prof.s_lo, prof.s_hi);
  }
  if (prof.uses_gamma_delta) {
    do {
      p.gamma = rng.uniform(0.0, 2.0);
      p.delta = rng.uniform(0.0, 2.0);
    } while (p.gamma + p.delta < 1.0);
  }
  if (prof.uses_m) {
    p.m = prof.m_integer ? 1.0 + static_cast<double>(rng.next_u64() % 4)
                         : rng.uniform(1.0, 3.0);
  }
  if (prof.uses_r) p.r = rng.uniform(prof.r_lo, prof.r_hi);
  if (prof.uses_pq) {
    p.p = rng.uniform(1.1, 4.0);
    p.q = p.p / (p.p - 1.0);
  }
  if (prof.fixed_alpha) p.alpha = *prof.fixed_alpha;
  if (prof.fixed_beta) p.beta = *prof.fixed_beta;
  if (prof.fixed_s) p.s = *prof.fixed_s;
  return p;
}

ExponentParams sample_params(const std::string& ineq_id, std::uint64_t seed) {
  return sample_params(catalog::param_profile(ineq_id), seed);
}

std::pair<double, double> sample_scalars(std::uint64_t seed) {
  Rng rng(seed, 3003, 0, 0);
  const double a = rng.uniform(0.01, 10.0);
  const double b = rng.uniform(0.01, 10.0);
  return {a, b};
}

}  // namespace opineq::gen
