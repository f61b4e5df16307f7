#include <Eigen/Dense>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "opineq/matcore.hpp"
#include "oracles.hpp"

using namespace opineq;
using matcore::Complex;
using matcore::ComplexMatrix;
using matcore::Matrix;
using matcore::Vector;

namespace {

ComplexMatrix jordan2() {
  Matrix m(2, 2);
  m << 0.0, 1.0, 0.0, 0.0;
  return ComplexMatrix(std::move(m));
}

ComplexMatrix fixed_3x3() {
  Matrix m(3, 3);
  m << Complex(0.3, -0.7), Complex(1.1, 0.2), Complex(-0.4, 0.0),
       Complex(0.0, 0.9), Complex(-1.3, 0.1), Complex(0.5, -0.5),
       Complex(0.8, 0.3), Complex(0.2, -0.2), Complex(0.6, 0.4);
  return ComplexMatrix(std::move(m));
}

}  // namespace

TEST_CASE("constructors enforce shape and hermitianity") {
  Matrix rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS(ComplexMatrix(Matrix(rect)), Error);

  Matrix big = Matrix::Zero(matcore::kMaxDim + 1, matcore::kMaxDim + 1);
  CHECK_THROWS_AS(ComplexMatrix(std::move(big)), DimensionOutOfRange);

  CHECK_THROWS_AS(matcore::HermitianMatrix{jordan2()}, NotHermitian);

  Matrix herm(2, 2);
  herm << 1.0, Complex(0.0, 2.0), Complex(0.0, -2.0), -1.0;
  matcore::HermitianMatrix h((ComplexMatrix(Matrix(herm))));
  matcore::EighResult e = matcore::eigh(h);
  CHECK(e.eigenvalues(0) == doctest::Approx(-std::sqrt(5.0)).epsilon(1e-12));
  CHECK(e.eigenvalues(1) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
  // Columns are unit eigenvectors.
  CHECK((herm * e.eigenvectors.col(0) - e.eigenvalues(0) * e.eigenvectors.col(0))
            .norm() < 1e-12);
}

TEST_CASE("psd construction clips the rounding window and rejects indefinite") {
  Matrix neg(2, 2);
  neg << 1.0, 0.0, 0.0, -1e-11;
  matcore::PSDMatrix p{matcore::HermitianMatrix(ComplexMatrix(Matrix(neg)))};
  CHECK(p.eigenvalues()(0) == 0.0);
  CHECK(p.eigen_floor() == 0.0);

  Matrix bad(2, 2);
  bad << 1.0, 0.0, 0.0, -1e-3;
  CHECK_THROWS_AS(
      matcore::PSDMatrix{matcore::HermitianMatrix(ComplexMatrix(Matrix(bad)))},
      NotPSD);

  CHECK_THROWS_AS(matcore::PSDMatrix::from_spectrum(
                      Matrix::Identity(2, 2),
                      (matcore::RealVector(2) << -1.0, 1.0).finished()),
                  NotPSD);
}

TEST_CASE("abs_op matches singular values") {
  matcore::PSDMatrix a = matcore::abs_op(jordan2());
  CHECK(a.matrix()(0, 0).real() == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(a.matrix()(1, 1).real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(a.matrix()(0, 1)) < 1e-14);

  const ComplexMatrix t = fixed_3x3();
  matcore::PSDMatrix at = matcore::abs_op(t);
  Eigen::JacobiSVD<Matrix> svd(t.raw());
  for (int i = 0; i < 3; ++i) {
    CHECK(at.eigenvalues()(2 - i) ==
          doctest::Approx(svd.singularValues()(i)).epsilon(1e-10));
  }
}

TEST_CASE("frac_power uses the spectral calculus with 0^0 = 1") {
  Matrix d(2, 2);
  d << 4.0, 0.0, 0.0, 9.0;
  matcore::PSDMatrix p{matcore::HermitianMatrix(ComplexMatrix(Matrix(d)))};
  matcore::PSDMatrix root = matcore::frac_power(p, 0.5);
  CHECK(root.matrix()(0, 0).real() == doctest::Approx(2.0));
  CHECK(root.matrix()(1, 1).real() == doctest::Approx(3.0));

  Matrix sing(2, 2);
  sing << 0.0, 0.0, 0.0, 5.0;
  matcore::PSDMatrix s{matcore::HermitianMatrix(ComplexMatrix(Matrix(sing)))};
  matcore::PSDMatrix zeroth = matcore::frac_power(s, 0.0);
  CHECK((zeroth.matrix() - Matrix::Identity(2, 2)).norm() < 1e-12);

  CHECK_THROWS_AS(matcore::frac_power(p, -0.5), NegativeExponent);
}

TEST_CASE("polar decomposition reconstructs with a unitary factor") {
  matcore::PolarParts parts = matcore::polar_decompose(jordan2());
  CHECK((parts.u.raw() * parts.p.matrix() - jordan2().raw()).norm() < 1e-12);
  CHECK((parts.u.raw().adjoint() * parts.u.raw() - Matrix::Identity(2, 2))
            .norm() < 1e-12);
  CHECK(parts.p.matrix()(1, 1).real() == doctest::Approx(1.0));

  const ComplexMatrix t = fixed_3x3();
  matcore::PolarParts g = matcore::polar_decompose(t);
  CHECK((g.u.raw() * g.p.matrix() - t.raw()).norm() < 1e-10);
  CHECK((g.u.raw().adjoint() * g.u.raw() - Matrix::Identity(3, 3)).norm() <
        1e-10);
}

TEST_CASE("aluthge transform kills the nilpotent jordan cell") {
  ComplexMatrix al = matcore::aluthge(jordan2());
  CHECK(al.raw().norm() < 1e-12);

  // Normal inputs are fixed points.
  Matrix d(2, 2);
  d << 1.0, 0.0, 0.0, Complex(0.0, 2.0);
  ComplexMatrix fixed = matcore::aluthge(ComplexMatrix(Matrix(d)));
  CHECK((fixed.raw() - d).norm() < 1e-10);
}

TEST_CASE("norms agree with svd oracle") {
  const ComplexMatrix t = fixed_3x3();
  CHECK(matcore::operator_norm(t) ==
        doctest::Approx(oracles::svd_norm(t.raw())).epsilon(1e-12));
  CHECK(matcore::frobenius_norm(t) == doctest::Approx(t.raw().norm()));
  CHECK(matcore::operator_norm(jordan2()) == doctest::Approx(1.0));
}

TEST_CASE("commutation defect detects the commuting pair") {
  Matrix a(2, 2);
  a << 2.0, 0.0, 0.0, 3.0;
  Matrix b(2, 2);
  b << 5.0, 0.0, 0.0, 7.0;
  CHECK(matcore::commutation_defect(ComplexMatrix(Matrix(a)),
                                    ComplexMatrix(Matrix(b))) < 1e-12);
  Matrix c(2, 2);
  c << 0.0, 1.0, 1.0, 0.0;
  CHECK(matcore::commutation_defect(ComplexMatrix(Matrix(a)),
                                    ComplexMatrix(Matrix(c))) > 0.5);
}

TEST_CASE("spectral radius exact paths") {
  // Hermitian route: max |eigenvalue| directly.
  Matrix d(2, 2);
  d << 2.0, 0.0, 0.0, -3.0;
  matcore::SpectralRadiusResult h =
      matcore::spectral_radius(ComplexMatrix(Matrix(d)));
  CHECK(h.converged);
  CHECK(h.enclosure.contains(3.0));
  CHECK(h.enclosure.width() < 1e-9);

  // Polynomial hint route: p(x) = x^2 - 1 on diag(0,1,2) has values -1,0,3.
  Matrix base(3, 3);
  base << 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 2.0;
  matcore::PSDMatrix bp{matcore::HermitianMatrix(ComplexMatrix(Matrix(base)))};
  Matrix poly = base * base - Matrix::Identity(3, 3);
  matcore::PolyHint hint{bp, {-1.0, 0.0, 1.0}};
  matcore::SpectralRadiusResult ph =
      matcore::spectral_radius(ComplexMatrix(Matrix(poly)), &hint);
  CHECK(ph.converged);
  CHECK(ph.enclosure.contains(3.0));
  CHECK(ph.enclosure.width() < 1e-9);
}

TEST_CASE("spectral radius gelfand route") {
  // Nilpotent: powers vanish, radius 0.
  matcore::SpectralRadiusResult nil = matcore::spectral_radius(jordan2());
  CHECK(nil.enclosure.hi < 1e-9);

  // Non-normal with known eigenvalues +-2.
  Matrix m(2, 2);
  m << 0.0, 4.0, 1.0, 0.0;
  matcore::SpectralRadiusResult sr =
      matcore::spectral_radius(ComplexMatrix(Matrix(m)));
  CHECK(sr.converged);
  CHECK(sr.enclosure.lo <= 2.0 + 1e-9);
  CHECK(sr.enclosure.hi >= 2.0 - 1e-9);
  CHECK(sr.enclosure.width() <= 1e-6 * oracles::svd_norm(m));

  // Scaling does not overflow the squaring ladder.
  matcore::SpectralRadiusResult big =
      matcore::spectral_radius(ComplexMatrix(Matrix(m * 1e100)));
  CHECK(big.enclosure.hi >= 2e100 * (1.0 - 1e-6));
  CHECK(big.enclosure.lo <= 2e100 * (1.0 + 1e-6));
  CHECK(big.enclosure.lo >= 2e100 * (1.0 - 1e-6));

  // Tiny spectral radius with a large transient stays inside the bracket.
  Matrix tiny(2, 2);
  tiny << 0.0, 1e-7, 1e-293, 0.0;
  matcore::SpectralRadiusResult ts =
      matcore::spectral_radius(ComplexMatrix(Matrix(tiny)));
  CHECK(ts.enclosure.lo <= 1e-150);
  CHECK(ts.enclosure.hi >= 1e-150);
}

TEST_CASE("quad_form takes the real part of the sesquilinear form") {
  Matrix m(2, 2);
  m << 1.0, Complex(0.0, 1.0), 0.0, 2.0;
  Vector x(2);
  x << 1.0, 1.0;
  x.normalize();
  // <mx, x> = (1 + i + 2) / 2; real part 1.5.
  CHECK(matcore::quad_form(m, x) == doctest::Approx(1.5));
}

TEST_CASE("matrix json io round-trips bits") {
  const ComplexMatrix t = fixed_3x3();
  Matrix scaled = t.raw() / 3.0;  // force non-terminating decimals
  const std::string s = matcore::matrix_to_json(ComplexMatrix(Matrix(scaled)));
  ComplexMatrix back = matcore::parse_matrix_json(s);
  CHECK(back.raw() == scaled);

  const std::filesystem::path p =
      std::filesystem::temp_directory_path() / "opineq_matio_test.json";
  matcore::write_matrix_json(ComplexMatrix(Matrix(scaled)), p.string());
  ComplexMatrix from_file = matcore::read_matrix_json(p.string());
  CHECK(from_file.raw() == scaled);
  std::filesystem::remove(p);

  CHECK_THROWS_AS(matcore::parse_matrix_json("not json"), ParseError);
  CHECK_THROWS_AS(matcore::parse_matrix_json("{\"n\": 2, \"re\": [[1]]}"),
                  ParseError);
  CHECK_THROWS_AS(matcore::read_matrix_json("/nonexistent/file.json"),
                  IoFailure);
}
