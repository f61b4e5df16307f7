#include "doctest.h"
#include "opineq/gen.hpp"
#include "opineq/sphereopt.hpp"
#include "oracles.hpp"

using namespace opineq;
using matcore::ComplexMatrix;
using matcore::HermitianMatrix;
using matcore::Matrix;
using matcore::PSDMatrix;

namespace {

PSDMatrix diag_psd(std::initializer_list<double> vals) {
  const int n = static_cast<int>(vals.size());
  Matrix m = Matrix::Zero(n, n);
  int i = 0;
  for (double v : vals) m(i, i) = v, ++i;
  return PSDMatrix{HermitianMatrix(ComplexMatrix(std::move(m)))};
}

}  // namespace

TEST_CASE("inf_form_diff is the smallest eigenvalue of the difference") {
  sphereopt::InfResult r = sphereopt::inf_form_diff(diag_psd({2.0, 3.0}),
                                                    diag_psd({1.0, 1.0}));
  CHECK(r.value.contains(1.0));
  CHECK(r.value.width() < 1e-10);
  CHECK(!r.attained_zero);

  sphereopt::InfResult neg = sphereopt::inf_form_diff(diag_psd({0.0, 3.0}),
                                                      diag_psd({1.0, 1.0}));
  CHECK(neg.value.contains(-1.0));

  CHECK_THROWS_AS(
      sphereopt::inf_form_diff(diag_psd({1.0}), diag_psd({1.0, 2.0})),
      DimensionMismatch);
}

TEST_CASE("inf_sq_form_diff distinguishes definite from straddling") {
  // Difference diag(1,2) is positive definite: infimum 1 at the witness e0.
  sphereopt::InfResult pos = sphereopt::inf_sq_form_diff(diag_psd({2.0, 3.0}),
                                                         diag_psd({1.0, 1.0}));
  CHECK(pos.value.contains(1.0));
  CHECK(!pos.attained_zero);

  // Difference diag(-1,2) straddles zero: infimum exactly 0, witness blends.
  sphereopt::InfResult mix = sphereopt::inf_sq_form_diff(diag_psd({0.0, 3.0}),
                                                         diag_psd({1.0, 1.0}));
  CHECK(mix.value.lo == 0.0);
  CHECK(mix.value.hi < 1e-20);
  CHECK(mix.attained_zero);
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = -1.0;
  d(1, 1) = 2.0;
  CHECK(std::abs(matcore::quad_form(d, mix.witness)) < 1e-12);

  // Negative definite difference: infimum is the squared top magnitude.
  sphereopt::InfResult negd = sphereopt::inf_sq_form_diff(
      diag_psd({1.0, 1.0}), diag_psd({2.0, 4.0}));
  CHECK(negd.value.contains(1.0));
  CHECK(!negd.attained_zero);

  // Independent brute oracle agrees on a non-commuting pair.
  Matrix a(2, 2), b(2, 2);
  a << 3.0, 1.0, 1.0, 2.0;
  b << 0.5, 0.0, 0.0, 0.25;
  PSDMatrix pa{HermitianMatrix(ComplexMatrix(Matrix(a)))};
  PSDMatrix pb{HermitianMatrix(ComplexMatrix(Matrix(b)))};
  sphereopt::InfResult generic = sphereopt::inf_sq_form_diff(pa, pb);
  const double brute = oracles::brute_min_form_sq(a, b, 4000, 4000, 3);
  CHECK(generic.value.lo <= brute + 1e-9);
  CHECK(generic.value.hi >= brute - 1e-3);
}

TEST_CASE("inf_power_diff handles the closed-form cases") {
  // Unit exponents delegate to the quadratic closed form.
  sphereopt::FormPair unit{diag_psd({0.0, 1.0}), diag_psd({1.0, 0.0}), 1.0,
                           1.0};
  sphereopt::InfResult r = sphereopt::inf_power_diff(unit);
  CHECK(r.value.lo == 0.0);
  CHECK(r.attained_zero);

  // Dimension one evaluates the single point: (4^0.5 - 9^0.5)^2 = 1.
  sphereopt::FormPair one{diag_psd({4.0}), diag_psd({9.0}), 0.5, 0.5};
  sphereopt::InfResult o = sphereopt::inf_power_diff(one);
  CHECK(o.value.contains(1.0));
  CHECK(o.value.width() < 1e-10);

  // Equal exponents with a straddling difference still land on zero.
  sphereopt::FormPair eq{diag_psd({0.0, 3.0}), diag_psd({1.0, 1.0}), 0.75,
                         0.75};
  sphereopt::InfResult e = sphereopt::inf_power_diff(eq);
  CHECK(e.value.lo == 0.0);
  CHECK(e.attained_zero);
}

TEST_CASE("inf_power_diff sweep minimizes mixed exponents") {
  // Commuting pair diag(1,2), diag(1,4) with u=2, v=1:
  // phi(p) = (1+p)^2 - (1+3p) = p(p-1) vanishes at both axis points.
  sphereopt::FormPair flat{diag_psd({1.0, 2.0}), diag_psd({1.0, 4.0}), 2.0,
                           1.0};
  sphereopt::InfResult f = sphereopt::inf_power_diff(flat);
  CHECK(f.value.hi < 1e-12);

  // Strictly positive gap: sqrt of diag(4,9) against the identity form,
  // phi = sqrt(4+5p) - 1 has minimum 1 at p = 0.
  sphereopt::FormPair gap{diag_psd({4.0, 9.0}), diag_psd({1.0, 1.0}), 0.5,
                          1.0};
  sphereopt::InfResult g = sphereopt::inf_power_diff(gap);
  CHECK(g.value.hi == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(g.value.lo <= 1.0 + 1e-9);

  const double brute = sphereopt::sphere_brute_oracle(gap, 4000, 100, 17);
  CHECK(std::abs(brute - 1.0) < 1e-6);
  CHECK(brute >= g.value.lo - 1e-9);
}

TEST_CASE("inf_power_diff agrees with the brute oracle on random pairs") {
  for (int i = 0; i < 6; ++i) {
    gen::GeneratorSpec spec;
    spec.family = gen::Family::GINIBRE;
    spec.dim = 3;
    spec.seed = 100 + i;
    gen::Sample sa = gen::sample(spec);
    spec.seed = 200 + i;
    gen::Sample sb = gen::sample(spec);
    sphereopt::FormPair pair{matcore::abs_op(sa.first),
                             matcore::abs_op(sb.first),
                             0.5 + 0.25 * (i % 3), 1.0 + 0.5 * (i % 2)};
    sphereopt::InfResult r = sphereopt::inf_power_diff(pair);
    const double brute =
        sphereopt::sphere_brute_oracle(pair, 3000, 120, 31 + i);
    CHECK(brute >= r.value.lo - 1e-9);
    CHECK(std::abs(brute - r.value.hi) < 1e-3);
  }
}

TEST_CASE("form pair validation") {
  sphereopt::FormPair bad{diag_psd({1.0}), diag_psd({1.0, 2.0}), 1.0, 1.0};
  CHECK_THROWS_AS(sphereopt::inf_power_diff(bad), DimensionMismatch);
  sphereopt::FormPair neg{diag_psd({1.0}), diag_psd({1.0}), -1.0, 1.0};
  CHECK_THROWS_AS(sphereopt::inf_power_diff(neg), ExponentDomain);
  CHECK_THROWS_AS(sphereopt::sphere_brute_oracle(neg, 10, 10, 1),
                  ExponentDomain);
}
