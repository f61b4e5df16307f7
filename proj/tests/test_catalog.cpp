#include <map>
#include <set>

#include "doctest.h"
#include "opineq/catalog.hpp"
#include "opineq/gen.hpp"

using namespace opineq;
using catalog::EvalInput;
using catalog::IneqResult;
using catalog::Variant;
using catalog::Verdict;
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

EvalInput op_input(ComplexMatrix t) {
  EvalInput in;
  in.t = std::move(t);
  return in;
}

}  // namespace

TEST_CASE("registry shape") {
  const auto& rows = catalog::registry();
  CHECK(rows.size() == 37);

  std::set<std::string> ids;
  std::map<std::string, int> variants;
  for (const auto& r : rows) {
    ids.insert(r.id);
    variants[r.id] += 1;
    CHECK(!r.paper_eq.empty());
  }
  CHECK(ids.size() == 31);
  const std::set<std::string> dual = {"DRAGOMIR", "THM2_7_2_7", "COR2_8_2_8",
                                      "REM_2_9",  "REM_2_10",   "REM_2_11"};
  for (const auto& [id, count] : variants) {
    CHECK(count == (dual.count(id) ? 2 : 1));
  }

  CHECK(catalog::has_record("REM_2_11", Variant::CORRECTED));
  CHECK(!catalog::has_record("KITT2003_1_7", Variant::CORRECTED));
  CHECK(catalog::resolve_record("DRAGOMIR", std::nullopt).variant ==
        Variant::AS_PRINTED);
  CHECK_THROWS_AS(catalog::resolve_record("NOT_AN_ID", std::nullopt),
                  UnknownId);
  CHECK(catalog::list_registry().size() == 37);

  CHECK(catalog::variant_from_name("as-printed") == Variant::AS_PRINTED);
  CHECK(catalog::variant_from_name("CORRECTED") == Variant::CORRECTED);
  CHECK_THROWS_AS(catalog::variant_from_name("junk"), ConfigInvalid);
}

TEST_CASE("jordan cell equalities across the classical bounds") {
  ExponentParams p;
  const EvalInput in = op_input(jordan2());

  IneqResult lower =
      catalog::evaluate("KITT2005_LOWER", Variant::AS_PRINTED, in, p);
  CHECK(lower.verdict == Verdict::HOLDS);
  CHECK(lower.equality);
  CHECK(lower.lhs.contains(0.25));
  CHECK(lower.rhs.lo == doctest::Approx(0.25).epsilon(1e-8));

  // The upper gram bound is strict here: w^2 = 1/4 against 1/2.
  IneqResult upper =
      catalog::evaluate("KITT2005_UPPER", Variant::AS_PRINTED, in, p);
  CHECK(upper.verdict == Verdict::HOLDS);
  CHECK(!upper.equality);
  CHECK(upper.lhs.contains(0.25));
  CHECK(upper.rhs.contains(0.5));

  IneqResult kitt03 =
      catalog::evaluate("KITT2003_1_7", Variant::AS_PRINTED, in, p);
  CHECK(kitt03.verdict == Verdict::HOLDS);
  CHECK(kitt03.equality);
  CHECK(kitt03.rhs.contains(0.5));

  IneqResult yam = catalog::evaluate("YAMAZAKI", Variant::AS_PRINTED, in, p);
  CHECK(yam.verdict == Verdict::HOLDS);
  CHECK(yam.equality);

  IneqResult sandwich =
      catalog::evaluate("NORM_SANDWICH_1_6", Variant::AS_PRINTED, in, p);
  CHECK(sandwich.verdict == Verdict::HOLDS);

  IneqResult half = catalog::evaluate("REM_HALF", Variant::AS_PRINTED, in, p);
  CHECK(half.verdict == Verdict::HOLDS);
  CHECK(half.equality);
  CHECK(half.rhs.contains(0.25));
}

TEST_CASE("dragomir variants split on the scaled identity") {
  ExponentParams p;
  const EvalInput in = op_input(
      ComplexMatrix(Matrix(3.0 * Matrix::Identity(2, 2))));

  IneqResult printed =
      catalog::evaluate("DRAGOMIR", Variant::AS_PRINTED, in, p);
  CHECK(printed.verdict == Verdict::VIOLATED);
  CHECK(printed.lhs.contains(9.0));
  CHECK(printed.rhs.contains(6.0));
  CHECK(printed.slack == doctest::Approx(-3.0).epsilon(1e-7));

  IneqResult fixed = catalog::evaluate("DRAGOMIR", Variant::CORRECTED, in, p);
  CHECK(fixed.verdict == Verdict::HOLDS);
  CHECK(fixed.equality);
  CHECK(fixed.rhs.contains(9.0));
}

TEST_CASE("power bound equalities on the jordan cell") {
  const EvalInput in = op_input(jordan2());

  ExponentParams p;
  p.alpha = 1.0;
  p.beta = 1.0;
  p.m = 1.0;
  p.r = 1.0;
  IneqResult m1 = catalog::evaluate("THM2_4_2_5", Variant::AS_PRINTED, in, p);
  CHECK(m1.verdict == Verdict::HOLDS);
  CHECK(m1.equality);
  CHECK(m1.lhs.contains(0.5));
  CHECK(m1.rhs.contains(0.5));

  p.m = 2.0;
  IneqResult m2 = catalog::evaluate("THM2_4_2_5", Variant::AS_PRINTED, in, p);
  CHECK(m2.equality);
  CHECK(m2.rhs.contains(0.25));

  IneqResult cor = catalog::evaluate("COR2_5_2_6", Variant::AS_PRINTED, in, p);
  CHECK(cor.verdict == Verdict::HOLDS);
  CHECK(cor.equality);
  CHECK(cor.lhs.contains(0.25));
  CHECK(cor.rhs.contains(0.25));
}

TEST_CASE("gram bound variants on the jordan cell") {
  ExponentParams p;
  const EvalInput in = op_input(jordan2());

  IneqResult printed =
      catalog::evaluate("REM_2_11", Variant::AS_PRINTED, in, p);
  // Printed correction is a line infimum, here -1, inflating the bound.
  CHECK(printed.verdict == Verdict::HOLDS);
  CHECK(printed.rhs.contains(0.75));

  IneqResult fixed = catalog::evaluate("REM_2_11", Variant::CORRECTED, in, p);
  CHECK(fixed.verdict == Verdict::HOLDS);
  CHECK(fixed.rhs.contains(0.5));
  CHECK(fixed.lhs.contains(0.25));
}

TEST_CASE("normal input equalities") {
  Matrix d(2, 2);
  d << 1.0, 0.0, 0.0, Complex(0.0, 1.0);
  ExponentParams p;
  const EvalInput in = op_input(ComplexMatrix(Matrix(d)));

  IneqResult rem = catalog::evaluate("REM_2_14", Variant::AS_PRINTED, in, p);
  CHECK(rem.verdict == Verdict::HOLDS);
  CHECK(rem.equality);
  CHECK(rem.lhs.contains(1.0));
  CHECK(rem.rhs.contains(1.0));

  IneqResult up = catalog::evaluate("KITT2005_UPPER", Variant::AS_PRINTED,
                                    in, p);
  CHECK(up.equality);
}

TEST_CASE("vector form rows enforce their hypotheses") {
  ExponentParams p;

  // Unit vectors required.
  EvalInput bad;
  Matrix s(2, 2);
  s << 2.0, 0.0, 0.0, 3.0;
  bad.t = ComplexMatrix(Matrix(s));
  Vector x(2);
  x << 2.0, 0.0;
  bad.x = x;
  p.r = 2.0;
  CHECK_THROWS_AS(
      catalog::evaluate("JENSEN_2_1", Variant::AS_PRINTED, bad, p),
      HypothesisViolated);

  // PSD required.
  EvalInput indef;
  Matrix neg(2, 2);
  neg << -1.0, 0.0, 0.0, 1.0;
  indef.t = ComplexMatrix(Matrix(neg));
  indef.x = Vector::Unit(2, 0);
  CHECK_THROWS_AS(
      catalog::evaluate("JENSEN_2_1", Variant::AS_PRINTED, indef, p),
      HypothesisViolated);

  // Jensen with r >= 1 on a PSD matrix and unit vector holds.
  EvalInput good;
  good.t = ComplexMatrix(Matrix(s));
  Vector u(2);
  u << std::sqrt(0.5), std::sqrt(0.5);
  good.x = u;
  IneqResult j1 = catalog::evaluate("JENSEN_2_1", Variant::AS_PRINTED, good, p);
  CHECK(j1.verdict == Verdict::HOLDS);
  // <Sx,x> = 2.5, lhs = 6.25, rhs = <S^2 x,x> = 6.5 (up to eigensolver noise).
  CHECK(j1.lhs.mid() == doctest::Approx(6.25).epsilon(1e-12));
  CHECK(j1.rhs.mid() == doctest::Approx(6.5).epsilon(1e-12));

  p.r = 0.5;
  IneqResult j2 = catalog::evaluate("JENSEN_2_2", Variant::AS_PRINTED, good, p);
  CHECK(j2.verdict == Verdict::HOLDS);

  // Missing inputs are reported as config errors.
  EvalInput empty;
  CHECK_THROWS_AS(
      catalog::evaluate("JENSEN_2_1", Variant::AS_PRINTED, empty, p),
      ConfigInvalid);
}

TEST_CASE("pair rows gate on their structural hypotheses") {
  ExponentParams p;

  // Reid requires AB selfadjoint; a PSD pair that does not commute fails.
  EvalInput in;
  Matrix a(2, 2);
  a << 2.0, 1.0, 1.0, 2.0;
  Matrix b(2, 2);
  b << 1.0, 0.0, 0.0, 3.0;
  in.t = ComplexMatrix(Matrix(a));
  in.s = ComplexMatrix(Matrix(b));
  in.x = Vector::Unit(2, 0);
  in.y = Vector::Unit(2, 1);
  CHECK_THROWS_AS(catalog::evaluate("REID_1_2", Variant::AS_PRINTED, in, p),
                  HypothesisViolated);

  // Commuting diagonal pair passes and holds.
  Matrix a2(2, 2);
  a2 << 2.0, 0.0, 0.0, 5.0;
  in.t = ComplexMatrix(Matrix(a2));
  IneqResult reid = catalog::evaluate("REID_1_2", Variant::AS_PRINTED, in, p);
  CHECK(reid.verdict == Verdict::HOLDS);

  gen::GeneratorSpec spec;
  spec.family = gen::Family::FG_PAIR;
  spec.dim = 3;
  spec.seed = 2;
  gen::Sample fg = gen::sample(spec);
  EvalInput fin;
  fin.t = fg.first;
  fin.s = fg.second;
  fin.hint = fg.hint;
  fin.x = gen::sample_unit_vector(3, 5);
  fin.y = gen::sample_unit_vector(3, 6);
  p.alpha = 0.5;
  IneqResult kf =
      catalog::evaluate("KITTANEH_FG_1_4", Variant::AS_PRINTED, fin, p);
  CHECK(kf.verdict == Verdict::HOLDS);
}

TEST_CASE("scalar rows evaluate the closed forms") {
  ExponentParams p;
  p.p = 2.0;
  p.q = 2.0;
  p.m = 2.0;
  p.r = 1.0;

  IneqResult sms = catalog::evaluate_scalar("SMS_2_4", 4.0, 1.0, p);
  CHECK(sms.verdict == Verdict::HOLDS);
  CHECK(sms.equality);
  CHECK(sms.lhs.contains(6.25));
  CHECK(sms.rhs.contains(6.25));

  IneqResult young = catalog::evaluate_scalar("YOUNG_REF_2_3", 2.0, 2.0, p);
  CHECK(young.verdict == Verdict::HOLDS);
  CHECK(young.equality);
  CHECK(young.lhs.contains(4.0));

  // p = q = 2 makes the refinement an identity, so strictness needs p != q.
  p.p = 3.0;
  p.q = 1.5;
  IneqResult strict = catalog::evaluate_scalar("YOUNG_REF_2_3", 9.0, 1.0, p);
  CHECK(strict.verdict == Verdict::HOLDS);
  CHECK(!strict.equality);
  p.p = 2.0;

  // Hypothesis gates: nonpositive scalars and non-conjugate exponents.
  CHECK_THROWS_AS(catalog::evaluate_scalar("YOUNG_REF_2_3", -1.0, 1.0, p),
                  HypothesisViolated);
  p.q = 3.0;
  CHECK_THROWS_AS(catalog::evaluate_scalar("YOUNG_REF_2_3", 1.0, 1.0, p),
                  HypothesisViolated);
  // Operator rows cannot be evaluated through the scalar entry point.
  p.q = 2.0;
  CHECK_THROWS_AS(catalog::evaluate_scalar("REM_2_11", 1.0, 1.0, p),
                  UnknownId);
}

TEST_CASE("parameter gates reject out-of-domain exponents") {
  ExponentParams p;
  const EvalInput in = op_input(jordan2());

  p.alpha = 0.2;
  p.beta = 0.2;  // alpha + beta < 1
  CHECK_THROWS_AS(
      catalog::evaluate("THM2_4_2_5", Variant::AS_PRINTED, in, p),
      HypothesisViolated);

  p.alpha = 1.0;
  p.beta = 1.0;
  p.r = 0.5;  // r < 1
  CHECK_THROWS_AS(
      catalog::evaluate("THM2_4_2_5", Variant::AS_PRINTED, in, p),
      HypothesisViolated);

  // Tied profile: alpha must equal 1/s.
  p = ExponentParams{};
  p.s = 1.5;
  p.alpha = 0.9;
  p.beta = 1.0 / 1.5;
  CHECK_THROWS_AS(catalog::evaluate("REM_2_9", Variant::AS_PRINTED, in, p),
                  HypothesisViolated);
}

TEST_CASE("refinement chain is degenerate and ordered") {
  catalog::ChainReport rep = catalog::refinement_chain(jordan2());
  CHECK(rep.chain_holds);
  CHECK(rep.degenerate);
  CHECK(rep.correction <= 1e-8);
  CHECK(rep.kitt2005_upper.contains(0.5));
  CHECK(rep.rem_2_11_corrected.contains(0.5));
  CHECK(rep.rem_2_14.contains(0.5));

  gen::GeneratorSpec spec;
  spec.family = gen::Family::GINIBRE;
  spec.dim = 4;
  spec.seed = 31;
  catalog::ChainReport gin = catalog::refinement_chain(gen::sample(spec).first);
  CHECK(gin.chain_holds);
  CHECK(gin.degenerate);
}

TEST_CASE("evaluation options control the retry") {
  ExponentParams p;
  catalog::EvalOptions opts;
  opts.width_scale = 100.0;
  opts.allow_retry = false;
  // The bound is an equality on this input, so a coarse enclosure cannot
  // separate the sides and no retry is allowed to rescue it.
  IneqResult coarse = catalog::evaluate(
      catalog::find_record("KITT2003_1_7", Variant::AS_PRINTED),
      op_input(jordan2()), p, opts);
  CHECK(coarse.verdict == Verdict::INCONCLUSIVE);

  // The default options sharpen the enclosure until the verdict resolves.
  IneqResult sharp = catalog::evaluate(
      catalog::find_record("KITT2003_1_7", Variant::AS_PRINTED),
      op_input(jordan2()), p, catalog::EvalOptions{});
  CHECK(sharp.verdict == Verdict::HOLDS);

  opts.width_scale = 0.0;
  CHECK_THROWS_AS(
      catalog::evaluate(catalog::find_record("KITT2003_1_7",
                                             Variant::AS_PRINTED),
                        op_input(jordan2()), p, opts),
      ConfigInvalid);
}
