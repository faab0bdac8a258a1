#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilcayley/checks.hpp"
#include "nilcayley/parser.hpp"
#include "nilcayley/relfree.hpp"
#include "oracles.hpp"

using namespace nilcayley;

TEST_CASE("jennings product vanishing") {
  SampleSpec spec;
  spec.seed = 201;

  RelFreeAlgebra rf(2, 3, 5);
  CHECK(check_jennings(rf.algebra(), 3, spec, 25).verdict == Verdict::pass);

  RelFreeAlgebra rf4(2, 4, 6);
  CHECK(check_jennings(rf4.algebra(), 4, spec, 10).verdict == Verdict::pass);

  // The k >= 3 guard rejects an index-2 request instead of ignoring it.
  GrassmannAlgebra e4(4);
  CHECK(check_jennings(e4, 2, spec, 5).verdict == Verdict::hypotheses_unmet);
}

TEST_CASE("fundamental right-adjoint identity") {
  SampleSpec spec;
  spec.seed = 202;

  GrassmannAlgebra e3(3);
  for (std::uint64_t t = 0; t < 10; ++t) {
    SampleSpec ms;
    ms.seed = SampleRng::mix(211, t);
    const auto a = sample_matrix(e3, 2, ms);
    CHECK(check_fundamental(e3, a, 2, spec).verdict == Verdict::pass);
  }

  RelFreeAlgebra rf(2, 3, 4);
  SampleSpec ms;
  ms.seed = 213;
  CHECK(check_fundamental(rf.algebra(), sample_matrix(rf.algebra(), 2, ms), 3, spec).verdict ==
        Verdict::pass);

  // Diagonal rational matrix, k = 1: both sides are 2 det(A) I.
  RationalRing q;
  const auto d = parse_matrix(q, "[[3, 0],[0, 5]]", 2);
  const auto r = check_fundamental(q, d, 1, spec);
  CHECK(r.verdict == Verdict::pass);
  const auto chain = right_adjoint_chain(q, d, 1);
  CHECK(mat_trace(q, chain.product) == Rational(30));  // 2 * det
}

TEST_CASE("right Cayley-Hamilton identity with and without a right factor") {
  SampleSpec spec;
  spec.seed = 203;
  GrassmannAlgebra e4(4);

  const auto a = parse_matrix(e4, "[[v1, v2],[v3, v4]]", 2);
  CHECK(check_ch(e4, a, 2, std::nullopt, spec).verdict == Verdict::pass);

  // Independent recomputation of (A) p_{A,2} through the interpolated
  // coefficients: the residual must be zero on that route too.
  const auto p = char_poly_interpolated(e4, a, 2);
  CentralPoly<GrassmannElement> poly{p.coeffs};
  CHECK(mat_is_zero(e4, poly_eval_right(e4, a, poly)));

  // h-multiple variant: u = p h for a linear h.
  CentralPoly<GrassmannElement> h;
  h.coeffs = {e4.generator(1), e4.one()};  // v1 + x
  CHECK(check_ch(e4, a, 2, h, spec).verdict == Verdict::pass);

  RelFreeAlgebra rf(2, 3, 5);
  SampleSpec ms;
  ms.seed = 223;
  const auto b = sample_matrix(rf.algebra(), 2, ms);
  const auto rep = check_ch(rf.algebra(), b, 3, std::nullopt, spec);
  CHECK(rep.verdict == Verdict::pass);
  REQUIRE(rep.degree_info.size() == 1);
  CHECK(rep.degree_info[0].second == 8);  // n^k = 2^3
}

TEST_CASE("negative control: the k = 1 identity fails over a noncommutative ring") {
  SampleSpec spec;
  spec.seed = 204;
  GrassmannAlgebra e2(2);

  // Stored witness: A = [[v1, v2],[0, 0]] has (A) p_{A,1} = [[0, 4 v1v2],[0,0]].
  const auto a = parse_matrix(e2, "[[v1, v2],[0, 0]]", 2);
  const auto p = char_poly(e2, a, 1);
  CentralPoly<GrassmannElement> poly{p.coeffs};
  const auto residual = poly_eval_right(e2, a, poly);
  CHECK(e2.equal(residual.at(0, 1), e2.monomial(0b11, Rational(4))));
  CHECK_FALSE(mat_is_zero(e2, residual));

  // The check reports the failure rather than passing: E_2 is not Lie
  // nilpotent of index 1, so the precheck flags the hypotheses.
  const auto rep = check_ch(e2, a, 1, std::nullopt, spec);
  CHECK(rep.verdict == Verdict::hypotheses_unmet);
}

TEST_CASE("Domokos trace identity for 2x2 matrices") {
  SampleSpec spec;
  spec.seed = 205;
  GrassmannAlgebra e4(4);

  CHECK(check_domokos_2x2(e4, parse_matrix(e4, "[[v1, v2],[v3, v4]]", 2), spec).verdict ==
        Verdict::pass);
  CHECK(check_domokos_2x2(e4, mat_filled(e4, 2), spec).verdict == Verdict::pass);

  for (std::uint64_t t = 0; t < 10; ++t) {
    SampleSpec ms;
    ms.seed = SampleRng::mix(231, t);
    CHECK(check_domokos_2x2(e4, sample_matrix(e4, 2, ms), spec).verdict == Verdict::pass);
  }

  RationalRing q;
  CHECK(check_domokos_2x2(q, parse_matrix(q, "[[1, 2],[3, 4]]", 2), spec).verdict ==
        Verdict::pass);
}

TEST_CASE("traceless families and the nilpotency conclusion") {
  GrassmannAlgebra e2(2);

  // The worked example: tr(A) = tr(A^2) = 0 forces A^4 = 0 at index 2.
  const auto a = parse_matrix(e2, "[[v1*v2, v1],[v2, -(v1*v2)]]", 2);
  const auto r = check_trace_nilpotency(e2, a, 2);
  CHECK(r.verdict == Verdict::pass);
  // Non-degenerate: A^2 is nonzero even though A^4 = 0.
  CHECK_FALSE(mat_is_zero(e2, mat_pow(e2, a, 2)));

  // Identity matrix: hypotheses unmet is a distinct verdict, not a failure.
  CHECK(check_trace_nilpotency(e2, mat_identity(e2, 2), 2).verdict ==
        Verdict::hypotheses_unmet);

  // Shipped Grassmann family.
  GrassmannAlgebra e5(5);
  for (std::uint64_t s = 0; s < 15; ++s) {
    const auto m = traceless_matrix_grassmann(e5, s);
    CHECK(e5.is_zero(mat_trace(e5, m)));
    CHECK(e5.is_zero(mat_trace(e5, mat_mul(e5, m, m))));
    CHECK(check_trace_nilpotency(e5, m, 2).verdict == Verdict::pass);
  }

  // Shipped finite-dimensional family over an index-3 ring: A^8 = 0.
  RelFreeAlgebra rf(2, 3, 5);
  int nondegenerate = 0;
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto m = traceless_matrix_findim(rf.algebra(), s);
    REQUIRE(m.has_value());
    CHECK(rf.algebra().is_zero(mat_trace(rf.algebra(), *m)));
    CHECK(rf.algebra().is_zero(mat_trace(rf.algebra(), mat_mul(rf.algebra(), *m, *m))));
    CHECK(check_trace_nilpotency(rf.algebra(), *m, 3).verdict == Verdict::pass);
    if (!mat_is_zero(rf.algebra(), mat_pow(rf.algebra(), *m, 2))) ++nondegenerate;
  }
  CHECK(nondegenerate > 0);
}

TEST_CASE("power identity over a product-identity ring") {
  const StructureAlgebra u2e2 = upper_triangular(from_grassmann(2), 2);
  SampleSpec ms;

  for (std::uint64_t t = 0; t < 4; ++t) {
    ms.seed = SampleRng::mix(241, t);
    const auto a = sample_matrix(u2e2, 2, ms);
    for (const auto lift : {LiftStrategy::canonical, LiftStrategy::randomized}) {
      const auto r = check_power_ch(u2e2, a, IdealKind::double_commutator, 2, lift,
                                    SampleRng::mix(251, t), std::nullopt);
      CAPTURE(t);
      CHECK(r.verdict == Verdict::pass);
      REQUIRE(r.lifted_coefficients.size() == 5);
    }
  }
}

TEST_CASE("power identity over a Lie nilpotent ring of index 3") {
  RelFreeAlgebra rf(2, 3, 5);
  SampleSpec ms;
  ms.seed = 261;
  const auto a = sample_matrix(rf.algebra(), 2, ms);
  const auto r = check_power_ch(rf.algebra(), a, IdealKind::double_commutator, 2,
                                LiftStrategy::canonical, 7, 3);
  CHECK(r.verdict == Verdict::pass);
  // Degree comparison surfaces in the report: n^2 2^{k-2} = 8 = n^k at n = 2.
  long power_degree = 0, direct_degree = 0;
  for (const auto& [key, value] : r.degree_info) {
    if (key == "power_identity_degree") power_degree = value;
    if (key == "direct_identity_degree") direct_degree = value;
  }
  CHECK(power_degree == 8);
  CHECK(direct_degree == 8);
}

TEST_CASE("level-1 power identity over upper triangular rationals") {
  const StructureAlgebra u2 = upper_triangular(
      StructureAlgebra::create({"1"}, {Rational(1)}, {{{0, Rational(1)}}}, "rational"), 2);
  SampleSpec ms;
  for (std::uint64_t t = 0; t < 5; ++t) {
    ms.seed = SampleRng::mix(271, t);
    const auto a = sample_matrix(u2, 2, ms);
    const auto r = check_power_ch(u2, a, IdealKind::commutator, 2, LiftStrategy::canonical,
                                  SampleRng::mix(281, t), std::nullopt);
    CHECK(r.verdict == Verdict::pass);
    // lambda_n = n! = 2, exactly.
    REQUIRE(r.lifted_coefficients.size() == 3);
    CHECK(r.lifted_coefficients[2] == "2*e11 + 2*e22");
  }
}

TEST_CASE("index-2 backend: the power identity at exponent 1 is the direct identity") {
  const StructureAlgebra e3 = from_grassmann(3);
  SampleSpec ms;
  ms.seed = 291;
  const auto a = sample_matrix(e3, 2, ms);

  // D = 0, so the quotient is the ring itself and the lifted coefficients
  // are the direct characteristic polynomial coefficients.
  const auto r = check_power_ch(e3, a, IdealKind::double_commutator, 1,
                                LiftStrategy::canonical, 5, 2);
  CHECK(r.verdict == Verdict::pass);
  const auto p = char_poly(e3, a, 2);
  REQUIRE(r.lifted_coefficients.size() == p.coeffs.size());
  for (std::size_t i = 0; i < p.coeffs.size(); ++i)
    CHECK(r.lifted_coefficients[i] == e3.to_string(p.coeffs[i]));
}

TEST_CASE("negative control: commutator products do not vanish over E_4") {
  // [v1,v2][v3,v4] != 0, so the commutator ideal is not nilpotent of
  // exponent 2 and the check reports the obstruction honestly.
  const StructureAlgebra e4 = from_grassmann(4);
  SampleSpec ms;
  ms.seed = 301;
  const auto a = sample_matrix(e4, 2, ms);
  const auto r = check_power_ch(e4, a, IdealKind::commutator, 2, LiftStrategy::canonical, 5,
                                std::nullopt);
  CHECK(r.verdict == Verdict::fail);
  REQUIRE(!r.witnesses.empty());
  CHECK(r.witnesses[0].label == "ideal power does not vanish at the claimed exponent");
}

TEST_CASE("conjugation invariance of the second characteristic polynomial") {
  const StructureAlgebra e3 = from_grassmann(3);
  SampleSpec ms;
  ms.seed = 311;
  const auto a = sample_matrix(e3, 2, ms);

  const std::vector<QVector> identity = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  CHECK(check_conjugation_invariance(e3, a, identity).verdict == Verdict::pass);

  const std::vector<QVector> shear = {{Rational(1), Rational(1)}, {Rational(0), Rational(1)}};
  CHECK(check_conjugation_invariance(e3, a, shear).verdict == Verdict::pass);

  const StructureAlgebra u2e2 = upper_triangular(from_grassmann(2), 2);
  ms.seed = 313;
  const auto b = sample_matrix(u2e2, 2, ms);
  const std::vector<QVector> diag = {{Rational(2), Rational(0)}, {Rational(0), Rational(3)}};
  CHECK(check_conjugation_invariance(u2e2, b, diag).verdict == Verdict::pass);

  const std::vector<QVector> singular = {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  CHECK_THROWS_AS(check_conjugation_invariance(e3, a, singular), ring_error);
}

TEST_CASE("ideal nilpotency reports") {
  RelFreeAlgebra rf(2, 3, 5);
  const auto r1 = check_ideal_nilpotency(rf.algebra(), NilpotentIdeal::double_commutator, 0, 2);
  CHECK(r1.verdict == Verdict::pass);

  const auto r2 = check_ideal_nilpotency(rf.algebra(), NilpotentIdeal::jennings, 3, 2);
  CHECK(r2.verdict == Verdict::pass);

  const StructureAlgebra u2e2 = upper_triangular(from_grassmann(2), 2);
  const auto r3 = check_ideal_nilpotency(u2e2, NilpotentIdeal::double_commutator, 0, 2);
  CHECK(r3.verdict == Verdict::pass);

  // Commutator ideal of E_4 is not nilpotent at exponent 2: honest failure.
  const auto r4 = check_ideal_nilpotency(from_grassmann(4), NilpotentIdeal::commutator, 0, 2);
  CHECK(r4.verdict == Verdict::fail);
}
