#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilcayley/grassmann.hpp"
#include "nilcayley/parser.hpp"
#include "nilcayley/relfree.hpp"
#include "nilcayley/ring.hpp"

using namespace nilcayley;

TEST_CASE("element grammar") {
  GrassmannAlgebra e(2);

  CHECK(e.equal(parse_element(e, "v1*v2 - v2*v1"), e.monomial(0b11, Rational(2))));
  CHECK(e.equal(parse_element(e, "1 + v1"), e.add(e.one(), e.generator(1))));
  CHECK(e.equal(parse_element(e, "3/2*v1"), e.scale(Rational(3, 2), e.generator(1))));
  CHECK(e.equal(parse_element(e, "-(v1 + v2)*v1"), e.monomial(0b11)));
  CHECK(e.equal(parse_element(e, "(1+v1)^2"), e.add(e.one(), e.scale(Rational(2), e.generator(1)))));
  CHECK(e.is_zero(parse_element(e, "v1^2")));
  CHECK(e.is_zero(parse_element(e, "0")));

  RationalRing q;
  CHECK(q.equal(parse_element(q, "2^3 - 1/2"), Rational(15, 2)));
  // Unary minus binds looser than '^'.
  CHECK(q.equal(parse_element(q, "-2^2"), Rational(-4)));
  CHECK(q.equal(parse_element(q, "(-2)^2"), Rational(4)));
}

TEST_CASE("relfree coordinates from expressions") {
  RelFreeAlgebra rf(2, 3, 5);
  const auto& alg = rf.algebra();
  const auto elem = parse_element(alg, "(1/2)*x^2 + y");
  const auto xx = *alg.symbol("xx");
  const auto y = *alg.symbol("y");
  CHECK(alg.equal(elem, alg.add(alg.scale(Rational(1, 2), xx), y)));
}

TEST_CASE("errors carry positions") {
  GrassmannAlgebra e(2);

  // Unknown generator.
  try {
    parse_element(e, "v1 + v3");
    FAIL("expected ParseError");
  } catch (const ParseError& err) {
    CHECK(err.line() == 1);
    CHECK(err.column() == 6);
    CHECK(std::string(err.what()).find("unknown generator 'v3'") != std::string::npos);
  }

  // Implicit multiplication is rejected as trailing input.
  CHECK_THROWS_AS(parse_element(e, "2 v1"), ParseError);
  // Malformed rational.
  CHECK_THROWS_AS(parse_element(e, "1/"), ParseError);
  CHECK_THROWS_AS(parse_element(e, "1//2"), ParseError);
  // Exponent overflow.
  CHECK_THROWS_AS(parse_element(e, "v1^99999999"), ParseError);
  CHECK_THROWS_AS(parse_element(e, "v1^200000"), ParseError);
  // Unbalanced parenthesis and stray characters.
  CHECK_THROWS_AS(parse_element(e, "(v1"), ParseError);
  CHECK_THROWS_AS(parse_element(e, "v1 $ v2"), ParseError);
  CHECK_THROWS_AS(parse_element(e, ""), ParseError);

  // Line/column tracking across newlines.
  try {
    parse_element(e, "v1 +\n  vq");
    FAIL("expected ParseError");
  } catch (const ParseError& err) {
    CHECK(err.line() == 2);
    CHECK(err.column() == 3);
  }
}

TEST_CASE("matrix grammar") {
  GrassmannAlgebra e(4);
  const auto a = parse_matrix(e, "[[v1, v2],[v3, v4]]", 2);
  CHECK(e.equal(a.at(0, 0), e.generator(1)));
  CHECK(e.equal(a.at(1, 1), e.generator(4)));

  // Semicolon row separators are accepted.
  const auto b = parse_matrix(e, "[[v1, v2];[v3, v4]]", 2);
  CHECK(mat_equal(e, a, b));

  // Rational entries embed into any backend.
  const auto p = parse_matrix(e, "[[0, 1],[1, 0]]", 2);
  CHECK(e.equal(p.at(0, 1), e.one()));
  CHECK(e.is_zero(p.at(0, 0)));

  // Ragged rows and size mismatches are reported.
  CHECK_THROWS_AS(parse_matrix(e, "[[v1],[v2]]", 2), ring_error);
  CHECK_THROWS_AS(parse_matrix(e, "[[v1, v2]]", 2), ring_error);
  CHECK_THROWS_AS(parse_matrix(e, "[[v1, v2],[v3, v4]", 2), ParseError);

  // Cell coordinates in element errors.
  try {
    parse_matrix(e, "[[v1, v2],[v9, v4]]", 2);
    FAIL("expected ParseError");
  } catch (const ParseError& err) {
    CHECK(std::string(err.what()).find("cell (2,1)") != std::string::npos);
  }
}

TEST_CASE("render/parse round-trip on sampled elements") {
  GrassmannAlgebra e(5);
  RelFreeAlgebra rf(2, 3, 4);
  RationalRing q;
  SampleSpec spec;
  spec.term_count = 4;
  for (std::uint64_t t = 0; t < 30; ++t) {
    spec.seed = SampleRng::mix(1001, t);
    {
      SampleRng rng(spec.seed);
      const auto a = sample_element(e, spec, rng);
      CHECK(e.equal(parse_element(e, e.to_string(a)), a));
    }
    {
      SampleRng rng(spec.seed);
      const auto a = sample_element(rf.algebra(), spec, rng);
      CHECK(rf.algebra().equal(parse_element(rf.algebra(), rf.algebra().to_string(a)), a));
    }
    {
      SampleRng rng(spec.seed);
      const auto a = sample_element(q, spec, rng);
      CHECK(q.equal(parse_element(q, q.to_string(a)), a));
    }
  }

  // Structure-constant labels parse back as symbols.
  const StructureAlgebra u2e2 = upper_triangular(from_grassmann(2), 2);
  for (std::uint64_t t = 0; t < 10; ++t) {
    spec.seed = SampleRng::mix(1011, t);
    SampleRng rng(spec.seed);
    const auto a = sample_element(u2e2, spec, rng);
    CHECK(u2e2.equal(parse_element(u2e2, u2e2.to_string(a)), a));
  }
}
