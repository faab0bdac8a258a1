#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilcayley/determinants.hpp"
#include "nilcayley/grassmann.hpp"
#include "nilcayley/parser.hpp"
#include "nilcayley/relfree.hpp"
#include "nilcayley/ring.hpp"
#include "oracles.hpp"

using namespace nilcayley;

namespace {

oracles::QMatrix to_qmatrix(const RingMatrix<Rational>& a) {
  oracles::QMatrix out(a.size(), std::vector<Rational>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out[i][j] = a.at(i, j);
  return out;
}

RingMatrix<Rational> random_rational_matrix(std::size_t n, std::uint64_t seed) {
  SampleRng rng(seed);
  std::vector<Rational> entries;
  for (std::size_t i = 0; i < n * n; ++i)
    entries.emplace_back(rng.uniform(-6, 6), rng.uniform(1, 3));
  return RingMatrix<Rational>(n, std::move(entries));
}

}  // namespace

TEST_CASE("sdet on small matrices") {
  GrassmannAlgebra e(4);
  // sdet(I_2) = 2: both permutation pairs with alpha = beta survive.
  CHECK(e.equal(sdet(e, mat_identity(e, 2)), embed(e, Rational(2))));

  // Four-term expansion ad - bc - cb + da on generic entries.
  const auto a = parse_matrix(e, "[[v1, v2],[v3, v4]]", 2);
  const auto v = [&](int i) { return e.generator(i); };
  auto expected = e.mul(v(1), v(4));
  expected = e.sub(expected, e.mul(v(2), v(3)));
  expected = e.sub(expected, e.mul(v(3), v(2)));
  expected = e.add(expected, e.mul(v(4), v(1)));
  CHECK(e.equal(sdet(e, a), expected));

  // 1x1 degenerate case.
  RationalRing q;
  CHECK(q.equal(sdet(q, parse_matrix(q, "[[7]]", 1)), Rational(7)));

  // Size guardrail, overridable.
  CHECK_THROWS_AS(sdet(e, mat_identity(e, 6)), ring_error);
  DetCaps caps;
  caps.max_n = 6;
  CHECK(e.equal(sdet(e, mat_identity(e, 6), caps), embed(e, Rational(720))));
}

TEST_CASE("commutative specialization: sdet = n! det and A* = (n-1)! adj") {
  RationalRing q;
  for (std::size_t n = 2; n <= 4; ++n) {
    Rational nfact(1), n1fact(1);
    for (std::size_t i = 2; i <= n; ++i) nfact *= Rational(static_cast<long>(i));
    for (std::size_t i = 2; i + 1 <= n; ++i) n1fact *= Rational(static_cast<long>(i));
    for (std::uint64_t t = 0; t < 10; ++t) {
      const auto a = random_rational_matrix(n, SampleRng::mix(61 + n, t));
      const auto qa = to_qmatrix(a);
      CHECK(sdet(q, a) == nfact * oracles::cofactor_det(qa));
      const auto adj = sym_adjoint(q, a);
      const auto classical = oracles::adjugate(qa);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) CHECK(adj.at(i, j) == n1fact * classical[i][j]);
    }
  }
}

TEST_CASE("symmetric adjoint structure") {
  GrassmannAlgebra e(4);
  // [[d, -b],[-c, a]] for n = 2.
  const auto a = parse_matrix(e, "[[v1, v2],[v3, v4]]", 2);
  const auto adj = sym_adjoint(e, a);
  CHECK(e.equal(adj.at(0, 0), e.generator(4)));
  CHECK(e.equal(adj.at(0, 1), e.neg(e.generator(2))));
  CHECK(e.equal(adj.at(1, 0), e.neg(e.generator(3))));
  CHECK(e.equal(adj.at(1, 1), e.generator(1)));

  // sym_adjoint(I_n) = (n-1)! I_n.
  RationalRing q;
  for (std::size_t n = 1; n <= 4; ++n) {
    Rational fact(1);
    for (std::size_t i = 2; i + 1 <= n; ++i) fact *= Rational(static_cast<long>(i));
    const auto id_adj = sym_adjoint(q, mat_identity(q, n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        CHECK(id_adj.at(i, j) == (i == j ? fact : Rational(0)));
  }

  // n = 1 convention: the adjoint is [1].
  GrassmannAlgebra e1(2);
  const auto one_adj = sym_adjoint(e1, parse_matrix(e1, "[[v1]]", 1));
  CHECK(e1.equal(one_adj.at(0, 0), e1.one()));
}

TEST_CASE("adjoint entries are signed symmetric determinants of minors") {
  GrassmannAlgebra e(3);
  SampleSpec spec;
  spec.term_count = 2;
  for (std::uint64_t t = 0; t < 6; ++t) {
    spec.seed = SampleRng::mix(71, t);
    const auto a = sample_matrix(e, 3, spec);
    const auto adj = sym_adjoint(e, a);
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t s = 0; s < 3; ++s) {
        // Delete row s and column r, then sdet, with sign (-1)^{r+s}.
        std::vector<GrassmannElement> entries;
        for (std::size_t i = 0; i < 3; ++i) {
          if (i == s) continue;
          for (std::size_t j = 0; j < 3; ++j) {
            if (j == r) continue;
            entries.push_back(a.at(i, j));
          }
        }
        auto minor_sdet = sdet(e, RingMatrix<GrassmannElement>(2, std::move(entries)));
        if ((r + s) % 2 == 1) minor_sdet = e.neg(minor_sdet);
        CHECK(e.equal(adj.at(r, s), minor_sdet));
      }
    }
  }
}

TEST_CASE("sdet equals both trace forms") {
  GrassmannAlgebra e(3);
  SampleSpec spec;
  for (std::uint64_t t = 0; t < 10; ++t) {
    spec.seed = SampleRng::mix(83, t);
    const auto a = sample_matrix(e, 2, spec);
    const auto adj = sym_adjoint(e, a);
    const auto d = sdet(e, a);
    CHECK(e.equal(d, mat_trace(e, mat_mul(e, a, adj))));
    CHECK(e.equal(d, mat_trace(e, mat_mul(e, adj, a))));
  }
}

TEST_CASE("right adjoint chain") {
  RationalRing q;
  GrassmannAlgebra e(3);

  // k = 1 is the symmetric adjoint alone.
  const auto a = parse_matrix(e, "[[v1, v2],[v3, 0]]", 2);
  const auto chain1 = right_adjoint_chain(e, a, 1);
  CHECK(chain1.p.size() == 1);
  CHECK(mat_equal(e, chain1.p[0], sym_adjoint(e, a)));
  CHECK(mat_equal(e, chain1.product, mat_mul(e, a, chain1.p[0])));

  // Commutative chain against the classical-adjugate oracle.
  for (std::size_t n = 2; n <= 3; ++n) {
    for (std::uint64_t t = 0; t < 5; ++t) {
      const auto b = random_rational_matrix(n, SampleRng::mix(91 + n, t));
      const auto chain = right_adjoint_chain(q, b, 3);
      const auto oracle = oracles::commutative_chain(to_qmatrix(b), 3);
      REQUIRE(chain.p.size() == oracle.size());
      for (std::size_t j = 0; j < oracle.size(); ++j)
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) CHECK(chain.p[j].at(r, c) == oracle[j][r][c]);
    }
  }

  // The zero matrix kills the whole chain for n >= 2.
  const auto z = mat_filled(e, 2);
  const auto zchain = right_adjoint_chain(e, z, 3);
  for (const auto& p : zchain.p) CHECK(mat_is_zero(e, p));

  CHECK_THROWS_AS(right_adjoint_chain(e, a, 0), ring_error);
  CHECK_THROWS_AS(right_adjoint_chain(e, a, 5), ring_error);  // k cap
}

TEST_CASE("rdet and radj") {
  GrassmannAlgebra e(3);
  RationalRing q;

  // rdet_(k) of a 1x1 matrix is the entry itself, any k.
  const auto single = parse_matrix(e, "[[v1 + 1]]", 1);
  for (int k = 1; k <= 3; ++k)
    CHECK(e.equal(rdet(e, single, k), e.add(e.generator(1), e.one())));

  // rdet_(1) = sdet on random matrices.
  SampleSpec spec;
  for (std::uint64_t t = 0; t < 8; ++t) {
    spec.seed = SampleRng::mix(101, t);
    const auto a = sample_matrix(e, 2, spec);
    CHECK(e.equal(rdet(e, a, 1), sdet(e, a)));
  }

  // Commutative 2x2: rdet_(1) = 2 det.
  const auto b = parse_matrix(q, "[[1, 2],[3, 4]]", 2);
  CHECK(rdet(q, b, 1) == Rational(-4));

  // radj_(k) = n P_1...P_k.
  const auto a = parse_matrix(e, "[[v1, v2],[v3, 0]]", 2);
  const auto chain = right_adjoint_chain(e, a, 2);
  const auto r = radj(e, a, 2);
  CHECK(mat_equal(e, r, mat_scale(e, Rational(2), mat_mul(e, chain.p[0], chain.p[1]))));
}

TEST_CASE("characteristic polynomial: degree and leading coefficient") {
  CHECK(charpoly_leading_scalar(1, 1) == Rational(1));
  CHECK(charpoly_leading_scalar(2, 1) == Rational(2));    // n!
  CHECK(charpoly_leading_scalar(3, 1) == Rational(6));
  CHECK(charpoly_leading_scalar(2, 2) == Rational(2));    // 2 * 1^3
  CHECK(charpoly_leading_scalar(3, 2) == Rational(48));   // 3 * 2^4
  CHECK(charpoly_leading_scalar(2, 3) == Rational(2));
  CHECK(charpoly_leading_scalar(4, 2) == Rational(4) * Rational(6) * Rational(6) * Rational(6) *
                                             Rational(6) * Rational(6));  // 4 * 6^5

  RationalRing q;
  // n = 2, k = 1 commutative: exactly twice the classical char poly.
  for (std::uint64_t t = 0; t < 8; ++t) {
    const auto a = random_rational_matrix(2, SampleRng::mix(111, t));
    const auto p = char_poly(q, a, 1);
    const auto classical = oracles::classical_char_poly(to_qmatrix(a));
    REQUIRE(p.coeffs.size() == 3);
    REQUIRE(classical.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(p.coeffs[i] == Rational(2) * classical[i]);
  }

  // A = 0, n = 2, k = 2: p = 2 x^4.
  GrassmannAlgebra e(4);
  const auto pz = char_poly(e, mat_filled(e, 2), 2);
  REQUIRE(pz.coeffs.size() == 5);
  for (std::size_t i = 0; i < 4; ++i) CHECK(e.is_zero(pz.coeffs[i]));
  CHECK(e.equal(pz.coeffs[4], embed(e, Rational(2))));

  // Degree n^k and the leading scalar on a generic Grassmann matrix.
  const auto a = parse_matrix(e, "[[v1, v2],[v3, v4]]", 2);
  const auto p = char_poly(e, a, 2);
  CHECK(p.coeffs.size() == 5);  // degree n^k = 4
  CHECK(e.equal(p.coeffs.back(), embed(e, Rational(2))));
}

TEST_CASE("interpolated coefficients agree with the polynomial-matrix route") {
  GrassmannAlgebra e(3);
  RationalRing q;
  SampleSpec spec;
  spec.term_count = 2;
  for (std::uint64_t t = 0; t < 4; ++t) {
    spec.seed = SampleRng::mix(121, t);
    const auto a = sample_matrix(e, 2, spec);
    const auto p1 = char_poly(e, a, 2);
    const auto p2 = char_poly_interpolated(e, a, 2);
    REQUIRE(p1.coeffs.size() == p2.coeffs.size());
    for (std::size_t i = 0; i < p1.coeffs.size(); ++i) CHECK(e.equal(p1.coeffs[i], p2.coeffs[i]));
  }
  for (std::uint64_t t = 0; t < 4; ++t) {
    const auto a = random_rational_matrix(3, SampleRng::mix(131, t));
    const auto p1 = char_poly(q, a, 1);
    const auto p2 = char_poly_interpolated(q, a, 1);
    REQUIRE(p1.coeffs.size() == p2.coeffs.size());
    for (std::size_t i = 0; i < p1.coeffs.size(); ++i) CHECK(p1.coeffs[i] == p2.coeffs[i]);
  }
}

TEST_CASE("sharded permutation sums agree with the sequential result") {
  // Exact addition makes the reduction order irrelevant; a two-shard split
  // over the outer permutation must reproduce sdet bit for bit.
  GrassmannAlgebra e(4);
  SampleSpec spec;
  spec.seed = 141;
  const auto a = sample_matrix(e, 3, spec);
  const auto sp = signed_permutations(3);
  GrassmannElement shard0 = e.zero(), shard1 = e.zero();
  for (std::size_t ai = 0; ai < sp.perms.size(); ++ai) {
    for (std::size_t bi = 0; bi < sp.perms.size(); ++bi) {
      auto prod = e.one();
      for (std::size_t t = 0; t < 3; ++t) prod = e.mul(prod, a.at(sp.perms[ai][t], sp.perms[bi][t]));
      if (sp.signs[ai] * sp.signs[bi] < 0) prod = e.neg(prod);
      (ai % 2 == 0 ? shard0 : shard1) += prod;
    }
  }
  CHECK(e.equal(e.add(shard0, shard1), sdet(e, a)));
}
