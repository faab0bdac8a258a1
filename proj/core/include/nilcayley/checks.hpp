#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "nilcayley/determinants.hpp"
#include "nilcayley/grassmann.hpp"
#include "nilcayley/ideals.hpp"
#include "nilcayley/matrix.hpp"
#include "nilcayley/polynomial.hpp"
#include "nilcayley/report.hpp"
#include "nilcayley/ring.hpp"

namespace nilcayley {

enum class IdealKind { double_commutator, commutator };
enum class LiftStrategy { canonical, randomized };

inline std::string ideal_kind_str(IdealKind k) {
  return k == IdealKind::double_commutator ? "double-commutator" : "commutator";
}
inline std::string lift_strategy_str(LiftStrategy s) {
  return s == LiftStrategy::canonical ? "canonical" : "randomized";
}

namespace detail_checks {

class Timer {
public:
  explicit Timer(VerificationReport& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    r_.elapsed_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start_).count();
  }

private:
  VerificationReport& r_;
  std::chrono::steady_clock::time_point start_;
};

/// Sampled Lie-nilpotency precheck; on failure flips the report to
/// hypotheses-unmet with the witness tuple.
template <RingBackend B>
bool require_lie_index(const B& ring, int k, const SampleSpec& spec, VerificationReport& r) {
  SampleSpec pre = spec;
  pre.seed = SampleRng::mix(spec.seed, 0x11e);
  const auto ln = is_lie_nilpotent_sampled(ring, k, pre, 10);
  if (ln.holds) return true;
  r.verdict = Verdict::hypotheses_unmet;
  Witness w{"backend is not Lie nilpotent of the requested index", {}};
  for (std::size_t i = 0; i < ln.witness.size(); ++i)
    w.data.emplace_back("x" + std::to_string(i + 1), ring.to_string(ln.witness[i]));
  r.witnesses.push_back(std::move(w));
  return false;
}

}  // namespace detail_checks

/// Jennings product vanishing: over a ring of Lie nilpotency index k >= 3,
/// the product of two left-normed k-fold commutators is zero and every
/// k-fold commutator is central.
template <RingBackend B>
VerificationReport check_jennings(const B& ring, int k, const SampleSpec& spec, int trials) {
  VerificationReport r;
  r.check_id = "jennings";
  r.backend = ring.name();
  r.set_param("k", std::to_string(k));
  r.set_param("seed", std::to_string(spec.seed));
  r.set_param("trials", std::to_string(trials));
  detail_checks::Timer timer(r);
  if (k < 3) {
    r.verdict = Verdict::hypotheses_unmet;
    r.witnesses.push_back({"requires Lie nilpotency index k >= 3", {}});
    return r;
  }
  if (!detail_checks::require_lie_index(ring, k, spec, r)) return r;
  const auto gens = ring.generators();
  for (int t = 0; t < trials; ++t) {
    SampleRng rng(SampleRng::mix(spec.seed, static_cast<std::uint64_t>(t)));
    std::vector<typename B::Element> xs, ys;
    for (int i = 0; i < k; ++i) xs.push_back(sample_element(ring, spec, rng));
    for (int i = 0; i < k; ++i) ys.push_back(sample_element(ring, spec, rng));
    const auto cx = left_normed(ring, xs);
    const auto cy = left_normed(ring, ys);
    const auto prod = ring.mul(cx, cy);
    if (!ring.is_zero(prod)) {
      Witness w{"nonzero product of two left-normed commutators", {}};
      w.data.emplace_back("trial", std::to_string(t));
      w.data.emplace_back("left", ring.to_string(cx));
      w.data.emplace_back("right", ring.to_string(cy));
      w.data.emplace_back("residual", ring.to_string(prod));
      r.fail(std::move(w));
      return r;
    }
    for (const auto& g : gens) {
      const auto c = commutator(ring, cx, g);
      if (!ring.is_zero(c)) {
        Witness w{"left-normed commutator is not central", {}};
        w.data.emplace_back("trial", std::to_string(t));
        w.data.emplace_back("commutator", ring.to_string(cx));
        w.data.emplace_back("generator", ring.to_string(g));
        w.data.emplace_back("residual", ring.to_string(c));
        r.fail(std::move(w));
        return r;
      }
    }
  }
  return r;
}

/// Fundamental right-adjoint identity: A radj_(k)(A) = n A P_1...P_k
/// = rdet_(k)(A) I_n, entrywise exact.
template <RingBackend B>
VerificationReport check_fundamental(const B& ring, const RingMatrix<typename B::Element>& a,
                                     int k, const SampleSpec& spec, const DetCaps& caps = {}) {
  VerificationReport r;
  r.check_id = "fundamental";
  r.backend = ring.name();
  r.set_param("n", std::to_string(a.size()));
  r.set_param("k", std::to_string(k));
  detail_checks::Timer timer(r);
  if (!detail_checks::require_lie_index(ring, k, spec, r)) return r;

  const auto chain = right_adjoint_chain(ring, a, k, caps);
  auto prod = chain.p[0];
  for (std::size_t j = 1; j < chain.p.size(); ++j) prod = mat_mul(ring, prod, chain.p[j]);
  const auto radj_a = mat_scale(ring, Rational(static_cast<long>(a.size())), prod);
  const auto lhs = mat_mul(ring, a, radj_a);
  const auto mid = mat_scale(ring, Rational(static_cast<long>(a.size())), chain.product);
  const auto det = mat_trace(ring, chain.product);
  auto rhs = mat_filled(ring, a.size());
  for (std::size_t i = 0; i < a.size(); ++i) rhs.at(i, i) = det;

  if (!mat_equal(ring, lhs, mid)) {
    r.fail({"A radj(A) differs from n A P_1...P_k",
            {{"A", mat_to_string(ring, a)}, {"lhs", mat_to_string(ring, lhs)},
             {"rhs", mat_to_string(ring, mid)}}});
    return r;
  }
  if (!mat_equal(ring, lhs, rhs)) {
    r.fail({"A radj(A) differs from rdet(A) I",
            {{"A", mat_to_string(ring, a)},
             {"residual", mat_to_string(ring, mat_sub(ring, lhs, rhs))}}});
  }
  return r;
}

/// Right Cayley-Hamilton identity: (A) p_{A,k} = 0 with right coefficients,
/// and (A)(p_{A,k} h) = 0 for any further right factor h.
template <RingBackend B>
VerificationReport check_ch(const B& ring, const RingMatrix<typename B::Element>& a, int k,
                            const std::optional<CentralPoly<typename B::Element>>& h,
                            const SampleSpec& spec, const DetCaps& caps = {}) {
  VerificationReport r;
  r.check_id = "ch";
  r.backend = ring.name();
  r.set_param("n", std::to_string(a.size()));
  r.set_param("k", std::to_string(k));
  detail_checks::Timer timer(r);
  if (!detail_checks::require_lie_index(ring, k, spec, r)) return r;

  const auto p = char_poly(ring, a, k, caps);
  r.degree_info.emplace_back("degree", static_cast<long>(int_pow(a.size(), k)));
  r.set_param("leading_coefficient", charpoly_leading_scalar(a.size(), k).str());
  CentralPoly<typename B::Element> poly{p.coeffs};
  const auto s = poly_eval_right(ring, a, poly);
  if (!mat_is_zero(ring, s)) {
    r.fail({"(A) p_{A,k} is not zero",
            {{"A", mat_to_string(ring, a)}, {"residual", mat_to_string(ring, s)}}});
    return r;
  }
  if (h) {
    PolyRing<B> pr(ring);
    const auto u = poly_mul(ring, poly, *h);
    const auto su = poly_eval_right(ring, a, u);
    r.set_param("h", pr.to_string(*h));
    if (!mat_is_zero(ring, su)) {
      r.fail({"(A)(p_{A,k} h) is not zero",
              {{"A", mat_to_string(ring, a)}, {"h", pr.to_string(*h)},
               {"residual", mat_to_string(ring, su)}}});
    }
  }
  return r;
}

/// Domokos trace form of the 2x2 right Cayley-Hamilton identity over a ring
/// of Lie nilpotency index 2, evaluated verbatim with all trace products in
/// the displayed order.
template <RingBackend B>
VerificationReport check_domokos_2x2(const B& ring, const RingMatrix<typename B::Element>& a,
                                     const SampleSpec& spec) {
  VerificationReport r;
  r.check_id = "domokos";
  r.backend = ring.name();
  r.set_param("n", "2");
  detail_checks::Timer timer(r);
  if (a.size() != 2) {
    r.verdict = Verdict::hypotheses_unmet;
    r.witnesses.push_back({"matrix must be 2x2", {}});
    return r;
  }
  if (!detail_checks::require_lie_index(ring, 2, spec, r)) return r;

  const auto a2 = mat_mul(ring, a, a);
  const auto a3 = mat_mul(ring, a2, a);
  const auto a4 = mat_mul(ring, a2, a2);
  const auto t1 = mat_trace(ring, a);
  const auto t2 = mat_trace(ring, a2);
  const auto t3 = mat_trace(ring, a3);

  const auto t1sq = ring.mul(t1, t1);
  const auto t1cb = ring.mul(t1sq, t1);
  const auto t1qu = ring.mul(t1cb, t1);
  const auto half = Rational(1, 2);
  const auto quarter = Rational(1, 4);

  // 1/2 tr^4(A) + 1/2 tr^2(A^2) + 1/4 tr^2(A) tr(A^2) - 5/4 tr(A^2) tr^2(A)
  //   + [tr(A^3), tr(A)]
  auto c_i = ring.scale(half, t1qu);
  c_i = ring.add(c_i, ring.scale(half, ring.mul(t2, t2)));
  c_i = ring.add(c_i, ring.scale(quarter, ring.mul(t1sq, t2)));
  c_i = ring.sub(c_i, ring.scale(Rational(5, 4), ring.mul(t2, t1sq)));
  c_i = ring.add(c_i, commutator(ring, t3, t1));

  // tr(A) tr(A^2) + tr(A^2) tr(A) - 2 tr^3(A)
  auto c_a = ring.add(ring.mul(t1, t2), ring.mul(t2, t1));
  c_a = ring.sub(c_a, ring.scale(Rational(2), t1cb));

  // 4 tr^2(A) - 2 tr(A^2)
  const auto c_a2 = ring.sub(ring.scale(Rational(4), t1sq), ring.scale(Rational(2), t2));

  auto total = mat_filled(ring, 2);
  for (std::size_t i = 0; i < 2; ++i) total.at(i, i) = c_i;
  total = mat_add(ring, total, mat_mul_elem_right(ring, a, c_a));
  total = mat_add(ring, total, mat_mul_elem_right(ring, a2, c_a2));
  total = mat_sub(ring, total, mat_mul_elem_right(ring, a3, ring.scale(Rational(4), t1)));
  total = mat_add(ring, total, mat_scale(ring, Rational(2), a4));

  if (!mat_is_zero(ring, total)) {
    r.fail({"trace form does not vanish",
            {{"A", mat_to_string(ring, a)}, {"residual", mat_to_string(ring, total)}}});
  }
  return r;
}

/// Traceless nilpotency: tr(A) = tr(A^2) = 0 for a 2x2 matrix over a ring of
/// Lie nilpotency index k forces A^{2^k} = 0.
template <RingBackend B>
VerificationReport check_trace_nilpotency(const B& ring, const RingMatrix<typename B::Element>& a,
                                          int k) {
  VerificationReport r;
  r.check_id = "trace-nilpotency";
  r.backend = ring.name();
  r.set_param("n", "2");
  r.set_param("k", std::to_string(k));
  detail_checks::Timer timer(r);
  if (a.size() != 2 || k < 1 || k > 20) {
    r.verdict = Verdict::hypotheses_unmet;
    r.witnesses.push_back({"requires a 2x2 matrix and 1 <= k <= 20", {}});
    return r;
  }
  const auto t1 = mat_trace(ring, a);
  const auto t2 = mat_trace(ring, mat_mul(ring, a, a));
  if (!ring.is_zero(t1) || !ring.is_zero(t2)) {
    r.verdict = Verdict::hypotheses_unmet;
    r.witnesses.push_back({"traces do not vanish",
                           {{"tr(A)", ring.to_string(t1)}, {"tr(A^2)", ring.to_string(t2)}}});
    return r;
  }
  const std::uint32_t e = std::uint32_t{1} << k;
  r.degree_info.emplace_back("power", static_cast<long>(e));
  const auto pw = mat_pow(ring, a, e);
  if (!mat_is_zero(ring, pw)) {
    r.fail({"A^{2^k} is not zero",
            {{"A", mat_to_string(ring, a)}, {"residual", mat_to_string(ring, pw)}}});
  }
  return r;
}

/// Power Cayley-Hamilton identity: compute the level-2 (or level-1, for the
/// commutator ideal) right characteristic polynomial over the quotient by
/// the chosen ideal, lift the coefficients, and verify that the lifted sum
/// lands in matrices over the ideal and its `exponent`-th power vanishes.
VerificationReport check_power_ch(const StructureAlgebra& alg,
                                  const RingMatrix<AlgebraElement>& a, IdealKind kind,
                                  int exponent, LiftStrategy lift, std::uint64_t seed,
                                  std::optional<int> lie_index, const DetCaps& caps = {});

/// Conjugation invariance of the second right characteristic polynomial over
/// the quotient by the double commutator ideal: p_{T^{-1}AT} = p_A for any
/// invertible rational T.
VerificationReport check_conjugation_invariance(const StructureAlgebra& alg,
                                                const RingMatrix<AlgebraElement>& a,
                                                const std::vector<QVector>& t_rows,
                                                const DetCaps& caps = {});

enum class NilpotentIdeal { double_commutator, commutator, jennings };

/// Computes the chosen ideal, then its powers; reports the minimal vanishing
/// exponent and asserts it is at most `expected_exponent`.
VerificationReport check_ideal_nilpotency(const StructureAlgebra& alg, NilpotentIdeal kind,
                                          int k, int expected_exponent);

/// Traceless 2x2 family over a Grassmann algebra: diagonal (a, -a) with a a
/// single even monomial (so a^2 = 0) and odd off-diagonal entries (so
/// bc + cb = 0); both trace hypotheses hold by construction.
RingMatrix<GrassmannElement> traceless_matrix_grassmann(const GrassmannAlgebra& ring,
                                                        std::uint64_t seed);

/// Traceless 2x2 family over a finite-dimensional algebra: diagonal (a, -a)
/// with random a and b = 1 + (nilpotent part); c is the exact solution of
/// b c + c b = -2 a^2, which exists because left and right multiplication by
/// the nilpotent part commute. Returns nullopt when the solve fails.
std::optional<RingMatrix<AlgebraElement>> traceless_matrix_findim(const StructureAlgebra& alg,
                                                                  std::uint64_t seed);

}  // namespace nilcayley
