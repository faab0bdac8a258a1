#pragma once

#include <cstdint>
#include <vector>

#include "nilcayley/matrix.hpp"
#include "nilcayley/polynomial.hpp"
#include "nilcayley/ring.hpp"

namespace nilcayley {

/// Size guardrails for the permutation sums: the symmetric determinant of an
/// n x n matrix has (n!)^2 products of n factors, and the adjoint chain
/// raises the cost with every level. Overridable where callers know better.
struct DetCaps {
  std::size_t max_n = 5;
  int max_k = 4;
};

/// All permutations of {0..n-1} in lexicographic order, with signs.
struct SignedPermutations {
  std::vector<std::vector<std::uint8_t>> perms;
  std::vector<int> signs;
};
SignedPermutations signed_permutations(std::size_t n);

namespace detail_det {

inline void check_n(std::size_t n, const DetCaps& caps) {
  if (n > caps.max_n)
    throw ring_error("determinant: matrix size " + std::to_string(n) +
                     " exceeds cap " + std::to_string(caps.max_n));
}

}  // namespace detail_det

/// Symmetric determinant: the double permutation sum
///   sum_{alpha, beta} sgn(alpha) sgn(beta) a_{alpha(1),beta(1)} ... a_{alpha(n),beta(n)},
/// with factors multiplied in ascending position order.
template <RingBackend B>
typename B::Element sdet(const B& ring, const RingMatrix<typename B::Element>& a,
                         const DetCaps& caps = {}) {
  const std::size_t n = a.size();
  detail_det::check_n(n, caps);
  const SignedPermutations sp = signed_permutations(n);
  typename B::Element acc = ring.zero();
  for (std::size_t ai = 0; ai < sp.perms.size(); ++ai) {
    for (std::size_t bi = 0; bi < sp.perms.size(); ++bi) {
      typename B::Element prod = ring.one();
      for (std::size_t t = 0; t < n; ++t)
        prod = ring.mul(prod, a.at(sp.perms[ai][t], sp.perms[bi][t]));
      if (sp.signs[ai] * sp.signs[bi] > 0) {
        acc = ring.add(acc, prod);
      } else {
        acc = ring.sub(acc, prod);
      }
    }
  }
  return acc;
}

/// Symmetric adjoint: entry (r, s) is the constrained double sum over
/// alpha(s) = s, beta(s) = r with the s-th factor omitted. For n = 1 the
/// sums are empty products, so the adjoint is [1].
template <RingBackend B>
RingMatrix<typename B::Element> sym_adjoint(const B& ring,
                                            const RingMatrix<typename B::Element>& a,
                                            const DetCaps& caps = {}) {
  const std::size_t n = a.size();
  detail_det::check_n(n, caps);
  const SignedPermutations sp = signed_permutations(n);
  auto out = mat_filled(ring, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      typename B::Element acc = ring.zero();
      for (std::size_t ai = 0; ai < sp.perms.size(); ++ai) {
        if (sp.perms[ai][s] != s) continue;
        for (std::size_t bi = 0; bi < sp.perms.size(); ++bi) {
          if (sp.perms[bi][s] != r) continue;
          typename B::Element prod = ring.one();
          for (std::size_t t = 0; t < n; ++t) {
            if (t == s) continue;
            prod = ring.mul(prod, a.at(sp.perms[ai][t], sp.perms[bi][t]));
          }
          if (sp.signs[ai] * sp.signs[bi] > 0) {
            acc = ring.add(acc, prod);
          } else {
            acc = ring.sub(acc, prod);
          }
        }
      }
      out.at(r, s) = acc;
    }
  }
  return out;
}

/// The right adjoint sequence P_1 = A*, P_{j+1} = (A P_1 ... P_j)*, together
/// with the running product A P_1 ... P_k.
template <typename E>
struct AdjointChain {
  std::vector<RingMatrix<E>> p;
  RingMatrix<E> product;  // A P_1 ... P_k
};

template <RingBackend B>
AdjointChain<typename B::Element> right_adjoint_chain(const B& ring,
                                                      const RingMatrix<typename B::Element>& a,
                                                      int k, const DetCaps& caps = {}) {
  if (k < 1) throw ring_error("right adjoint chain: k must be >= 1");
  if (k > caps.max_k)
    throw ring_error("right adjoint chain: k exceeds cap " + std::to_string(caps.max_k));
  std::vector<RingMatrix<typename B::Element>> p;
  RingMatrix<typename B::Element> running = a;  // A P_1 ... P_j
  for (int j = 1; j <= k; ++j) {
    p.push_back(sym_adjoint(ring, running, caps));
    running = mat_mul(ring, running, p.back());
  }
  return {std::move(p), std::move(running)};
}

/// radj_(k)(A) = n P_1 ... P_k.
template <RingBackend B>
RingMatrix<typename B::Element> radj(const B& ring, const RingMatrix<typename B::Element>& a,
                                     int k, const DetCaps& caps = {}) {
  const AdjointChain<typename B::Element> chain = right_adjoint_chain(ring, a, k, caps);
  auto prod = chain.p[0];
  for (std::size_t j = 1; j < chain.p.size(); ++j) prod = mat_mul(ring, prod, chain.p[j]);
  return mat_scale(ring, Rational(static_cast<long>(a.size())), prod);
}

/// rdet_(k)(A) = tr(A P_1 ... P_k); rdet_(1) coincides with sdet.
template <RingBackend B>
typename B::Element rdet(const B& ring, const RingMatrix<typename B::Element>& a, int k,
                         const DetCaps& caps = {}) {
  return mat_trace(ring, right_adjoint_chain(ring, a, k, caps).product);
}

/// n {(n-1)!}^{1 + n + ... + n^{k-1}}: the leading coefficient of the k-th
/// right characteristic polynomial.
Rational charpoly_leading_scalar(std::size_t n, int k);

template <typename E>
struct CharPolyResult {
  int k = 1;
  std::size_t n = 0;
  std::vector<E> coeffs;  // lambda_0 .. lambda_{n^k}
};

inline std::size_t int_pow(std::size_t base, int e) {
  std::size_t out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

/// The k-th right characteristic polynomial p_{A,k}(x) = rdet_(k)(x I - A),
/// computed in the matrix ring over R[x]. The result has degree exactly n^k
/// with the scalar leading coefficient above; a mismatch would mean an
/// arithmetic bug, and throws.
template <RingBackend B>
CharPolyResult<typename B::Element> char_poly(const B& ring,
                                              const RingMatrix<typename B::Element>& a, int k,
                                              const DetCaps& caps = {}) {
  const std::size_t n = a.size();
  PolyRing<B> pr(ring);
  auto xi_minus_a = mat_filled(pr, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      CentralPoly<typename B::Element> e;
      if (i == j) {
        e.coeffs = {ring.neg(a.at(i, j)), ring.one()};
        poly_trim(ring, e);
        if (e.coeffs.size() < 2) e.coeffs = {ring.zero(), ring.one()};
      } else {
        e = poly_constant(ring, ring.neg(a.at(i, j)));
      }
      xi_minus_a.at(i, j) = std::move(e);
    }
  }
  CentralPoly<typename B::Element> p = rdet(pr, xi_minus_a, k, caps);

  CharPolyResult<typename B::Element> out;
  out.k = k;
  out.n = n;
  const std::size_t deg = int_pow(n, k);
  if (p.coeffs.size() != deg + 1)
    throw std::logic_error("char_poly: degree is not n^k");
  if (!ring.equal(p.coeffs.back(), embed(ring, charpoly_leading_scalar(n, k))))
    throw std::logic_error("char_poly: leading coefficient mismatch");
  out.coeffs = std::move(p.coeffs);
  return out;
}

/// Independent route to the same coefficients: evaluate rdet_(k)(c I - A) at
/// the rational nodes c = 0..n^k and solve the Vandermonde system exactly.
/// Shares no polynomial arithmetic with char_poly.
template <RingBackend B>
CharPolyResult<typename B::Element> char_poly_interpolated(const B& ring,
                                                           const RingMatrix<typename B::Element>& a,
                                                           int k, const DetCaps& caps = {}) {
  const std::size_t n = a.size();
  const std::size_t deg = int_pow(n, k);
  std::vector<typename B::Element> values;
  values.reserve(deg + 1);
  for (std::size_t c = 0; c <= deg; ++c) {
    auto shifted = mat_neg(ring, a);
    for (std::size_t i = 0; i < n; ++i)
      shifted.at(i, i) = ring.add(shifted.at(i, i), embed(ring, Rational(static_cast<long>(c))));
    values.push_back(rdet(ring, shifted, k, caps));
  }
  // Row-reduce the rational Vandermonde with ring-valued right-hand sides.
  std::vector<std::vector<Rational>> v(deg + 1, std::vector<Rational>(deg + 1));
  for (std::size_t r = 0; r <= deg; ++r) {
    Rational power(1);
    for (std::size_t c = 0; c <= deg; ++c) {
      v[r][c] = power;
      power *= Rational(static_cast<long>(r));
    }
  }
  for (std::size_t col = 0; col <= deg; ++col) {
    std::size_t pivot = col;
    while (v[pivot][col].is_zero()) ++pivot;  // nodes are distinct, always found
    std::swap(v[pivot], v[col]);
    std::swap(values[pivot], values[col]);
    const Rational inv = v[col][col].inverse();
    for (auto& q : v[col]) q *= inv;
    values[col] = ring.scale(inv, values[col]);
    for (std::size_t r = 0; r <= deg; ++r) {
      if (r == col) continue;
      const Rational f = v[r][col];
      if (f.is_zero()) continue;
      for (std::size_t c = col; c <= deg; ++c) v[r][c] -= f * v[col][c];
      values[r] = ring.sub(values[r], ring.scale(f, values[col]));
    }
  }
  CharPolyResult<typename B::Element> out;
  out.k = k;
  out.n = n;
  out.coeffs = std::move(values);
  return out;
}

}  // namespace nilcayley
