// Independent reference implementations used as test oracles. Everything in
// here is deliberately naive and shares no code with the library paths it
// checks.
#pragma once

#include <algorithm>
#include <vector>

#include "nilcayley/grassmann.hpp"
#include "nilcayley/rational.hpp"

namespace oracles {

using nilcayley::GrassmannElement;
using nilcayley::Rational;

/// Term-by-term Grassmann product: concatenate index lists, bubble-sort
/// counting swaps, drop repeated generators.
inline GrassmannElement naive_gmul(const GrassmannElement& a, const GrassmannElement& b) {
  GrassmannElement::Terms terms;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      std::vector<int> indices;
      for (int i = 0; i < 64; ++i)
        if (ma & (std::uint64_t{1} << i)) indices.push_back(i);
      for (int i = 0; i < 64; ++i)
        if (mb & (std::uint64_t{1} << i)) indices.push_back(i);
      int swaps = 0;
      bool repeated = false;
      for (std::size_t i = 0; i + 1 < indices.size() && !repeated; ++i) {
        for (std::size_t j = 0; j + 1 < indices.size() - i; ++j) {
          if (indices[j] == indices[j + 1]) repeated = true;
          if (indices[j] > indices[j + 1]) {
            std::swap(indices[j], indices[j + 1]);
            ++swaps;
          }
        }
      }
      for (std::size_t i = 0; i + 1 < indices.size(); ++i)
        if (indices[i] == indices[i + 1]) repeated = true;
      if (repeated) continue;
      std::uint64_t mask = 0;
      for (int i : indices) mask |= std::uint64_t{1} << i;
      const Rational c = swaps % 2 == 0 ? ca * cb : -(ca * cb);
      auto [it, inserted] = terms.emplace(mask, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
      }
    }
  }
  return GrassmannElement(a.generator_count(), std::move(terms));
}

using QMatrix = std::vector<std::vector<Rational>>;

inline QMatrix minor_of(const QMatrix& m, std::size_t row, std::size_t col) {
  QMatrix out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == row) continue;
    std::vector<Rational> r;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j == col) continue;
      r.push_back(m[i][j]);
    }
    out.push_back(std::move(r));
  }
  return out;
}

/// Cofactor-expansion determinant.
inline Rational cofactor_det(const QMatrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Rational acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    const Rational sub = cofactor_det(minor_of(m, 0, j));
    acc += (j % 2 == 0 ? m[0][j] : -m[0][j]) * sub;
  }
  return acc;
}

/// Classical adjugate: adj(A)_{ij} = (-1)^{i+j} det(A with row j, col i removed).
inline QMatrix adjugate(const QMatrix& m) {
  const std::size_t n = m.size();
  QMatrix out(n, std::vector<Rational>(n, Rational(0)));
  if (n == 1) {
    out[0][0] = Rational(1);
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational d = cofactor_det(minor_of(m, j, i));
      out[i][j] = (i + j) % 2 == 0 ? d : -d;
    }
  return out;
}

inline QMatrix qmat_mul(const QMatrix& a, const QMatrix& b) {
  const std::size_t n = a.size();
  QMatrix out(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) out[i][j] += a[i][l] * b[l][j];
  return out;
}

inline QMatrix qmat_scale(const Rational& q, const QMatrix& a) {
  QMatrix out = a;
  for (auto& row : out)
    for (auto& e : row) e *= q;
  return out;
}

/// Commutative right-adjoint chain using the classical adjugate:
/// P_1 = (n-1)! adj(A), P_{j+1} = (n-1)! adj(A P_1 ... P_j).
inline std::vector<QMatrix> commutative_chain(const QMatrix& a, int k) {
  Rational fact(1);
  for (std::size_t i = 2; i + 1 <= a.size(); ++i) fact *= Rational(static_cast<long>(i));
  std::vector<QMatrix> p;
  QMatrix running = a;
  for (int j = 1; j <= k; ++j) {
    p.push_back(qmat_scale(fact, adjugate(running)));
    running = qmat_mul(running, p.back());
  }
  return p;
}

/// Dense rational polynomials for the classical characteristic polynomial.
using QPoly = std::vector<Rational>;  // coefficient of x^i at index i

inline QPoly qpoly_add(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

inline QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline QPoly qpoly_neg(QPoly a) {
  for (auto& c : a) c = -c;
  return a;
}

/// det(x I - A) over Q by cofactor expansion in Q[x].
inline QPoly classical_char_poly(const QMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<QPoly>> m(n, std::vector<QPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        m[i][j] = QPoly{-a[i][j], Rational(1)};
      } else if (!a[i][j].is_zero()) {
        m[i][j] = QPoly{-a[i][j]};
      }
    }
  auto det = [&](auto&& self, const std::vector<std::vector<QPoly>>& mm) -> QPoly {
    const std::size_t nn = mm.size();
    if (nn == 1) return mm[0][0];
    QPoly acc;
    for (std::size_t j = 0; j < nn; ++j) {
      if (mm[0][j].empty()) continue;
      std::vector<std::vector<QPoly>> sub(nn - 1, std::vector<QPoly>(nn - 1));
      for (std::size_t i = 1; i < nn; ++i) {
        std::size_t cc = 0;
        for (std::size_t c = 0; c < nn; ++c) {
          if (c == j) continue;
          sub[i - 1][cc++] = mm[i][c];
        }
      }
      QPoly term = qpoly_mul(mm[0][j], self(self, sub));
      if (j % 2 == 1) term = qpoly_neg(std::move(term));
      acc = qpoly_add(acc, term);
    }
    return acc;
  };
  return det(det, m);
}

/// Naive row-echelon rank over Q; no pivoting strategy, no RREF.
inline std::size_t naive_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t cc = c; cc < cols; ++cc) rows[r][cc] -= f * rows[rank][cc];
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracles
