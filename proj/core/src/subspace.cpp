#include "nilcayley/subspace.hpp"

#include <algorithm>
#include <cassert>

namespace nilcayley {

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  out.reserve(ambient_ - pivots_.size());
  std::size_t next = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (next < pivots_.size() && pivots_[next] == c) {
      ++next;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

QVector Subspace::reduce(QVector v) const {
  assert(v.size() == ambient_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational& c = v[pivots_[r]];
    if (c.is_zero()) continue;
    const Rational factor = c;  // pivot entries are 1
    const QVector& row = rows_[r];
    for (std::size_t j = pivots_[r]; j < ambient_; ++j) {
      if (!row[j].is_zero()) v[j] -= factor * row[j];
    }
  }
  return v;
}

bool Subspace::contains(const QVector& v) const {
  QVector r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rational& q) { return q.is_zero(); });
}

bool Subspace::insert(QVector v) {
  v = reduce(std::move(v));
  std::size_t pivot = ambient_;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (!v[j].is_zero()) {
      pivot = j;
      break;
    }
  }
  if (pivot == ambient_) return false;

  const Rational inv = v[pivot].inverse();
  for (std::size_t j = pivot; j < ambient_; ++j) {
    if (!v[j].is_zero()) v[j] *= inv;
  }
  // Clear the new pivot column in the existing rows.
  for (auto& row : rows_) {
    const Rational c = row[pivot];
    if (c.is_zero()) continue;
    for (std::size_t j = pivot; j < ambient_; ++j) {
      if (!v[j].is_zero()) row[j] -= c * v[j];
    }
  }
  auto where = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  std::size_t idx = static_cast<std::size_t>(where - pivots_.begin());
  pivots_.insert(where, pivot);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
  return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
}

Subspace span_of(std::size_t ambient, const std::vector<QVector>& vectors) {
  Subspace s(ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

std::optional<QVector> solve_linear(std::vector<QVector> columns, QVector rhs) {
  const std::size_t dim = rhs.size();
  const std::size_t ncols = columns.size();
  // Gaussian elimination on the augmented system, column-major input.
  std::vector<std::size_t> pivot_col_of_row(dim, ncols);
  std::size_t row = 0;
  for (std::size_t c = 0; c < ncols && row < dim; ++c) {
    // Smallest nonzero pivot by magnitude keeps intermediate entries modest.
    std::size_t best = dim;
    for (std::size_t r = row; r < dim; ++r) {
      if (columns[c][r].is_zero()) continue;
      if (best == dim || columns[c][r].abs() < columns[c][best].abs()) best = r;
    }
    if (best == dim) continue;
    for (auto& col : columns) std::swap(col[row], col[best]);
    std::swap(rhs[row], rhs[best]);
    const Rational inv = columns[c][row].inverse();
    for (std::size_t cc = c; cc < ncols; ++cc) columns[cc][row] *= inv;
    rhs[row] *= inv;
    for (std::size_t r = 0; r < dim; ++r) {
      if (r == row) continue;
      const Rational f = columns[c][r];
      if (f.is_zero()) continue;
      for (std::size_t cc = c; cc < ncols; ++cc) columns[cc][r] -= f * columns[cc][row];
      rhs[r] -= f * rhs[row];
    }
    pivot_col_of_row[row] = c;
    ++row;
  }
  for (std::size_t r = row; r < dim; ++r) {
    if (!rhs[r].is_zero()) return std::nullopt;
  }
  QVector x(ncols, Rational(0));
  for (std::size_t r = 0; r < row; ++r) x[pivot_col_of_row[r]] = rhs[r];
  return x;
}

std::optional<std::vector<QVector>> invert_rational_matrix(const std::vector<QVector>& rows) {
  const std::size_t n = rows.size();
  std::vector<QVector> aug(n, QVector(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    assert(rows[i].size() == n);
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = rows[i][j];
    aug[i][n + i] = Rational(1);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = n;
    for (std::size_t r = c; r < n; ++r) {
      if (aug[r][c].is_zero()) continue;
      if (best == n || aug[r][c].abs() < aug[best][c].abs()) best = r;
    }
    if (best == n) return std::nullopt;
    std::swap(aug[c], aug[best]);
    const Rational inv = aug[c][c].inverse();
    for (auto& q : aug[c]) q *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const Rational f = aug[r][c];
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < 2 * n; ++j) aug[r][j] -= f * aug[c][j];
    }
  }
  std::vector<QVector> inv(n, QVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

}  // namespace nilcayley
