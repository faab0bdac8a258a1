#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nilcayley/rational.hpp"

namespace nilcayley {

using QVector = std::vector<Rational>;

/// A subspace of Q^ambient kept in reduced row echelon form.
///
/// Rows are nonzero with strictly increasing pivot columns, pivot entries 1,
/// and pivot columns cleared in every other row. The RREF of a row space is
/// unique, so equal subspaces compare equal row by row and the complement
/// (non-pivot) coordinates give a canonical section.
class Subspace {
public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<QVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<std::size_t> non_pivots() const;

  /// Reduces v modulo the row space: the result has zeros at all pivot
  /// columns and is the canonical coset representative of v.
  QVector reduce(QVector v) const;

  bool contains(const QVector& v) const;

  /// Inserts v (reduced) into the basis; returns true iff the rank grew.
  bool insert(QVector v);

  friend bool operator==(const Subspace& a, const Subspace& b);

private:
  std::size_t ambient_;
  std::vector<QVector> rows_;          // RREF rows
  std::vector<std::size_t> pivots_;    // strictly increasing
};

/// Row space of the given spanning set.
Subspace span_of(std::size_t ambient, const std::vector<QVector>& vectors);

/// Solves M x = rhs exactly (M given column-major as dim x dim).
/// Returns std::nullopt when the system is inconsistent; for underdetermined
/// consistent systems an arbitrary solution is returned.
std::optional<QVector> solve_linear(std::vector<QVector> columns, QVector rhs);

/// Inverse of a square rational matrix given as rows; nullopt if singular.
std::optional<std::vector<QVector>> invert_rational_matrix(const std::vector<QVector>& rows);

}  // namespace nilcayley
