#pragma once

#include <vector>

#include "nilcayley/structure_algebra.hpp"
#include "nilcayley/subspace.hpp"

namespace nilcayley {

/// Smallest two-sided ideal containing `gens`: span closure under left and
/// right multiplication by every basis element, iterated to a fixed point.
Subspace ideal_generated(const StructureAlgebra& alg, const std::vector<AlgebraElement>& gens);

bool is_two_sided_ideal(const StructureAlgebra& alg, const Subspace& s);

/// Span of all commutators [x, y]; basis pairs suffice by bilinearity.
Subspace commutator_span(const StructureAlgebra& alg);

/// Span of all left-normed k-fold commutators, built incrementally as
/// [span basis, algebra basis] to keep the candidate count linear.
Subspace left_normed_span(const StructureAlgebra& alg, int k);

/// The double commutator ideal R[[R,R],R]R.
Subspace double_commutator_ideal(const StructureAlgebra& alg);

/// The commutator ideal R[R,R]R; the quotient by it is commutative.
Subspace commutator_ideal(const StructureAlgebra& alg);

/// The ideal generated by all left-normed k-fold commutators (k >= 2).
Subspace jennings_ideal(const StructureAlgebra& alg, int k);

/// Span of all products of s elements of I, computed incrementally.
Subspace ideal_power(const StructureAlgebra& alg, const Subspace& ideal, int s);

/// Smallest s <= limit with I^s = 0, or 0 when no such s exists.
int minimal_vanishing_exponent(const StructureAlgebra& alg, const Subspace& ideal, int limit);

/// Quotient of an algebra by a two-sided ideal, with the canonical section
/// determined by the RREF of the ideal: project zeroes the pivot coordinates,
/// lift embeds quotient coordinates at the non-pivot columns.
class QuotientAlgebra {
public:
  QuotientAlgebra(StructureAlgebra parent, Subspace ideal);

  const StructureAlgebra& parent() const { return parent_; }
  const Subspace& ideal() const { return ideal_; }
  /// The quotient as a structure-constant algebra in its own right.
  const StructureAlgebra& algebra() const { return quotient_; }

  AlgebraElement project(const AlgebraElement& parent_elem) const;
  /// The canonical section representative of a quotient element.
  AlgebraElement lift(const AlgebraElement& quotient_elem) const;
  /// Canonical representative shifted by a random ideal member.
  AlgebraElement lift_randomized(const AlgebraElement& quotient_elem, SampleRng& rng) const;

private:
  StructureAlgebra parent_;
  Subspace ideal_;
  std::vector<std::size_t> section_;  // non-pivot parent coordinates
  StructureAlgebra quotient_;
};

/// Quotient by a verified two-sided ideal; throws if `ideal` is not one.
QuotientAlgebra quotient(const StructureAlgebra& alg, const Subspace& ideal);

}  // namespace nilcayley
