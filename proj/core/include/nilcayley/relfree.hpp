#pragma once

#include "nilcayley/structure_algebra.hpp"
#include "nilcayley/subspace.hpp"
#include "nilcayley/words.hpp"

namespace nilcayley {

/// Truncated relatively free Lie-nilpotent algebra of index k: the span of
/// words of degree <= d (product = concatenation truncated above d) modulo
/// the two-sided ideal spanned by all padded left-normed (k+1)-fold
/// commutators u [w1,...,w_{k+1}] v of nonempty words.
///
/// Satisfies the index-k vanishing identity exactly by construction; for
/// m >= 2 and d >= k a nonzero left-normed k-fold commutator of letters is
/// verified at build time, so the index is exactly k.
class RelFreeAlgebra {
public:
  RelFreeAlgebra(int m, int k, int d);

  int letter_count() const { return m_; }
  int lie_index() const { return k_; }
  int truncation_degree() const { return d_; }

  const WordBasis& words() const { return words_; }
  /// The relation ideal inside the truncated free word algebra.
  const Subspace& relations() const { return relations_; }
  /// The quotient as a ring backend for all downstream machinery.
  const StructureAlgebra& algebra() const { return algebra_; }

  /// Image of the i-th letter (1-based) in the quotient.
  AlgebraElement letter(int i) const;

  /// Canonical normal form of a word-basis vector: reduction modulo the
  /// relation ideal. Idempotent.
  SparseQVec normal_form(const SparseQVec& v) const;
  /// Normal-form coordinates of a word vector, as a quotient element.
  AlgebraElement to_quotient(const SparseQVec& v) const;
  /// The canonical word-vector representative of a quotient element.
  SparseQVec from_quotient(const AlgebraElement& e) const;

private:
  int m_, k_, d_;
  WordBasis words_;
  Subspace relations_;
  std::vector<std::size_t> section_;
  StructureAlgebra algebra_;
};

}  // namespace nilcayley
