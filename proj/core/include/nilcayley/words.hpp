#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilcayley/structure_algebra.hpp"

namespace nilcayley {

/// A word over the alphabet {1..m}: the monomial basis of the free
/// associative algebra. The empty word is the unit; degree is the length.
using Word = std::vector<std::uint8_t>;

/// Indexing of all words of degree <= d over m letters, in graded
/// lexicographic order (degree first, then lex, first letter most
/// significant). Indices are dense in [0, count()).
class WordBasis {
public:
  WordBasis(int m, int d);

  int letter_count() const { return m_; }
  int truncation_degree() const { return d_; }
  std::size_t count() const { return offsets_[static_cast<std::size_t>(d_) + 1]; }

  int degree(std::uint32_t index) const;
  Word word(std::uint32_t index) const;
  std::uint32_t index(const Word& w) const;
  /// Concatenation, or nullopt when the result exceeds the truncation degree.
  std::optional<std::uint32_t> concat(std::uint32_t a, std::uint32_t b) const;

  /// Letter names: x, y, z, w for m <= 4, otherwise x1..xm.
  std::string letter_name(int letter) const;  // 1-based
  std::string label(std::uint32_t index) const;

private:
  int m_;
  int d_;
  std::vector<std::size_t> offsets_;  // offsets_[j] = number of words of degree < j
};

/// Product in the degree-<= d truncated free algebra: concatenation with
/// every word of degree > d mapped to zero. Operands and result are sparse
/// coordinate vectors over the word basis.
SparseQVec truncated_free_mul(const WordBasis& basis, const SparseQVec& a, const SparseQVec& b);

SparseQVec word_vec_add(const SparseQVec& a, const SparseQVec& b);
SparseQVec word_vec_sub(const SparseQVec& a, const SparseQVec& b);

}  // namespace nilcayley
