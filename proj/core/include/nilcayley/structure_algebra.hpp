#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nilcayley/rational.hpp"
#include "nilcayley/ring.hpp"
#include "nilcayley/subspace.hpp"

namespace nilcayley {

/// Sparse rational vector, entries sorted by index.
using SparseQVec = std::vector<std::pair<std::uint32_t, Rational>>;

class GrassmannAlgebra;
class GrassmannElement;
class StructureAlgebra;

namespace detail {

struct StructureData {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  QVector unit;                        // coordinates of 1
  std::vector<SparseQVec> table;       // table[i * dim + j] = coords of b_i * b_j
  std::vector<SparseQVec> generator_family;
  std::unordered_map<std::string, std::uint32_t> label_index;
  std::string display_name;
};

}  // namespace detail

/// Element of a finite-dimensional associative Q-algebra given by structure
/// constants: a coordinate vector tied to its algebra.
class AlgebraElement {
public:
  AlgebraElement() = default;
  AlgebraElement(std::shared_ptr<const detail::StructureData> alg, QVector coords);

  const QVector& coords() const { return coords_; }
  bool is_zero() const;

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const Rational& q, const AlgebraElement& a);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

  std::string str() const;

  const std::shared_ptr<const detail::StructureData>& data() const { return alg_; }

private:
  std::shared_ptr<const detail::StructureData> alg_;
  QVector coords_;
};

/// Finite-dimensional associative Q-algebra with 1, defined by a basis and
/// structure constants. Associativity and the unit laws are verified on
/// construction (exhaustively up to dimension 40, on 1000 seeded triples
/// above that). Hard dimension guardrail overridable via NILCAYLEY_MAX_DIM.
class StructureAlgebra {
public:
  using Element = AlgebraElement;

  /// generator_family may be empty, in which case the whole basis is used.
  static StructureAlgebra create(std::vector<std::string> labels, QVector unit,
                                 std::vector<SparseQVec> table, std::string display_name,
                                 std::vector<SparseQVec> generator_family = {});

  std::size_t dim() const { return d_->dim; }
  const std::string& label(std::size_t i) const { return d_->labels[i]; }
  Element basis(std::size_t i) const;
  Element element(QVector coords) const;
  const SparseQVec& basis_product(std::size_t i, std::size_t j) const {
    return d_->table[i * d_->dim + j];
  }

  Element zero() const;
  Element one() const;
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element scale(const Rational& q, const Element& a) const { return q * a; }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::vector<Element> generators() const;
  std::optional<Element> symbol(const std::string& name) const;
  std::string to_string(const Element& a) const { return a.str(); }
  std::string name() const { return d_->display_name; }

  bool same_as(const StructureAlgebra& o) const { return d_ == o.d_; }
  const std::shared_ptr<const detail::StructureData>& data() const { return d_; }

  /// Structure-constant JSON: {name, dim, labels, unit, generators, table}
  /// with table as sparse (i, j, k, coefficient-string) quadruples.
  std::string to_json() const;
  static StructureAlgebra from_json(const std::string& text);

private:
  explicit StructureAlgebra(std::shared_ptr<const detail::StructureData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::StructureData> d_;
};

static_assert(RingBackend<StructureAlgebra>);

/// Maximum permitted algebra dimension (default 4096, override with the
/// NILCAYLEY_MAX_DIM environment variable).
std::size_t max_algebra_dim();

/// E_m as a structure-constant algebra of dimension 2^m (dense bound m <= 12).
StructureAlgebra from_grassmann(int m);

/// Convert a Grassmann element into its dense coordinates in from_grassmann(m).
AlgebraElement to_structure_element(const StructureAlgebra& alg, const GrassmannElement& g);

/// The algebra of t x t upper triangular matrices over `base`:
/// basis E_pq (x) b for p <= q, with E_pq b * E_q'r b' = delta_{qq'} E_pr (bb').
StructureAlgebra upper_triangular(const StructureAlgebra& base, int t);

}  // namespace nilcayley
