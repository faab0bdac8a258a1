#include "nilcayley/ideals.hpp"

#include <algorithm>

namespace nilcayley {

namespace {

QVector mul_basis_left(const StructureAlgebra& alg, std::size_t b, const QVector& v) {
  const std::size_t dim = alg.dim();
  QVector out(dim, Rational(0));
  for (std::size_t j = 0; j < dim; ++j) {
    if (v[j].is_zero()) continue;
    for (const auto& [k, c] : alg.basis_product(b, j)) out[k] += v[j] * c;
  }
  return out;
}

QVector mul_basis_right(const StructureAlgebra& alg, const QVector& v, std::size_t b) {
  const std::size_t dim = alg.dim();
  QVector out(dim, Rational(0));
  for (std::size_t j = 0; j < dim; ++j) {
    if (v[j].is_zero()) continue;
    for (const auto& [k, c] : alg.basis_product(j, b)) out[k] += v[j] * c;
  }
  return out;
}

QVector mul_coords(const StructureAlgebra& alg, const QVector& a, const QVector& b) {
  const std::size_t dim = alg.dim();
  QVector out(dim, Rational(0));
  for (std::size_t i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (b[j].is_zero()) continue;
      const Rational f = a[i] * b[j];
      for (const auto& [k, c] : alg.basis_product(i, j)) out[k] += f * c;
    }
  }
  return out;
}

Subspace close_under_multiplication(const StructureAlgebra& alg, Subspace s) {
  const std::size_t dim = alg.dim();
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<QVector> snapshot = s.rows();
    for (const auto& row : snapshot) {
      for (std::size_t b = 0; b < dim; ++b) {
        if (s.insert(mul_basis_left(alg, b, row))) grew = true;
        if (s.insert(mul_basis_right(alg, row, b))) grew = true;
      }
    }
  }
  return s;
}

}  // namespace

Subspace ideal_generated(const StructureAlgebra& alg, const std::vector<AlgebraElement>& gens) {
  Subspace s(alg.dim());
  for (const auto& g : gens) {
    if (g.data() != alg.data()) throw ring_error("ideal_generated: generator from another algebra");
    s.insert(g.coords());
  }
  return close_under_multiplication(alg, std::move(s));
}

bool is_two_sided_ideal(const StructureAlgebra& alg, const Subspace& s) {
  if (s.ambient() != alg.dim()) return false;
  for (const auto& row : s.rows()) {
    for (std::size_t b = 0; b < alg.dim(); ++b) {
      if (!s.contains(mul_basis_left(alg, b, row))) return false;
      if (!s.contains(mul_basis_right(alg, row, b))) return false;
    }
  }
  return true;
}

Subspace commutator_span(const StructureAlgebra& alg) {
  const std::size_t dim = alg.dim();
  Subspace s(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    QVector ei(dim, Rational(0));
    ei[i] = Rational(1);
    for (std::size_t j = i + 1; j < dim; ++j) {
      QVector v = mul_basis_right(alg, ei, j);  // b_i b_j
      const QVector w = mul_basis_left(alg, j, ei);
      for (std::size_t k = 0; k < dim; ++k) v[k] -= w[k];
      s.insert(std::move(v));
    }
  }
  return s;
}

Subspace left_normed_span(const StructureAlgebra& alg, int k) {
  if (k < 2) throw ring_error("left_normed_span: k must be >= 2");
  const std::size_t dim = alg.dim();
  Subspace s = commutator_span(alg);
  for (int level = 3; level <= k; ++level) {
    Subspace next(dim);
    for (const auto& row : s.rows()) {
      for (std::size_t b = 0; b < dim; ++b) {
        QVector v = mul_basis_right(alg, row, b);
        const QVector w = mul_basis_left(alg, b, row);
        for (std::size_t t = 0; t < dim; ++t) v[t] -= w[t];
        next.insert(std::move(v));
      }
    }
    s = std::move(next);
  }
  return s;
}

Subspace double_commutator_ideal(const StructureAlgebra& alg) {
  Subspace gens = left_normed_span(alg, 3);
  std::vector<AlgebraElement> elems;
  elems.reserve(gens.rank());
  for (const auto& row : gens.rows()) elems.push_back(alg.element(row));
  return ideal_generated(alg, elems);
}

Subspace commutator_ideal(const StructureAlgebra& alg) {
  Subspace gens = commutator_span(alg);
  std::vector<AlgebraElement> elems;
  elems.reserve(gens.rank());
  for (const auto& row : gens.rows()) elems.push_back(alg.element(row));
  return ideal_generated(alg, elems);
}

Subspace jennings_ideal(const StructureAlgebra& alg, int k) {
  if (k < 2) throw ring_error("jennings_ideal: k must be >= 2");
  Subspace gens = left_normed_span(alg, k);
  std::vector<AlgebraElement> elems;
  elems.reserve(gens.rank());
  for (const auto& row : gens.rows()) elems.push_back(alg.element(row));
  return ideal_generated(alg, elems);
}

Subspace ideal_power(const StructureAlgebra& alg, const Subspace& ideal, int s) {
  if (s < 1) throw ring_error("ideal_power: exponent must be >= 1");
  Subspace power = ideal;
  for (int j = 2; j <= s; ++j) {
    Subspace next(alg.dim());
    bool nonzero = false;
    for (const auto& x : power.rows()) {
      for (const auto& y : ideal.rows()) {
        if (next.insert(mul_coords(alg, x, y))) nonzero = true;
      }
    }
    power = std::move(next);
    if (!nonzero) break;  // stays zero from here on
  }
  return power;
}

int minimal_vanishing_exponent(const StructureAlgebra& alg, const Subspace& ideal, int limit) {
  Subspace power = ideal;
  for (int s = 1; s <= limit; ++s) {
    if (power.rank() == 0) return s;
    Subspace next(alg.dim());
    for (const auto& x : power.rows())
      for (const auto& y : ideal.rows()) next.insert(mul_coords(alg, x, y));
    power = std::move(next);
  }
  return 0;
}

QuotientAlgebra::QuotientAlgebra(StructureAlgebra parent, Subspace ideal)
    : parent_(std::move(parent)), ideal_(std::move(ideal)),
      section_(ideal_.non_pivots()),
      quotient_([&] {
        const std::size_t qdim = section_.size();
        if (qdim == 0)
          throw ring_error("quotient: ideal is the whole algebra (no unit survives)");
        std::vector<std::string> labels(qdim);
        for (std::size_t i = 0; i < qdim; ++i) labels[i] = parent_.label(section_[i]);
        // Induced products: multiply the section representatives in the
        // parent, reduce mod the ideal, read off section coordinates.
        std::vector<SparseQVec> table(qdim * qdim);
        for (std::size_t i = 0; i < qdim; ++i) {
          QVector ei(parent_.dim(), Rational(0));
          ei[section_[i]] = Rational(1);
          for (std::size_t j = 0; j < qdim; ++j) {
            QVector ej(parent_.dim(), Rational(0));
            ej[section_[j]] = Rational(1);
            const QVector prod = ideal_.reduce(mul_coords(parent_, ei, ej));
            SparseQVec& out = table[i * qdim + j];
            for (std::size_t k = 0; k < qdim; ++k) {
              if (!prod[section_[k]].is_zero())
                out.emplace_back(static_cast<std::uint32_t>(k), prod[section_[k]]);
            }
          }
        }
        const QVector u = ideal_.reduce(parent_.one().coords());
        QVector unit(qdim);
        for (std::size_t k = 0; k < qdim; ++k) unit[k] = u[section_[k]];
        // Project the parent's generating family.
        std::vector<SparseQVec> gens;
        for (const auto& g : parent_.generators()) {
          const QVector r = ideal_.reduce(g.coords());
          SparseQVec gv;
          for (std::size_t k = 0; k < qdim; ++k) {
            if (!r[section_[k]].is_zero())
              gv.emplace_back(static_cast<std::uint32_t>(k), r[section_[k]]);
          }
          if (!gv.empty()) gens.push_back(std::move(gv));
        }
        return StructureAlgebra::create(std::move(labels), std::move(unit), std::move(table),
                                        parent_.name() + "/I", std::move(gens));
      }()) {}

AlgebraElement QuotientAlgebra::project(const AlgebraElement& parent_elem) const {
  if (parent_elem.data() != parent_.data()) throw ring_error("project: element from another algebra");
  const QVector r = ideal_.reduce(parent_elem.coords());
  QVector out(section_.size());
  for (std::size_t k = 0; k < section_.size(); ++k) out[k] = r[section_[k]];
  return quotient_.element(std::move(out));
}

AlgebraElement QuotientAlgebra::lift(const AlgebraElement& quotient_elem) const {
  if (quotient_elem.data() != quotient_.data()) throw ring_error("lift: element not in the quotient");
  QVector out(parent_.dim(), Rational(0));
  const QVector& c = quotient_elem.coords();
  for (std::size_t k = 0; k < section_.size(); ++k) out[section_[k]] = c[k];
  return parent_.element(std::move(out));
}

AlgebraElement QuotientAlgebra::lift_randomized(const AlgebraElement& quotient_elem,
                                                SampleRng& rng) const {
  AlgebraElement out = lift(quotient_elem);
  for (const auto& row : ideal_.rows()) {
    const long c = rng.uniform(-2, 2);
    if (c == 0) continue;
    out += Rational(c) * parent_.element(row);
  }
  return out;
}

QuotientAlgebra quotient(const StructureAlgebra& alg, const Subspace& ideal) {
  if (!is_two_sided_ideal(alg, ideal)) throw ring_error("quotient: subspace is not a two-sided ideal");
  return QuotientAlgebra(alg, ideal);
}

}  // namespace nilcayley
