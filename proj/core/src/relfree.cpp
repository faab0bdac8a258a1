#include "nilcayley/relfree.hpp"

#include <algorithm>

namespace nilcayley {

namespace {

QVector dense_of(std::size_t dim, const SparseQVec& v) {
  QVector out(dim, Rational(0));
  for (const auto& [i, c] : v) out[i] = c;
  return out;
}

SparseQVec sparse_of(const QVector& v) {
  SparseQVec out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  }
  return out;
}

SparseQVec word_commutator(const WordBasis& basis, const SparseQVec& a, const SparseQVec& b) {
  return word_vec_sub(truncated_free_mul(basis, a, b), truncated_free_mul(basis, b, a));
}

/// Left-normed commutator of single words given by indices.
SparseQVec left_normed_words(const WordBasis& basis, const std::vector<std::uint32_t>& ws) {
  SparseQVec acc = {{ws[0], Rational(1)}};
  for (std::size_t i = 1; i < ws.size(); ++i) {
    acc = word_commutator(basis, acc, SparseQVec{{ws[i], Rational(1)}});
  }
  return acc;
}

}  // namespace

RelFreeAlgebra::RelFreeAlgebra(int m, int k, int d)
    : m_(m), k_(k), d_(d), words_(m, d), relations_(words_.count()),
      algebra_([&]() -> StructureAlgebra {
        if (k < 2) throw ring_error("relfree: index must be >= 2");
        const std::size_t count = words_.count();

        // Relation spanning set: u [w1,...,w_{k+1}] v over nonempty words
        // w_i and (possibly empty) padding words u, v, total degree <= d.
        // Nonempty words suffice: the commutator is multilinear and kills
        // unit components.
        std::vector<std::uint32_t> tuple(static_cast<std::size_t>(k) + 1);
        auto pad_and_insert = [&](const SparseQVec& c, int used_degree) {
          const int room = d - used_degree;
          for (int pu = 0; pu <= room; ++pu) {
            for (std::uint32_t u = static_cast<std::uint32_t>(pu == 0 ? 0 : words_.index(Word(static_cast<std::size_t>(pu), 1)));
                 u < words_.count() && words_.degree(u) == pu; ++u) {
              const SparseQVec uc = truncated_free_mul(words_, SparseQVec{{u, Rational(1)}}, c);
              for (int pv = 0; pv + pu <= room; ++pv) {
                for (std::uint32_t v = static_cast<std::uint32_t>(pv == 0 ? 0 : words_.index(Word(static_cast<std::size_t>(pv), 1)));
                     v < words_.count() && words_.degree(v) == pv; ++v) {
                  relations_.insert(dense_of(count, truncated_free_mul(words_, uc, SparseQVec{{v, Rational(1)}})));
                }
              }
            }
          }
        };
        auto enumerate = [&](auto&& self, std::size_t pos, int degree_left) -> void {
          if (pos == tuple.size()) {
            const SparseQVec c = left_normed_words(words_, tuple);
            if (!c.empty()) pad_and_insert(c, d - degree_left);
            return;
          }
          const int remaining = static_cast<int>(tuple.size() - pos);
          for (int deg = 1; deg + (remaining - 1) <= degree_left; ++deg) {
            const std::uint32_t first = words_.index(Word(static_cast<std::size_t>(deg), 1));
            for (std::uint32_t w = first; w < words_.count() && words_.degree(w) == deg; ++w) {
              tuple[pos] = w;
              self(self, pos + 1, degree_left - deg);
            }
          }
        };
        enumerate(enumerate, 0, d);

        // Closure sanity: letters generate every word, so it is enough to
        // check stability under letter multiplication on both sides.
        for (const auto& row : relations_.rows()) {
          const SparseQVec srow = sparse_of(row);
          for (int l = 1; l <= m; ++l) {
            const SparseQVec letter{{words_.index(Word{static_cast<std::uint8_t>(l)}), Rational(1)}};
            if (!relations_.contains(dense_of(count, truncated_free_mul(words_, letter, srow))) ||
                !relations_.contains(dense_of(count, truncated_free_mul(words_, srow, letter))))
              throw ring_error("relfree: relation span is not an ideal");
          }
        }

        section_ = relations_.non_pivots();
        const std::size_t qdim = section_.size();
        std::vector<std::size_t> col_to_section(count, qdim);
        for (std::size_t i = 0; i < qdim; ++i) col_to_section[section_[i]] = i;

        std::vector<std::string> labels(qdim);
        for (std::size_t i = 0; i < qdim; ++i)
          labels[i] = words_.label(static_cast<std::uint32_t>(section_[i]));

        std::vector<SparseQVec> table(qdim * qdim);
        for (std::size_t i = 0; i < qdim; ++i) {
          for (std::size_t j = 0; j < qdim; ++j) {
            const auto w = words_.concat(static_cast<std::uint32_t>(section_[i]),
                                         static_cast<std::uint32_t>(section_[j]));
            if (!w) continue;
            QVector prod(count, Rational(0));
            prod[*w] = Rational(1);
            prod = relations_.reduce(std::move(prod));
            SparseQVec& out = table[i * qdim + j];
            for (std::size_t c = 0; c < count; ++c) {
              if (!prod[c].is_zero()) {
                if (col_to_section[c] == qdim)
                  throw ring_error("relfree: reduction left a pivot coordinate");
                out.emplace_back(static_cast<std::uint32_t>(col_to_section[c]), prod[c]);
              }
            }
          }
        }

        QVector unit(qdim, Rational(0));
        if (col_to_section[0] == qdim) throw ring_error("relfree: unit word was quotiented away");
        unit[col_to_section[0]] = Rational(1);

        std::vector<SparseQVec> gens;
        for (int l = 1; l <= m; ++l) {
          const std::uint32_t w = words_.index(Word{static_cast<std::uint8_t>(l)});
          if (col_to_section[w] == qdim) throw ring_error("relfree: letter was quotiented away");
          gens.push_back({{static_cast<std::uint32_t>(col_to_section[w]), Rational(1)}});
        }

        StructureAlgebra alg = StructureAlgebra::create(
            std::move(labels), std::move(unit), std::move(table),
            "relfree:" + std::to_string(m) + "," + std::to_string(k) + "," + std::to_string(d),
            std::move(gens));

        // Index exactness: some left-normed k-fold commutator of letters
        // survives the quotient whenever d >= k and m >= 2.
        if (m >= 2 && d >= k) {
          bool witness = false;
          std::vector<std::uint32_t> letters(static_cast<std::size_t>(k));
          auto scan = [&](auto&& self, std::size_t pos) -> void {
            if (witness) return;
            if (pos == letters.size()) {
              const SparseQVec c = left_normed_words(words_, letters);
              if (!relations_.contains(dense_of(count, c))) witness = true;
              return;
            }
            for (int l = 1; l <= m; ++l) {
              letters[pos] = words_.index(Word{static_cast<std::uint8_t>(l)});
              self(self, pos + 1);
            }
          };
          scan(scan, 0);
          if (!witness)
            throw ring_error("relfree: no nonzero left-normed commutator of length " +
                             std::to_string(k) + "; index is smaller than requested");
        }
        return alg;
      }()) {}

AlgebraElement RelFreeAlgebra::letter(int i) const {
  if (i < 1 || i > m_) throw ring_error("relfree: letter index out of range");
  return algebra_.generators()[static_cast<std::size_t>(i - 1)];
}

SparseQVec RelFreeAlgebra::normal_form(const SparseQVec& v) const {
  return sparse_of(relations_.reduce(dense_of(words_.count(), v)));
}

AlgebraElement RelFreeAlgebra::to_quotient(const SparseQVec& v) const {
  const QVector r = relations_.reduce(dense_of(words_.count(), v));
  QVector out(section_.size());
  for (std::size_t i = 0; i < section_.size(); ++i) out[i] = r[section_[i]];
  return algebra_.element(std::move(out));
}

SparseQVec RelFreeAlgebra::from_quotient(const AlgebraElement& e) const {
  if (e.data() != algebra_.data()) throw ring_error("relfree: element not in this algebra");
  SparseQVec out;
  for (std::size_t i = 0; i < section_.size(); ++i) {
    if (!e.coords()[i].is_zero())
      out.emplace_back(static_cast<std::uint32_t>(section_[i]), e.coords()[i]);
  }
  return out;
}

}  // namespace nilcayley
