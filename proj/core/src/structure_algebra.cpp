#include "nilcayley/structure_algebra.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nilcayley/grassmann.hpp"

namespace nilcayley {

namespace {

QVector dense_from_sparse(std::size_t dim, const SparseQVec& v) {
  QVector out(dim, Rational(0));
  for (const auto& [i, c] : v) out[i] = c;
  return out;
}

void accumulate(QVector& acc, const SparseQVec& v, const Rational& factor) {
  if (factor.is_zero()) return;
  for (const auto& [i, c] : v) acc[i] += factor * c;
}

QVector multiply_coords(const detail::StructureData& d, const QVector& a, const QVector& b) {
  QVector out(d.dim, Rational(0));
  for (std::size_t i = 0; i < d.dim; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < d.dim; ++j) {
      if (b[j].is_zero()) continue;
      accumulate(out, d.table[i * d.dim + j], a[i] * b[j]);
    }
  }
  return out;
}

}  // namespace

AlgebraElement::AlgebraElement(std::shared_ptr<const detail::StructureData> alg, QVector coords)
    : alg_(std::move(alg)), coords_(std::move(coords)) {
  if (!alg_ || coords_.size() != alg_->dim)
    throw ring_error("algebra element: coordinate length mismatch");
}

bool AlgebraElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q.is_zero(); });
}

AlgebraElement AlgebraElement::operator-() const {
  QVector c(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) c[i] = -coords_[i];
  return AlgebraElement(alg_, std::move(c));
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (alg_ != o.alg_) throw ring_error("algebra element: mixed algebras");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (alg_ != o.alg_) throw ring_error("algebra element: mixed algebras");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.alg_ != b.alg_) throw ring_error("algebra element: mixed algebras");
  return AlgebraElement(a.alg_, multiply_coords(*a.alg_, a.coords_, b.coords_));
}

AlgebraElement operator*(const Rational& q, const AlgebraElement& a) {
  QVector c(a.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = q * a.coords_[i];
  return AlgebraElement(a.alg_, std::move(c));
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.alg_ == b.alg_ && a.coords_ == b.coords_;
}

std::string AlgebraElement::str() const {
  bool all_zero = true;
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Rational& c = coords_[i];
    if (c.is_zero()) continue;
    all_zero = false;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    const std::string& lab = alg_->labels[i];
    if (lab == "1") {
      os << mag.str();
    } else if (mag.is_one()) {
      os << lab;
    } else {
      os << mag.str() << "*" << lab;
    }
  }
  return all_zero ? "0" : os.str();
}

std::size_t max_algebra_dim() {
  if (const char* env = std::getenv("NILCAYLEY_MAX_DIM")) {
    const long v = std::atol(env);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return 4096;
}

StructureAlgebra StructureAlgebra::create(std::vector<std::string> labels, QVector unit,
                                          std::vector<SparseQVec> table, std::string display_name,
                                          std::vector<SparseQVec> generator_family) {
  auto d = std::make_shared<detail::StructureData>();
  d->dim = labels.size();
  if (d->dim == 0) throw ring_error("structure algebra: empty basis");
  if (d->dim > max_algebra_dim())
    throw ring_error("structure algebra: dimension " + std::to_string(d->dim) +
                     " exceeds guardrail " + std::to_string(max_algebra_dim()));
  if (unit.size() != d->dim || table.size() != d->dim * d->dim)
    throw ring_error("structure algebra: inconsistent sizes");
  d->labels = std::move(labels);
  d->unit = std::move(unit);
  d->table = std::move(table);
  d->display_name = std::move(display_name);
  if (generator_family.empty()) {
    for (std::uint32_t i = 0; i < d->dim; ++i)
      generator_family.push_back({{i, Rational(1)}});
  }
  d->generator_family = std::move(generator_family);
  for (std::uint32_t i = 0; i < d->dim; ++i) d->label_index.emplace(d->labels[i], i);

  // Unit laws on every basis vector.
  for (std::size_t i = 0; i < d->dim; ++i) {
    QVector ei(d->dim, Rational(0));
    ei[i] = Rational(1);
    if (multiply_coords(*d, d->unit, ei) != ei || multiply_coords(*d, ei, d->unit) != ei)
      throw ring_error("structure algebra: unit law fails at basis " + d->labels[i]);
  }
  // Associativity on basis triples.
  auto check_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
    QVector ij = dense_from_sparse(d->dim, d->table[i * d->dim + j]);
    QVector jk = dense_from_sparse(d->dim, d->table[j * d->dim + k]);
    QVector ek(d->dim, Rational(0));
    ek[k] = Rational(1);
    QVector ei(d->dim, Rational(0));
    ei[i] = Rational(1);
    if (multiply_coords(*d, ij, ek) != multiply_coords(*d, ei, jk))
      throw ring_error("structure algebra: associativity fails on a basis triple");
  };
  if (d->dim <= 40) {
    for (std::size_t i = 0; i < d->dim; ++i)
      for (std::size_t j = 0; j < d->dim; ++j)
        for (std::size_t k = 0; k < d->dim; ++k) check_triple(i, j, k);
  } else {
    SampleRng rng(0x5eedu);
    for (int s = 0; s < 1000; ++s) {
      const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(d->dim - 1)));
      const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(d->dim - 1)));
      const auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(d->dim - 1)));
      check_triple(i, j, k);
    }
  }
  return StructureAlgebra(std::move(d));
}

AlgebraElement StructureAlgebra::basis(std::size_t i) const {
  QVector c(d_->dim, Rational(0));
  c.at(i) = Rational(1);
  return AlgebraElement(d_, std::move(c));
}

AlgebraElement StructureAlgebra::element(QVector coords) const {
  return AlgebraElement(d_, std::move(coords));
}

AlgebraElement StructureAlgebra::zero() const {
  return AlgebraElement(d_, QVector(d_->dim, Rational(0)));
}

AlgebraElement StructureAlgebra::one() const { return AlgebraElement(d_, d_->unit); }

std::vector<AlgebraElement> StructureAlgebra::generators() const {
  std::vector<AlgebraElement> out;
  out.reserve(d_->generator_family.size());
  for (const auto& g : d_->generator_family)
    out.push_back(AlgebraElement(d_, dense_from_sparse(d_->dim, g)));
  return out;
}

std::optional<AlgebraElement> StructureAlgebra::symbol(const std::string& name) const {
  auto it = d_->label_index.find(name);
  if (it == d_->label_index.end()) return std::nullopt;
  return basis(it->second);
}

std::string StructureAlgebra::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = d_->display_name;
  j["dim"] = d_->dim;
  j["labels"] = d_->labels;
  nlohmann::ordered_json unit = nlohmann::ordered_json::array();
  for (const auto& q : d_->unit) unit.push_back(q.str());
  j["unit"] = unit;
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const auto& g : d_->generator_family) {
    nlohmann::ordered_json gv = nlohmann::ordered_json::array();
    for (const auto& [i, c] : g) gv.push_back(nlohmann::ordered_json::array({i, c.str()}));
    gens.push_back(gv);
  }
  j["generators"] = gens;
  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < d_->dim; ++i)
    for (std::size_t jj = 0; jj < d_->dim; ++jj)
      for (const auto& [k, c] : d_->table[i * d_->dim + jj])
        table.push_back(nlohmann::ordered_json::array({i, jj, k, c.str()}));
  j["table"] = table;
  return j.dump(2);
}

StructureAlgebra StructureAlgebra::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  const std::size_t dim = j.at("dim").get<std::size_t>();
  std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
  if (labels.size() != dim) throw ring_error("structure json: labels/dim mismatch");
  QVector unit;
  for (const auto& s : j.at("unit")) unit.push_back(Rational::parse(s.get<std::string>()));
  std::vector<SparseQVec> table(dim * dim);
  for (const auto& entry : j.at("table")) {
    const auto i = entry.at(0).get<std::size_t>();
    const auto jj = entry.at(1).get<std::size_t>();
    const auto k = entry.at(2).get<std::uint32_t>();
    if (i >= dim || jj >= dim || k >= dim) throw ring_error("structure json: index out of range");
    table[i * dim + jj].emplace_back(k, Rational::parse(entry.at(3).get<std::string>()));
  }
  for (auto& row : table)
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SparseQVec> gens;
  if (j.contains("generators")) {
    for (const auto& g : j.at("generators")) {
      SparseQVec gv;
      for (const auto& e : g) gv.emplace_back(e.at(0).get<std::uint32_t>(), Rational::parse(e.at(1).get<std::string>()));
      gens.push_back(std::move(gv));
    }
  }
  std::string name = j.value("name", std::string("imported"));
  return create(std::move(labels), std::move(unit), std::move(table), std::move(name), std::move(gens));
}

StructureAlgebra from_grassmann(int m) {
  if (m < 1 || m > 12) throw ring_error("from_grassmann: m must be in [1, 12]");
  const std::size_t dim = std::size_t{1} << m;
  std::vector<std::string> labels(dim);
  for (std::size_t mask = 0; mask < dim; ++mask) {
    if (mask == 0) {
      labels[mask] = "1";
      continue;
    }
    std::string s;
    for (int i = 0; i < m; ++i) {
      if (mask & (std::size_t{1} << i)) s += "v" + std::to_string(i + 1);
    }
    labels[mask] = s;
  }
  QVector unit(dim, Rational(0));
  unit[0] = Rational(1);
  std::vector<SparseQVec> table(dim * dim);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      if ((a & b) != 0) continue;
      const bool negative = grassmann_inversions(a, b) % 2 != 0;
      table[a * dim + b].emplace_back(static_cast<std::uint32_t>(a | b),
                                      negative ? Rational(-1) : Rational(1));
    }
  }
  std::vector<SparseQVec> gens;
  for (int i = 0; i < m; ++i)
    gens.push_back({{static_cast<std::uint32_t>(std::size_t{1} << i), Rational(1)}});
  return StructureAlgebra::create(std::move(labels), std::move(unit), std::move(table),
                                  "grassmann:" + std::to_string(m), std::move(gens));
}

AlgebraElement to_structure_element(const StructureAlgebra& alg, const GrassmannElement& g) {
  QVector coords(alg.dim(), Rational(0));
  for (const auto& [mask, c] : g.terms()) {
    if (mask >= alg.dim()) throw ring_error("to_structure_element: mask out of range");
    coords[mask] = c;
  }
  return alg.element(std::move(coords));
}

StructureAlgebra upper_triangular(const StructureAlgebra& base, int t) {
  if (t < 1) throw ring_error("upper_triangular: t must be >= 1");
  const std::size_t bd = base.dim();
  std::vector<std::pair<int, int>> pairs;
  for (int p = 1; p <= t; ++p)
    for (int q = p; q <= t; ++q) pairs.emplace_back(p, q);
  const std::size_t dim = pairs.size() * bd;
  if (dim > max_algebra_dim())
    throw ring_error("upper_triangular: dimension exceeds guardrail");

  auto slot = [&](std::size_t pair_idx, std::size_t b) { return pair_idx * bd + b; };

  std::vector<std::string> labels(dim);
  for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
    const auto [p, q] = pairs[pi];
    for (std::size_t b = 0; b < bd; ++b) {
      std::string cell = "e" + std::to_string(p) + std::to_string(q);
      labels[slot(pi, b)] = base.label(b) == "1" ? cell : cell + base.label(b);
    }
  }

  QVector unit(dim, Rational(0));
  const QVector base_unit = base.one().coords();
  for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
    if (pairs[pi].first != pairs[pi].second) continue;
    for (std::size_t b = 0; b < bd; ++b) unit[slot(pi, b)] = base_unit[b];
  }

  std::vector<std::size_t> pair_index(static_cast<std::size_t>(t + 1) * (t + 1), pairs.size());
  for (std::size_t pi = 0; pi < pairs.size(); ++pi)
    pair_index[static_cast<std::size_t>(pairs[pi].first) * (t + 1) + pairs[pi].second] = pi;

  std::vector<SparseQVec> table(dim * dim);
  for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
    for (std::size_t pj = 0; pj < pairs.size(); ++pj) {
      if (pairs[pi].second != pairs[pj].first) continue;  // E_pq E_q'r = 0 unless q = q'
      const std::size_t target = pair_index[static_cast<std::size_t>(pairs[pi].first) * (t + 1) +
                                            pairs[pj].second];
      for (std::size_t a = 0; a < bd; ++a) {
        for (std::size_t b = 0; b < bd; ++b) {
          SparseQVec& out = table[slot(pi, a) * dim + slot(pj, b)];
          for (const auto& [k, c] : base.basis_product(a, b))
            out.emplace_back(static_cast<std::uint32_t>(slot(target, k)), c);
        }
      }
    }
  }

  // Generating family: the matrix units E_pq (x) 1 plus the diagonal
  // embeddings of the base generators.
  std::vector<SparseQVec> gens;
  for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
    SparseQVec g;
    for (std::size_t b = 0; b < bd; ++b) {
      if (!base_unit[b].is_zero())
        g.emplace_back(static_cast<std::uint32_t>(slot(pi, b)), base_unit[b]);
    }
    gens.push_back(std::move(g));
  }
  for (const auto& bg : base.generators()) {
    SparseQVec g;
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
      if (pairs[pi].first != pairs[pi].second) continue;
      const QVector& coords = bg.coords();
      for (std::size_t b = 0; b < bd; ++b) {
        if (!coords[b].is_zero())
          g.emplace_back(static_cast<std::uint32_t>(slot(pi, b)), coords[b]);
      }
    }
    std::sort(g.begin(), g.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    gens.push_back(std::move(g));
  }

  return StructureAlgebra::create(std::move(labels), std::move(unit), std::move(table),
                                  "utri:" + std::to_string(t) + ":" + base.name(),
                                  std::move(gens));
}

}  // namespace nilcayley
