#include "nilcayley/words.hpp"

#include <algorithm>
#include <map>

namespace nilcayley {

WordBasis::WordBasis(int m, int d) : m_(m), d_(d) {
  if (m < 1) throw ring_error("word basis: need at least one letter");
  if (d < 0) throw ring_error("word basis: negative truncation degree");
  offsets_.assign(static_cast<std::size_t>(d) + 2, 0);
  std::size_t pow = 1;
  for (int j = 0; j <= d; ++j) {
    offsets_[static_cast<std::size_t>(j) + 1] = offsets_[static_cast<std::size_t>(j)] + pow;
    if (pow > max_algebra_dim() || offsets_[static_cast<std::size_t>(j) + 1] > max_algebra_dim())
      throw ring_error("word basis: word count exceeds guardrail");
    pow *= static_cast<std::size_t>(m);
  }
}

int WordBasis::degree(std::uint32_t index) const {
  for (int j = 0; j <= d_; ++j) {
    if (index < offsets_[static_cast<std::size_t>(j) + 1]) return j;
  }
  throw ring_error("word basis: index out of range");
}

Word WordBasis::word(std::uint32_t index) const {
  const int deg = degree(index);
  std::size_t value = index - offsets_[static_cast<std::size_t>(deg)];
  Word w(static_cast<std::size_t>(deg));
  for (int pos = deg - 1; pos >= 0; --pos) {
    w[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(value % static_cast<std::size_t>(m_) + 1);
    value /= static_cast<std::size_t>(m_);
  }
  return w;
}

std::uint32_t WordBasis::index(const Word& w) const {
  if (static_cast<int>(w.size()) > d_) throw ring_error("word basis: degree exceeds truncation");
  std::size_t value = 0;
  for (std::uint8_t letter : w) {
    if (letter < 1 || letter > m_) throw ring_error("word basis: letter out of range");
    value = value * static_cast<std::size_t>(m_) + (letter - 1);
  }
  return static_cast<std::uint32_t>(offsets_[w.size()] + value);
}

std::optional<std::uint32_t> WordBasis::concat(std::uint32_t a, std::uint32_t b) const {
  const int da = degree(a), db = degree(b);
  if (da + db > d_) return std::nullopt;
  std::size_t pow = 1;
  for (int i = 0; i < db; ++i) pow *= static_cast<std::size_t>(m_);
  const std::size_t va = a - offsets_[static_cast<std::size_t>(da)];
  const std::size_t vb = b - offsets_[static_cast<std::size_t>(db)];
  return static_cast<std::uint32_t>(offsets_[static_cast<std::size_t>(da + db)] + va * pow + vb);
}

std::string WordBasis::letter_name(int letter) const {
  static const char* short_names[] = {"x", "y", "z", "w"};
  if (m_ <= 4) return short_names[letter - 1];
  return "x" + std::to_string(letter);
}

std::string WordBasis::label(std::uint32_t index) const {
  const Word w = word(index);
  if (w.empty()) return "1";
  std::string s;
  for (std::uint8_t letter : w) s += letter_name(letter);
  return s;
}

SparseQVec truncated_free_mul(const WordBasis& basis, const SparseQVec& a, const SparseQVec& b) {
  std::map<std::uint32_t, Rational> acc;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) {
      const auto w = basis.concat(wa, wb);
      if (!w) continue;
      auto [it, inserted] = acc.emplace(*w, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }
  return SparseQVec(acc.begin(), acc.end());
}

namespace {

SparseQVec merge(const SparseQVec& a, const SparseQVec& b, bool subtract) {
  SparseQVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
      ++j;
    } else {
      const Rational c = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
      if (!c.is_zero()) out.emplace_back(a[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseQVec word_vec_add(const SparseQVec& a, const SparseQVec& b) { return merge(a, b, false); }
SparseQVec word_vec_sub(const SparseQVec& a, const SparseQVec& b) { return merge(a, b, true); }

}  // namespace nilcayley
