#include "nilcayley/grassmann.hpp"

#include <bit>
#include <sstream>

namespace nilcayley {

GrassmannElement::GrassmannElement(int m, Terms terms) : m_(m), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero()) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

void GrassmannElement::add_term(std::uint64_t mask, const Rational& coeff) {
  auto [it, inserted] = terms_.emplace(mask, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GrassmannElement GrassmannElement::operator-() const {
  GrassmannElement out(m_);
  for (const auto& [mask, c] : terms_) out.terms_.emplace(mask, -c);
  return out;
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& o) {
  if (m_ != o.m_) throw ring_error("grassmann: mismatched generator counts");
  for (const auto& [mask, c] : o.terms_) add_term(mask, c);
  return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& o) {
  if (m_ != o.m_) throw ring_error("grassmann: mismatched generator counts");
  for (const auto& [mask, c] : o.terms_) add_term(mask, -c);
  return *this;
}

int grassmann_inversions(std::uint64_t left, std::uint64_t right) {
  int count = 0;
  std::uint64_t rest = right;
  while (rest != 0) {
    const int j = std::countr_zero(rest);
    rest &= rest - 1;
    count += std::popcount(left >> (j + 1));
  }
  return count;
}

GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
  if (a.m_ != b.m_) throw ring_error("grassmann: mismatched generator counts");
  GrassmannElement out(a.m_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if ((ma & mb) != 0) continue;  // repeated generator, v_i^2 = 0
      const Rational c = ca * cb;
      if (grassmann_inversions(ma, mb) % 2 == 0) {
        out.add_term(ma | mb, c);
      } else {
        out.add_term(ma | mb, -c);
      }
    }
  }
  return out;
}

GrassmannElement operator*(const Rational& q, const GrassmannElement& a) {
  GrassmannElement out(a.m_);
  if (q.is_zero()) return out;
  for (const auto& [mask, c] : a.terms_) out.terms_.emplace(mask, q * c);
  return out;
}

GrassmannElement gmul(const GrassmannElement& a, const GrassmannElement& b) { return a * b; }

namespace {

std::string monomial_str(std::uint64_t mask) {
  std::ostringstream os;
  bool first = true;
  while (mask != 0) {
    const int i = std::countr_zero(mask);
    mask &= mask - 1;
    if (!first) os << "*";
    os << "v" << (i + 1);
    first = false;
  }
  return os.str();
}

}  // namespace

std::string GrassmannElement::str() const {
  if (terms_.empty()) return "0";
  // Degree-descending, then mask-ascending: leading terms first.
  std::vector<std::pair<std::uint64_t, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    const int dx = std::popcount(x.first), dy = std::popcount(y.first);
    if (dx != dy) return dx > dy;
    return x.first < y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [mask, c] : sorted) {
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (mask == 0) {
      os << mag.str();
    } else if (mag.is_one()) {
      os << monomial_str(mask);
    } else {
      os << mag.str() << "*" << monomial_str(mask);
    }
  }
  return os.str();
}

GrassmannAlgebra::GrassmannAlgebra(int m) : m_(m) {
  if (m < 1 || m > 62) throw ring_error("grassmann: generator count must be in [1, 62]");
}

GrassmannElement GrassmannAlgebra::generator(int i) const {
  if (i < 1 || i > m_) throw ring_error("grassmann: generator index out of range");
  return monomial(std::uint64_t{1} << (i - 1));
}

GrassmannElement GrassmannAlgebra::monomial(std::uint64_t mask, Rational coeff) const {
  if (m_ < 64 && mask >= (std::uint64_t{1} << m_)) throw ring_error("grassmann: mask out of range");
  GrassmannElement::Terms terms;
  if (!coeff.is_zero()) terms.emplace(mask, std::move(coeff));
  return GrassmannElement(m_, std::move(terms));
}

std::vector<GrassmannElement> GrassmannAlgebra::generators() const {
  std::vector<GrassmannElement> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int i = 1; i <= m_; ++i) out.push_back(generator(i));
  return out;
}

std::optional<GrassmannElement> GrassmannAlgebra::symbol(const std::string& name) const {
  if (name.size() < 2 || name[0] != 'v') return std::nullopt;
  int idx = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return std::nullopt;
    idx = idx * 10 + (name[i] - '0');
    if (idx > m_) return std::nullopt;
  }
  if (idx < 1 || idx > m_ || name[1] == '0') return std::nullopt;
  return generator(idx);
}

std::string GrassmannAlgebra::name() const { return "grassmann:" + std::to_string(m_); }

}  // namespace nilcayley
