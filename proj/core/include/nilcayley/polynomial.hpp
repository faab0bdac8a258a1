#pragma once

#include <optional>
#include <sstream>
#include <vector>

#include "nilcayley/matrix.hpp"
#include "nilcayley/ring.hpp"

namespace nilcayley {

/// Polynomial in one central indeterminate with ring coefficients.
/// coeffs[i] is the coefficient of x^i; empty means zero, and the leading
/// coefficient of a nonzero polynomial is nonzero. Since x is central,
/// multiplication is the order-preserving convolution: the coefficient of
/// x^c in p*q is sum_{i+j=c} p_i q_j with p's factor on the left.
template <typename E>
struct CentralPoly {
  std::vector<E> coeffs;
};

template <RingBackend B>
CentralPoly<typename B::Element> poly_zero(const B&) {
  return {};
}

template <RingBackend B>
CentralPoly<typename B::Element> poly_constant(const B& ring, typename B::Element c) {
  CentralPoly<typename B::Element> p;
  if (!ring.is_zero(c)) p.coeffs.push_back(std::move(c));
  return p;
}

template <RingBackend B>
CentralPoly<typename B::Element> poly_x(const B& ring) {
  CentralPoly<typename B::Element> p;
  p.coeffs = {ring.zero(), ring.one()};
  return p;
}

template <typename E>
int poly_degree(const CentralPoly<E>& p) {
  return static_cast<int>(p.coeffs.size()) - 1;  // -1 for the zero polynomial
}

template <RingBackend B>
void poly_trim(const B& ring, CentralPoly<typename B::Element>& p) {
  while (!p.coeffs.empty() && ring.is_zero(p.coeffs.back())) p.coeffs.pop_back();
}

template <RingBackend B>
CentralPoly<typename B::Element> poly_add(const B& ring, const CentralPoly<typename B::Element>& p,
                                          const CentralPoly<typename B::Element>& q) {
  CentralPoly<typename B::Element> out;
  const std::size_t n = std::max(p.coeffs.size(), q.coeffs.size());
  out.coeffs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < p.coeffs.size() && i < q.coeffs.size()) {
      out.coeffs.push_back(ring.add(p.coeffs[i], q.coeffs[i]));
    } else if (i < p.coeffs.size()) {
      out.coeffs.push_back(p.coeffs[i]);
    } else {
      out.coeffs.push_back(q.coeffs[i]);
    }
  }
  poly_trim(ring, out);
  return out;
}

template <RingBackend B>
CentralPoly<typename B::Element> poly_neg(const B& ring, const CentralPoly<typename B::Element>& p) {
  CentralPoly<typename B::Element> out = p;
  for (auto& c : out.coeffs) c = ring.neg(c);
  return out;
}

template <RingBackend B>
CentralPoly<typename B::Element> poly_sub(const B& ring, const CentralPoly<typename B::Element>& p,
                                          const CentralPoly<typename B::Element>& q) {
  return poly_add(ring, p, poly_neg(ring, q));
}

template <RingBackend B>
CentralPoly<typename B::Element> poly_scale(const B& ring, const Rational& s,
                                            const CentralPoly<typename B::Element>& p) {
  CentralPoly<typename B::Element> out = p;
  for (auto& c : out.coeffs) c = ring.scale(s, c);
  poly_trim(ring, out);
  return out;
}

template <RingBackend B>
CentralPoly<typename B::Element> poly_mul(const B& ring, const CentralPoly<typename B::Element>& p,
                                          const CentralPoly<typename B::Element>& q) {
  CentralPoly<typename B::Element> out;
  if (p.coeffs.empty() || q.coeffs.empty()) return out;
  out.coeffs.assign(p.coeffs.size() + q.coeffs.size() - 1, ring.zero());
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    if (ring.is_zero(p.coeffs[i])) continue;
    for (std::size_t j = 0; j < q.coeffs.size(); ++j)
      out.coeffs[i + j] = ring.add(out.coeffs[i + j], ring.mul(p.coeffs[i], q.coeffs[j]));
  }
  poly_trim(ring, out);
  return out;
}

template <RingBackend B>
bool poly_equal(const B& ring, const CentralPoly<typename B::Element>& p,
                const CentralPoly<typename B::Element>& q) {
  if (p.coeffs.size() != q.coeffs.size()) return false;
  for (std::size_t i = 0; i < p.coeffs.size(); ++i)
    if (!ring.equal(p.coeffs[i], q.coeffs[i])) return false;
  return true;
}

template <RingBackend B>
std::string poly_to_string(const B& ring, const CentralPoly<typename B::Element>& p) {
  if (p.coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    if (ring.is_zero(p.coeffs[i])) continue;
    if (!first) os << " + ";
    os << "(" << ring.to_string(p.coeffs[i]) << ")";
    if (i == 1) os << "*x";
    if (i > 1) os << "*x^" << i;
    first = false;
  }
  return os.str();
}

/// Right substitution of a matrix: sum_i A^i (c_i I), coefficients on the
/// right of the powers. Evaluated Horner-style, which is exact because only
/// associativity is used.
template <RingBackend B>
RingMatrix<typename B::Element> poly_eval_right(const B& ring,
                                                const RingMatrix<typename B::Element>& a,
                                                const CentralPoly<typename B::Element>& p) {
  auto acc = mat_filled(ring, a.size());
  for (std::size_t idx = p.coeffs.size(); idx-- > 0;) {
    acc = mat_mul(ring, a, acc);
    for (std::size_t i = 0; i < a.size(); ++i)
      acc.at(i, i) = ring.add(acc.at(i, i), p.coeffs[idx]);
  }
  return acc;
}

/// Left substitution sum_i (c_i I) A^i. Kept for cross-checks; the theory
/// here is right-sided.
template <RingBackend B>
RingMatrix<typename B::Element> poly_eval_left(const B& ring,
                                               const RingMatrix<typename B::Element>& a,
                                               const CentralPoly<typename B::Element>& p) {
  auto acc = mat_filled(ring, a.size());
  for (std::size_t idx = p.coeffs.size(); idx-- > 0;) {
    acc = mat_mul(ring, acc, a);
    for (std::size_t i = 0; i < a.size(); ++i)
      acc.at(i, i) = ring.add(acc.at(i, i), p.coeffs[idx]);
  }
  return acc;
}

/// R[x] as a ring backend over the coefficient backend.
template <RingBackend B>
class PolyRing {
public:
  using Element = CentralPoly<typename B::Element>;

  explicit PolyRing(const B& base) : base_(&base) {}

  const B& base() const { return *base_; }

  Element zero() const { return {}; }
  Element one() const { return poly_constant(*base_, base_->one()); }
  Element add(const Element& a, const Element& b) const { return poly_add(*base_, a, b); }
  Element sub(const Element& a, const Element& b) const { return poly_sub(*base_, a, b); }
  Element neg(const Element& a) const { return poly_neg(*base_, a); }
  Element mul(const Element& a, const Element& b) const { return poly_mul(*base_, a, b); }
  Element scale(const Rational& q, const Element& a) const { return poly_scale(*base_, q, a); }
  bool is_zero(const Element& a) const { return a.coeffs.empty(); }
  bool equal(const Element& a, const Element& b) const { return poly_equal(*base_, a, b); }
  std::vector<Element> generators() const {
    std::vector<Element> out;
    out.push_back(poly_x(*base_));
    for (const auto& g : base_->generators()) out.push_back(poly_constant(*base_, g));
    return out;
  }
  std::optional<Element> symbol(const std::string& name) const {
    if (auto s = base_->symbol(name)) return poly_constant(*base_, *s);
    return std::nullopt;
  }
  std::string to_string(const Element& a) const { return poly_to_string(*base_, a); }
  std::string name() const { return base_->name() + "[x]"; }

private:
  const B* base_;
};

}  // namespace nilcayley
