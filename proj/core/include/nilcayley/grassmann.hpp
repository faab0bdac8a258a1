#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilcayley/rational.hpp"
#include "nilcayley/ring.hpp"

namespace nilcayley {

/// Element of the Grassmann algebra on m anticommuting generators over Q.
///
/// A term maps an m-bit subset mask (the square-free monomial
/// v_{i1}...v_{ir} with i1 < ... < ir) to a nonzero coefficient; the empty
/// mask is the unit. The term map is canonical: equality is map equality.
class GrassmannElement {
public:
  using Terms = std::map<std::uint64_t, Rational>;

  GrassmannElement() : m_(0) {}
  explicit GrassmannElement(int m) : m_(m) {}
  GrassmannElement(int m, Terms terms);

  int generator_count() const { return m_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GrassmannElement operator-() const;
  GrassmannElement& operator+=(const GrassmannElement& o);
  GrassmannElement& operator-=(const GrassmannElement& o);
  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) { return a += b; }
  friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) { return a -= b; }
  friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b);
  friend GrassmannElement operator*(const Rational& q, const GrassmannElement& a);
  friend bool operator==(const GrassmannElement& a, const GrassmannElement& b) {
    return a.m_ == b.m_ && a.terms_ == b.terms_;
  }

  std::string str() const;

private:
  void add_term(std::uint64_t mask, const Rational& coeff);

  int m_;
  Terms terms_;
};

/// Number of adjacent transpositions needed to interleave the sorted index
/// set of `left` past that of `right`; the product sign is (-1)^count.
int grassmann_inversions(std::uint64_t left, std::uint64_t right);

/// The Grassmann algebra E_m as a ring backend, 1 <= m <= 62.
class GrassmannAlgebra {
public:
  using Element = GrassmannElement;

  explicit GrassmannAlgebra(int m);

  int generator_count() const { return m_; }
  /// The generator v_i, 1-based.
  Element generator(int i) const;
  Element monomial(std::uint64_t mask, Rational coeff = Rational(1)) const;

  Element zero() const { return Element(m_); }
  Element one() const { return monomial(0); }
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
  std::string name() const;

private:
  int m_;
};

static_assert(RingBackend<GrassmannAlgebra>);

/// Monomial-by-monomial product: zero when the masks intersect, otherwise
/// the union mask with the interleaving sign.
GrassmannElement gmul(const GrassmannElement& a, const GrassmannElement& b);

}  // namespace nilcayley
