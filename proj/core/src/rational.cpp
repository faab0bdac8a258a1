#include "nilcayley/rational.hpp"

#include <cctype>
#include <ostream>

namespace nilcayley {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw ring_error("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw ring_error("empty rational literal");
  std::size_t pos = 0;
  auto scan_int = [&](bool allow_sign) {
    std::size_t start = pos;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      ++digits;
    }
    if (digits == 0) throw ring_error("malformed rational literal: " + std::string(text));
    return std::string(text.substr(start, pos - start));
  };
  std::string num = scan_int(true);
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = scan_int(false);
  }
  if (pos != text.size()) throw ring_error("malformed rational literal: " + std::string(text));
  mpq_class v(num + "/" + den);
  if (sgn(v.get_den()) == 0) throw ring_error("rational with zero denominator: " + std::string(text));
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ring_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw ring_error("inverse of zero");
  return Rational(mpq_class(1 / v_));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace nilcayley
