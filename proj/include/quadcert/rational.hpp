#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "quadcert/errors.hpp"

namespace quadcert {

using Integer = mpz_class;

// Exact arbitrary-precision fraction. Always kept canonical: denominator > 0
// and gcd(|numerator|, denominator) = 1. No operation ever rounds.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int value) : v_(value) {}
  Rational(long value) : v_(static_cast<signed long>(value)) {}
  Rational(const Integer& value) : v_(value) {}

  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  // Accepts "p", "p/q" (q > 0) and finite decimals like "0.5" or "-1.25".
  // Decimals are converted exactly via their base-10 expansion.
  static Rational from_string(std::string_view text);

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  // "p/q", or just "p" for integers.
  std::string to_string() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
    return s;
  }

  double to_double() const { return v_.get_d(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    return Rational(mpq_class(-a.v_));
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.v_ != b.v_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.v_ <= b.v_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.v_ > b.v_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.v_ >= b.v_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}

  mpq_class v_;
};

inline Rational Rational::from_string(std::string_view text) {
  std::size_t i = 0;
  const auto fail = [&](const std::string& expected) -> Rational {
    throw SyntaxError(i, expected + " in number '" + std::string(text) + "'");
  };

  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }

  const auto digits = [&]() {
    std::string d;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') d += text[i++];
    return d;
  };

  std::string intpart = digits();
  if (i < text.size() && text[i] == '.') {
    ++i;
    std::string fracpart = digits();
    if (fracpart.empty()) return fail("digits after decimal point");
    if (i != text.size()) return fail("end of number");
    Integer num(intpart.empty() ? "0" : intpart);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fracpart.size());
    num = num * scale + Integer(fracpart);
    return Rational(negative ? Integer(-num) : num, scale);
  }
  if (intpart.empty()) return fail("digits");
  Integer num(intpart);
  if (negative) num = -num;
  if (i < text.size() && text[i] == '/') {
    ++i;
    std::string denpart = digits();
    if (denpart.empty() || i != text.size()) return fail("positive integer denominator");
    Integer den(denpart);
    if (den == 0) return fail("positive integer denominator");
    return Rational(num, den);
  }
  if (i != text.size()) return fail("end of number");
  return Rational(num);
}

inline std::string to_string(const Rational& r) { return r.to_string(); }

}  // namespace quadcert
