#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "frege/errors.hpp"

namespace frege {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision fraction, always in canonical form:
/// denominator > 0 and gcd(|num|, den) == 1. Comparisons, floor and ceil
/// are exact; there is no rounding mode anywhere in the engine.
///
/// Thin value wrapper over boost cpp_rational, which maintains the
/// canonical form after every operation.
class Rational {
public:
  Rational() : value_(0) {}
  Rational(int v) : value_(v) {}                 // NOLINT: implicit by design
  Rational(std::int64_t v) : value_(v) {}        // NOLINT
  Rational(const BigInt& v) : value_(v) {}       // NOLINT
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    if (den < 0)
      value_ = boost::multiprecision::cpp_rational(-num, -den);
    else
      value_ = boost::multiprecision::cpp_rational(num, den);
  }

  BigInt num() const { return numerator(value_); }
  BigInt den() const { return denominator(value_); }

  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const { return denominator(value_) == 1; }
  int sign() const { return value_.sign(); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw ValidationError("rational division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  /// Decimal approximation, display only; exact values stay authoritative.
  double to_double() const { return value_.convert_to<double>(); }

private:
  boost::multiprecision::cpp_rational value_;
};

/// rat(a, b): canonical reduced fraction; rat(ka, kb) == rat(a, b) for k > 0.
inline Rational rat(const BigInt& num, const BigInt& den) { return Rational(num, den); }

/// Largest integer <= x.
BigInt floor_int(const Rational& x);
/// Smallest integer >= x; ceil(x) == -floor(-x).
BigInt ceil_int(const Rational& x);

Rational abs(const Rational& x);

/// "num/den" for non-integers, plain "num" otherwise (machine formats use
/// this form verbatim).
std::string to_fraction_string(const Rational& x);

/// Parses "a/b", "a", or a plain decimal like "0.5" (exactly, as a/10^k).
Rational parse_rational(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Rational& x);

} // namespace frege
