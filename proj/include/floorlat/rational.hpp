#pragma once

// Exact rational scalars over GMP integers.
//
// Every shift, offset and floor argument in the library is carried as a
// Rational; nothing in the counting paths ever touches floating point.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace floorlat {

using Integer = mpz_class;

/// Raised when an operation's documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Signed fraction kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long value) : num_(value), den_(1) {}  // NOLINT: implicit by design of arithmetic
  Rational(int value) : num_(value), den_(1) {}   // NOLINT
  explicit Rational(Integer value) : num_(std::move(value)), den_(1) {}
  Rational(Integer numerator, Integer denominator);
  Rational(long numerator, long denominator)
      : Rational(Integer(numerator), Integer(denominator)) {}

  /// Accepts "p", "p/q" or a decimal "d.ddd", each with an optional sign.
  /// Decimals are read as exact fractions over a power of ten.
  static Rational parse(std::string_view text);

  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return sgn(num_); }

  /// Canonical "p/q" form; integers print as "p/1".
  std::string to_string() const;

  /// Nearest double. Only meant for the asymptotics boundary.
  double to_double() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void normalize();

  Integer num_;
  Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// Floor division of integers, rounding toward negative infinity.
Integer floor_div(const Integer& a, const Integer& b);

/// Greatest integer <= x.
Integer floor_rational(const Rational& x);

/// Least integer >= x.
Integer ceil_rational(const Rational& x);

/// x - floor(x), always in [0, 1).
Rational fractional_part(const Rational& x);

/// floor(x / y) without building the reduced quotient.
Integer floor_quotient(const Rational& x, const Rational& y);

/// floor((n - nu) / k + alpha) for 1 <= k <= n and alpha, nu in [0, 1).
Integer shifted_floor_term(std::int64_t n, std::int64_t k, const Rational& alpha,
                           const Rational& nu);

/// True iff ceil(d * a) == b for some positive integer d. Requires a > 0 and
/// b >= 1.
bool really_divides(const Rational& a, const Integer& b);

/// Integer square root of a non-negative value.
Integer isqrt(const Integer& n);
std::uint64_t isqrt(std::uint64_t n);

/// Checks 0 <= x < 1, naming the parameter in the error.
void require_unit_interval(const Rational& x, std::string_view name);

}  // namespace floorlat
