#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace degen {

using BigInt = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Backed by GMP's mpq. Every constructor and arithmetic operation leaves the
/// value canonical, so structural equality is value equality. Division by
/// zero throws std::domain_error instead of trapping inside GMP.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}
  Rational(const BigInt& value) : q_(value) {}
  Rational(const BigInt& numerator, const BigInt& denominator);
  Rational(long numerator, long denominator);

  /// Parses "p/q", "p" or "-p/q". Whitespace is not accepted.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Lowest-terms "p/q", or "p" when the denominator is 1.
  std::string str() const;
  double to_double() const { return q_.get_d(); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  Rational operator-() const;

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class q_;
};

/// r^e for any integer e; e < 0 requires r != 0.
Rational pow(const Rational& base, long exponent);

Rational abs(const Rational& r);

/// n! for n >= 0.
Rational factorial(long n);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n >= 0.
/// For n < 0 the generalized (upper-negation) value is returned.
Rational binomial_int(long n, long k);

/// r (r - 1) ... (r - j + 1) / j! for a rational upper argument.
Rational binomial_general(const Rational& r, long j);

}  // namespace degen

template <>
struct std::hash<degen::Rational> {
  std::size_t operator()(const degen::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.str());
  }
};
