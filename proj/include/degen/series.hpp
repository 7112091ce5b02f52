#pragma once

#include <optional>
#include <span>
#include <vector>

#include "degen/rational.hpp"

namespace degen {

/// Truncated formal power series c_0 + c_1 t + ... + c_N t^N over Rational.
///
/// The truncation order N is explicit. Binary operations on series of
/// different orders work at the smaller order, and the result records it.
class Series {
 public:
  /// Zero series of the given order.
  explicit Series(int order);
  /// Coefficients c_0..c_N; must be non-empty.
  explicit Series(std::vector<Rational> coeffs);

  static Series constant(const Rational& c, int order);
  /// c * t^power, truncated at order.
  static Series monomial(const Rational& c, int power, int order);
  /// Series with coefficients values[n] / n!, i.e. the exponential generating
  /// function of the given sequence.
  static Series from_egf(std::span<const Rational> values);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Rational> coefficients() const { return coeffs_; }

  /// Unchecked access for 0 <= i <= order().
  const Rational& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  Rational& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }

  /// Coefficient of t^n; throws std::out_of_range unless 0 <= n <= order().
  const Rational& coefficient(int n) const;
  /// n! times the coefficient of t^n.
  Rational extract_egf(int n) const;

  /// Index of the first nonzero coefficient; empty for the zero series.
  std::optional<int> valuation() const;
  bool is_zero() const { return !valuation().has_value(); }

  Series truncated(int order) const;
  /// Multiplies by t^k (k >= 0) keeping the same order.
  Series shifted(int k) const;

  Series& operator+=(const Series& rhs);
  Series& operator-=(const Series& rhs);
  Series& operator*=(const Series& rhs);
  Series& operator*=(const Rational& c);

  Series operator-() const;

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Series& b) { return a *= b; }
  friend Series operator*(Series a, const Rational& c) { return a *= c; }
  friend Series operator*(const Rational& c, Series a) { return a *= c; }

  friend bool operator==(const Series& a, const Series& b) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Quotient a / b.
///
/// If b has valuation v > 0 the common factor t^v is cancelled first, which
/// requires a to vanish to order v as well; the result then has order
/// min(a.order, b.order) - v. Throws std::domain_error when b is zero to its
/// truncation order or when a's valuation is below b's.
Series series_div(const Series& a, const Series& b);
inline Series operator/(const Series& a, const Series& b) { return series_div(a, b); }

/// exp(a); a must have zero constant term.
Series series_exp(const Series& a);
/// log(a); a must have constant term 1.
Series series_log(const Series& a);

/// a^r for a unit series a (constant term 1) and rational r, computed as the
/// binomial series sum_j C(r, j) (a - 1)^j. Exponents 0 and 1 short-circuit.
Series series_pow(const Series& a, const Rational& r);

/// a^e for a nonnegative integer e, by repeated squaring. Any constant term.
Series series_pow(const Series& a, int e);

}  // namespace degen
