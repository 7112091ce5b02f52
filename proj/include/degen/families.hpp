#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "degen/combinatorics.hpp"
#include "degen/random_variable.hpp"
#include "degen/series.hpp"

namespace degen {

/// Values of the probabilistic degenerate families for one random variable
/// and one lambda, up to index n_max. Everything is read off the defining
/// generating functions built from M(t) = E[e_lambda^Y(t)]:
///
///   Stirling   (M - 1)^k / k!
///   Bell       exp(x (M - 1))
///   Bernoulli  (t / (M - 1))^r M^x
///   Euler      2 / (M + 1) M^x
///   Bernstein  (x)_{k,lambda} t^k / k! M^{1-x}
///
/// Construction precomputes everything that does not depend on x. The
/// object is immutable afterwards and may be shared between threads.
class FamilyEvaluator {
 public:
  FamilyEvaluator(RandomVariable y, Rational lambda, int n_max);

  const RandomVariable& variable() const { return y_; }
  const Rational& lambda() const { return lambda_; }
  int n_max() const { return n_max_; }

  /// M(t) truncated at n_max + 2.
  const Series& mgf() const { return *mgf_; }
  /// M^y.
  Series mgf_power(const Rational& y) const;

  /// {n brace k}_{Y,lambda}.
  Rational stirling2(int n, int k) const;
  const StirlingTable& stirling2_table() const { return stirling_; }

  Rational bell(int n, const Rational& x) const;

  /// Whether t / (M - 1) exists, i.e. E[Y] != 0.
  bool has_bernoulli_kernel() const { return kernel_.has_value(); }
  /// beta^{(r,Y)}_{n,lambda}(x); throws std::domain_error without a kernel.
  Rational bernoulli(int n, const Rational& x, int r = 1) const;
  /// beta^{(r,Y)}_{n,lambda}(x) for n = 0..n_max.
  std::vector<Rational> bernoulli_row(const Rational& x, int r = 1) const;

  Rational euler(int n, const Rational& x) const;
  /// E^Y_{n,lambda}(x) for n = 0..n_max.
  std::vector<Rational> euler_row(const Rational& x) const;

  /// B^Y_{k,n}(x|lambda); throws std::invalid_argument unless 0 <= k <= n.
  Rational bernstein(int k, int n, const Rational& x) const;
  /// rows[n][k] = B^Y_{k,n}(x|lambda) for 0 <= k <= n <= n_max.
  std::vector<std::vector<Rational>> bernstein_table(const Rational& x) const;

  /// Generating functions, for inspection and the CLI.
  Series bell_series(const Rational& x) const;
  Series bernoulli_series(const Rational& x, int r = 1) const;
  Series euler_series(const Rational& x) const;
  Series bernstein_series(int k, const Rational& x) const;

 private:
  const Series& kernel_power(int r) const;
  void check_index(int n) const;

  RandomVariable y_;
  Rational lambda_;
  int n_max_;
  std::shared_ptr<const Series> mgf_;
  StirlingTable stirling_;
  std::optional<Series> kernel_;
  std::string kernel_error_;
  std::vector<Series> kernel_powers_;
  Series euler_kernel_;
};

Rational prob_degenerate_stirling2(const RandomVariable& y, int n, int k, const Rational& lambda);
Rational prob_degenerate_bell(const RandomVariable& y, int n, const Rational& x,
                              const Rational& lambda);
Rational prob_degenerate_bernoulli(const RandomVariable& y, int n, const Rational& x,
                                   const Rational& lambda, int r = 1);
Rational prob_degenerate_euler(const RandomVariable& y, int n, const Rational& x,
                               const Rational& lambda);
Rational prob_degenerate_bernstein(const RandomVariable& y, int k, int n, const Rational& x,
                                   const Rational& lambda);

}  // namespace degen
