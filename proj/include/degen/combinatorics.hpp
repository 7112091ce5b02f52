#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "degen/rational.hpp"
#include "degen/series.hpp"

namespace degen {

enum class StirlingKind { first, second, degenerate_second, probabilistic_second };

std::string to_string(StirlingKind kind);
StirlingKind parse_stirling_kind(const std::string& text);

/// Triangular table T(n, k), 0 <= k <= n <= n_max.
struct StirlingTable {
  StirlingKind kind = StirlingKind::second;
  std::optional<Rational> lambda;
  int n_max = 0;
  std::vector<std::vector<Rational>> entries;

  /// T(n, k); zero outside the triangle, std::out_of_range beyond n_max.
  Rational operator()(int n, int k) const;
};

/// Falling factorial (x)_n = x (x - 1) ... (x - n + 1).
Rational falling_factorial(const Rational& x, int n);

/// Degenerate falling factorial (x)_{n,lambda} = x (x - lambda) ... (x - (n-1) lambda).
Rational degenerate_falling(const Rational& x, int n, const Rational& lambda);

/// (x)_{k,lambda} / k!.
Rational degenerate_binomial(const Rational& x, int k, const Rational& lambda);

/// Signed Stirling numbers of the first kind: (x)_n = sum_k S1(n,k) x^k.
Rational stirling1(int n, int k);
/// Stirling numbers of the second kind.
Rational stirling2(int n, int k);

/// The degenerate exponential e_lambda^x(t) = sum_n (x)_{n,lambda} t^n / n!.
Series degenerate_exp_series(const Rational& x, const Rational& lambda, int order);

/// T(n, k) = n! [t^n] g(t)^k / k! for a series g with zero constant term,
/// for all 0 <= k <= n <= n_max. g.order() must be at least n_max.
std::vector<std::vector<Rational>> partition_table(const Series& g, int n_max);

/// Degenerate Stirling numbers of the second kind, from the generating
/// function (e_lambda(t) - 1)^k / k!.
Rational degenerate_stirling2(int n, int k, const Rational& lambda);

/// Memoized table builder for the first, second and degenerate-second kinds.
std::shared_ptr<const StirlingTable> stirling_table(StirlingKind kind, int n_max,
                                                    const Rational& lambda = Rational(0));

/// phi_{n,lambda}(x) = sum_k {n brace k}_lambda x^k.
Rational degenerate_bell(int n, const Rational& x, const Rational& lambda);

/// B_{k,n}(x|lambda) = C(n,k) (x)_{k,lambda} (1-x)_{n-k,lambda}; throws
/// std::invalid_argument unless 0 <= k <= n.
Rational degenerate_bernstein(int k, int n, const Rational& x, const Rational& lambda);

/// C(n,k) x^k (1-x)^{n-k}.
Rational classical_bernstein(int k, int n, const Rational& x);

}  // namespace degen
