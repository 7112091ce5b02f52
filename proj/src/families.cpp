#include "degen/families.hpp"

#include <stdexcept>

namespace degen {

FamilyEvaluator::FamilyEvaluator(RandomVariable y, Rational lambda, int n_max)
    : y_(std::move(y)),
      lambda_(std::move(lambda)),
      n_max_(n_max),
      euler_kernel_(0) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  const int order = n_max + 2;
  mgf_ = cached_mgf_series(y_, lambda_, order);
  const Series one = Series::constant(Rational(1), order);
  const Series g = *mgf_ - one;

  stirling_.kind = StirlingKind::probabilistic_second;
  stirling_.lambda = lambda_;
  stirling_.n_max = n_max;
  stirling_.entries = partition_table(g, n_max);

  try {
    kernel_ = series_div(Series::monomial(Rational(1), 1, order), g);
  } catch (const std::domain_error& e) {
    kernel_error_ = std::string("t/(E[e_lambda^Y(t)] - 1) does not exist for ") + y_.str() +
                    ": " + e.what();
  }
  if (kernel_) {
    kernel_powers_.reserve(static_cast<std::size_t>(n_max) + 1);
    kernel_powers_.push_back(Series::constant(Rational(1), kernel_->order()));
    for (int r = 1; r <= n_max; ++r) kernel_powers_.push_back(kernel_powers_.back() * *kernel_);
  }
  euler_kernel_ = series_div(Series::constant(Rational(2), order), *mgf_ + one);
}

void FamilyEvaluator::check_index(int n) const {
  if (n < 0 || n > n_max_) {
    throw std::out_of_range("index " + std::to_string(n) + " outside 0.." +
                            std::to_string(n_max_));
  }
}

Series FamilyEvaluator::mgf_power(const Rational& y) const { return series_pow(*mgf_, y); }

Rational FamilyEvaluator::stirling2(int n, int k) const {
  check_index(n);
  return stirling_(n, k);
}

Series FamilyEvaluator::bell_series(const Rational& x) const {
  Series g = *mgf_;
  g[0] = Rational(0);
  return series_exp(x * g);
}

Rational FamilyEvaluator::bell(int n, const Rational& x) const {
  check_index(n);
  return bell_series(x).extract_egf(n);
}

const Series& FamilyEvaluator::kernel_power(int r) const {
  if (!kernel_) throw std::domain_error(kernel_error_);
  if (r < 0) throw std::invalid_argument("Bernoulli order must be nonnegative");
  if (r > n_max_) {
    throw std::out_of_range("Bernoulli order " + std::to_string(r) + " exceeds " +
                            std::to_string(n_max_));
  }
  return kernel_powers_[static_cast<std::size_t>(r)];
}

Series FamilyEvaluator::bernoulli_series(const Rational& x, int r) const {
  return kernel_power(r) * mgf_power(x);
}

Rational FamilyEvaluator::bernoulli(int n, const Rational& x, int r) const {
  check_index(n);
  return bernoulli_series(x, r).extract_egf(n);
}

std::vector<Rational> FamilyEvaluator::bernoulli_row(const Rational& x, int r) const {
  const Series s = bernoulli_series(x, r);
  std::vector<Rational> row;
  row.reserve(static_cast<std::size_t>(n_max_) + 1);
  for (int n = 0; n <= n_max_; ++n) row.push_back(s.extract_egf(n));
  return row;
}

Series FamilyEvaluator::euler_series(const Rational& x) const {
  return euler_kernel_ * mgf_power(x);
}

Rational FamilyEvaluator::euler(int n, const Rational& x) const {
  check_index(n);
  return euler_series(x).extract_egf(n);
}

std::vector<Rational> FamilyEvaluator::euler_row(const Rational& x) const {
  const Series s = euler_series(x);
  std::vector<Rational> row;
  row.reserve(static_cast<std::size_t>(n_max_) + 1);
  for (int n = 0; n <= n_max_; ++n) row.push_back(s.extract_egf(n));
  return row;
}

Series FamilyEvaluator::bernstein_series(int k, const Rational& x) const {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  const Rational c = degenerate_falling(x, k, lambda_) / factorial(k);
  return (c * mgf_power(Rational(1) - x)).shifted(k);
}

Rational FamilyEvaluator::bernstein(int k, int n, const Rational& x) const {
  if (k < 0 || k > n) throw std::invalid_argument("k must not exceed n");
  check_index(n);
  return bernstein_series(k, x).extract_egf(n);
}

std::vector<std::vector<Rational>> FamilyEvaluator::bernstein_table(const Rational& x) const {
  const Series power = mgf_power(Rational(1) - x);
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(n_max_) + 1);
  for (int n = 0; n <= n_max_; ++n) {
    rows[n].resize(static_cast<std::size_t>(n) + 1);
    const Rational nf = factorial(n);
    for (int k = 0; k <= n; ++k) {
      rows[n][k] = degenerate_falling(x, k, lambda_) / factorial(k) * power[n - k] * nf;
    }
  }
  return rows;
}

Rational prob_degenerate_stirling2(const RandomVariable& y, int n, int k, const Rational& lambda) {
  if (n < 0 || k < 0 || k > n) return Rational(0);
  return FamilyEvaluator(y, lambda, n).stirling2(n, k);
}

Rational prob_degenerate_bell(const RandomVariable& y, int n, const Rational& x,
                              const Rational& lambda) {
  return FamilyEvaluator(y, lambda, n).bell(n, x);
}

Rational prob_degenerate_bernoulli(const RandomVariable& y, int n, const Rational& x,
                                   const Rational& lambda, int r) {
  if (n < 0 || r < 0) throw std::invalid_argument("n and r must be nonnegative");
  return FamilyEvaluator(y, lambda, std::max(n, r)).bernoulli(n, x, r);
}

Rational prob_degenerate_euler(const RandomVariable& y, int n, const Rational& x,
                               const Rational& lambda) {
  return FamilyEvaluator(y, lambda, n).euler(n, x);
}

Rational prob_degenerate_bernstein(const RandomVariable& y, int k, int n, const Rational& x,
                                   const Rational& lambda) {
  if (k < 0 || k > n) throw std::invalid_argument("k must not exceed n");
  return FamilyEvaluator(y, lambda, n).bernstein(k, n, x);
}

}  // namespace degen
