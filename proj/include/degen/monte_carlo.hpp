#pragma once

#include <cstddef>
#include <cstdint>

#include "degen/random_variable.hpp"

namespace degen {

struct McConfig {
  std::uint64_t seed = 0;
  std::size_t samples = 200000;
  RandomVariable law = RandomVariable::deterministic(Rational(1));
  /// 0 means thread_count(); the estimate does not depend on it.
  unsigned threads = 0;
};

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

/// Sample mean of (Y_i)_{n,lambda}; requires n <= 8.
McEstimate mc_degenerate_moment(const McConfig& cfg, int n, const Rational& lambda);

/// Sample mean of (Y_1 + ... + Y_k)_{m,lambda}; requires k <= 6 and m <= 6.
McEstimate mc_sum_moment(const McConfig& cfg, int k, int m, const Rational& lambda);

/// (exact - estimate) / std_error; 0 when both agree exactly, infinite when
/// std_error is 0 and they differ.
double z_score(const McEstimate& e, const Rational& exact);

}  // namespace degen
