#pragma once

#include <random>

#include "degen/rational.hpp"
#include "degen/series.hpp"

namespace testing {

// Small random rationals with nonzero denominators.
inline degen::Rational random_rational(std::mt19937_64& rng, long span = 9, long max_den = 7) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, max_den);
  return degen::Rational(num(rng), den(rng));
}

inline degen::Series random_series(std::mt19937_64& rng, int order, const degen::Rational& c0) {
  std::vector<degen::Rational> c(static_cast<std::size_t>(order) + 1);
  c[0] = c0;
  for (int i = 1; i <= order; ++i) c[i] = random_rational(rng);
  return degen::Series(std::move(c));
}

}  // namespace testing
