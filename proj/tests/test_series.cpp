#include <doctest.h>

#include <random>
#include <stdexcept>

#include "degen/series.hpp"
#include "support.hpp"

using degen::Rational;
using degen::Series;

namespace {

Series of(std::initializer_list<Rational> c) { return Series(std::vector<Rational>(c)); }

Series exp_t(int order) {
  std::vector<Rational> ones(static_cast<std::size_t>(order) + 1, Rational(1));
  return Series::from_egf(ones);
}

// Bernoulli numbers from sum_{k=0}^{n} C(n+1,k) B_k = 0.
std::vector<Rational> bernoulli_numbers(int n) {
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  b[0] = Rational(1);
  for (int m = 1; m <= n; ++m) {
    Rational s;
    for (int k = 0; k < m; ++k) s += degen::binomial_int(m + 1, k) * b[k];
    b[m] = -s / Rational(m + 1);
  }
  return b;
}

// Plain Cauchy product written out independently of Series::operator*.
std::vector<Rational> cauchy(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= i; ++j) c[i] += a[j] * b[i - j];
  }
  return c;
}

}  // namespace

TEST_CASE("series ring operations") {
  CHECK((of({1, 1, 0}) * of({1, -1, 0})) == of({1, 0, -1}));
  const Series a = of({Rational(1, 2), 3, Rational(-2, 7)});
  CHECK(a + Series(2) == a);
  const Series e = exp_t(3);
  CHECK(e * e == of({1, 2, 2, Rational(4, 3)}));
  // Mixed orders truncate to the smaller one.
  CHECK((exp_t(5) * exp_t(3)).order() == 3);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const Series x = testing::random_series(rng, 8, testing::random_rational(rng));
    const Series y = testing::random_series(rng, 8, testing::random_rational(rng));
    const Series xy = x * y;
    CHECK(std::vector<Rational>(xy.coefficients().begin(), xy.coefficients().end()) ==
          cauchy(x, y));
  }
}

TEST_CASE("series division") {
  const Series t = Series::monomial(Rational(1), 1, 5);
  const Series q = t / (exp_t(5) - Series::constant(Rational(1), 5));
  CHECK(q.order() == 4);
  CHECK(q == of({1, Rational(-1, 2), Rational(1, 12), 0, Rational(-1, 720)}));
  const auto b = bernoulli_numbers(4);
  for (int n = 0; n <= 4; ++n) CHECK(q.extract_egf(n) == b[n]);
  CHECK(q.extract_egf(2) == Rational(1, 6));

  const Series a = of({2, 3, 5});
  CHECK(a / Series::constant(Rational(1), 2) == a);
  CHECK(Series::constant(Rational(1), 3) / of({1, -1, 0, 0}) == of({1, 1, 1, 1}));

  CHECK_THROWS_AS(a / Series(2), std::domain_error);
  CHECK_THROWS_AS(a / t.truncated(2), std::domain_error);
}

TEST_CASE("exp and log") {
  const Series t = Series::monomial(Rational(1), 1, 3);
  CHECK(series_exp(t) == of({1, 1, Rational(1, 2), Rational(1, 6)}));
  CHECK(series_log(Series::constant(Rational(1), 3) + t) ==
        of({0, 1, Rational(-1, 2), Rational(1, 3)}));
  CHECK_THROWS_AS(series_exp(of({1, 1})), std::domain_error);
  CHECK_THROWS_AS(series_log(of({2, 1})), std::domain_error);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    const Series a = testing::random_series(rng, 10, Rational(0));
    const Series b = testing::random_series(rng, 10, Rational(0));
    CHECK(series_exp(a + b) == series_exp(a) * series_exp(b));
    CHECK(series_log(series_exp(a)) == a);
  }
}

TEST_CASE("rational powers") {
  const Series u = of({1, 1, 0});
  CHECK(series_pow(u, Rational(1, 2)) == of({1, Rational(1, 2), Rational(-1, 8)}));
  CHECK(series_pow(u, Rational(0)) == Series::constant(Rational(1), 2));
  CHECK(series_pow(u, Rational(1)) == u);
  CHECK_THROWS_AS(series_pow(of({2, 1}), Rational(1, 2)), std::domain_error);

  std::mt19937_64 rng(9);
  for (int i = 0; i < 30; ++i) {
    const Series a = testing::random_series(rng, 8, Rational(1));
    const Rational r = testing::random_rational(rng);
    CHECK(series_pow(a, r) == series_exp(r * series_log(a)));
    const int e = static_cast<int>(rng() % 6);
    CHECK(series_pow(a, e) == series_pow(a, Rational(e)));
  }
}

TEST_CASE("coefficient access") {
  CHECK(exp_t(6).extract_egf(5) == Rational(1));
  CHECK(of({1, Rational(-1, 2)}).coefficient(1) == Rational(-1, 2));
  CHECK_THROWS_AS(of({1, 2}).coefficient(2), std::out_of_range);
  CHECK_THROWS_AS(of({1, 2}).coefficient(-1), std::out_of_range);
  CHECK(of({0, 0, 3}).valuation() == 2);
  CHECK(Series(4).is_zero());
  CHECK(of({1, 2, 3}).shifted(1) == of({0, 1, 2}));
}
