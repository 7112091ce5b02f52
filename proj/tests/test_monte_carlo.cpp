#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "degen/combinatorics.hpp"
#include "degen/monte_carlo.hpp"

using degen::McConfig;
using degen::Rational;
using degen::RandomVariable;

namespace {

McConfig config(const char* law, std::uint64_t seed = 1) {
  McConfig c;
  c.law = degen::parse_distribution(law);
  c.seed = seed;
  c.samples = 100000;
  return c;
}

void check_close(const degen::McEstimate& e, const Rational& exact) {
  CAPTURE(e.estimate);
  CAPTURE(e.std_error);
  CHECK(e.std_error > 0.0);
  CHECK(std::abs(degen::z_score(e, exact)) <= 4.0);
}

}  // namespace

TEST_CASE("constant laws are exact") {
  const auto c = config("det:3/2");
  for (int n = 0; n <= 8; ++n) {
    const auto e = degen::mc_degenerate_moment(c, n, Rational(1, 3));
    CHECK(e.std_error == 0.0);
    CHECK(e.estimate == doctest::Approx(
                            degen::degenerate_falling(Rational(3, 2), n, Rational(1, 3)).to_double()));
  }
  const auto k0 = degen::mc_sum_moment(config("poisson:a=2"), 0, 3, Rational(0));
  CHECK(k0.estimate == 0.0);
  CHECK(k0.std_error == 0.0);
  CHECK(degen::mc_sum_moment(config("poisson:a=2"), 0, 0, Rational(0)).estimate == 1.0);
}

TEST_CASE("estimates agree with exact moments") {
  check_close(degen::mc_degenerate_moment(config("bernoulli:p=1/3"), 1, Rational(0)), Rational(1, 3));
  check_close(degen::mc_degenerate_moment(config("poisson:a=2"), 2, Rational(1, 2)), Rational(5));
  check_close(degen::mc_sum_moment(config("bernoulli:p=1/2"), 2, 1, Rational(0)), Rational(1));
  check_close(degen::mc_sum_moment(config("poisson:a=1"), 2, 2, Rational(0)), Rational(6));
  const auto y = degen::parse_distribution("discrete:-1:1/4,1/2:1/4,3:1/2");
  check_close(degen::mc_degenerate_moment(config("discrete:-1:1/4,1/2:1/4,3:1/2"), 3, Rational(1, 2)),
              degen::degenerate_moment(y, 3, Rational(1, 2)));
}

TEST_CASE("estimates are reproducible and thread independent") {
  auto c = config("binomial:m=3,p=1/2", 42);
  c.threads = 1;
  const auto a = degen::mc_sum_moment(c, 3, 4, Rational(1, 2));
  c.threads = 3;
  const auto b = degen::mc_sum_moment(c, 3, 4, Rational(1, 2));
  CHECK(a.estimate == b.estimate);
  CHECK(a.std_error == b.std_error);
  c.seed = 43;
  CHECK(degen::mc_sum_moment(c, 3, 4, Rational(1, 2)).estimate != a.estimate);
}

TEST_CASE("unsupported requests") {
  CHECK_THROWS_AS(degen::mc_degenerate_moment(config("poisson:a=2"), 9, Rational(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(degen::mc_sum_moment(config("poisson:a=2"), 7, 1, Rational(0)),
                  std::invalid_argument);
  McConfig c;
  c.law = RandomVariable::poisson(Rational(60));
  CHECK_THROWS_AS(degen::mc_degenerate_moment(c, 2, Rational(0)), std::invalid_argument);
  c.law = RandomVariable::bernoulli(Rational(3, 2), degen::Domain::formal);
  CHECK_THROWS_AS(degen::mc_degenerate_moment(c, 2, Rational(0)), std::invalid_argument);
}
