#include <doctest.h>

#include <random>
#include <stdexcept>

#include "degen/combinatorics.hpp"
#include "support.hpp"

using degen::Rational;
using degen::StirlingKind;

namespace {

// {n+1, k}_l = {n, k-1}_l + (k - n l) {n, k}_l
std::vector<std::vector<Rational>> degenerate_stirling_recurrence(int n_max, const Rational& l) {
  std::vector<std::vector<Rational>> s(static_cast<std::size_t>(n_max) + 1,
                                       std::vector<Rational>(static_cast<std::size_t>(n_max) + 2));
  s[0][0] = Rational(1);
  for (int n = 0; n < n_max; ++n) {
    for (int k = 1; k <= n + 1; ++k) {
      s[n + 1][k] = s[n][k - 1] + (Rational(k) - Rational(n) * l) * s[n][k];
    }
  }
  return s;
}

}  // namespace

TEST_CASE("falling factorials") {
  CHECK(degen::degenerate_falling(Rational(1, 2), 2, Rational(1, 3)) == Rational(1, 12));
  CHECK(degen::degenerate_falling(Rational(5, 7), 0, Rational(2)) == Rational(1));
  CHECK(degen::degenerate_falling(Rational(2), 3, Rational(0)) == Rational(8));
  CHECK(degen::falling_factorial(Rational(5), 3) == Rational(60));
  CHECK(degen::degenerate_binomial(Rational(1), 2, Rational(0)) == Rational(1, 2));
  CHECK(degen::degenerate_binomial(Rational(1, 2), 2, Rational(1, 3)) == Rational(1, 24));
  CHECK(degen::degenerate_binomial(Rational(3), 0, Rational(1, 5)) == Rational(1));
}

TEST_CASE("Stirling numbers") {
  CHECK(degen::stirling1(3, 1) == Rational(2));
  CHECK(degen::stirling1(3, 2) == Rational(-3));
  CHECK(degen::stirling2(4, 2) == Rational(7));
  CHECK(degen::stirling2(3, 3) == Rational(1));
  CHECK(degen::stirling2(2, 5) == Rational(0));
  for (int n = 1; n <= 12; ++n) {
    CHECK(degen::stirling1(n, n) == Rational(1));
    CHECK(degen::stirling2(n, 1) == Rational(1));
  }
  // The two kinds are inverse matrices.
  for (int n = 0; n <= 12; ++n) {
    for (int m = 0; m <= 12; ++m) {
      Rational s;
      for (int k = 0; k <= 12; ++k) s += degen::stirling2(n, k) * degen::stirling1(k, m);
      CHECK(s == Rational(n == m ? 1 : 0));
    }
  }
  // (x)_n = sum_k S1(n,k) x^k
  const Rational x(7, 3);
  for (int n = 0; n <= 10; ++n) {
    Rational s;
    for (int k = 0; k <= n; ++k) s += degen::stirling1(n, k) * pow(x, k);
    CHECK(s == degen::falling_factorial(x, n));
  }
}

TEST_CASE("degenerate Stirling numbers of the second kind") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 5; ++trial) {
    const Rational l = testing::random_rational(rng);
    CHECK(degen::degenerate_stirling2(2, 1, l) == Rational(1) - l);
    const auto oracle = degenerate_stirling_recurrence(10, l);
    for (int n = 0; n <= 10; ++n) {
      for (int k = 0; k <= n; ++k) CHECK(degen::degenerate_stirling2(n, k, l) == oracle[n][k]);
      CHECK(degen::degenerate_stirling2(n, n, l) == Rational(1));
    }
    // (x)_{n,l} = sum_k {n brace k}_l (x)_k
    const Rational x = testing::random_rational(rng);
    for (int n = 0; n <= 8; ++n) {
      Rational s;
      for (int k = 0; k <= n; ++k) {
        s += degen::degenerate_stirling2(n, k, l) * degen::falling_factorial(x, k);
      }
      CHECK(s == degen::degenerate_falling(x, n, l));
    }
  }
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(degen::degenerate_stirling2(n, k, Rational(0)) == degen::stirling2(n, k));
    }
  }
  CHECK(degen::degenerate_stirling2(4, 2, Rational(0)) == Rational(7));
  CHECK(degen::degenerate_stirling2(3, 5, Rational(1, 2)) == Rational(0));
}

TEST_CASE("Stirling tables") {
  const auto t = degen::stirling_table(StirlingKind::degenerate_second, 6, Rational(1, 3));
  CHECK(t->n_max == 6);
  CHECK((*t)(5, 2) == degen::degenerate_stirling2(5, 2, Rational(1, 3)));
  CHECK((*t)(3, 4) == Rational(0));
  CHECK((*t)(3, -1) == Rational(0));
  CHECK_THROWS_AS((*t)(7, 1), std::out_of_range);
  // Memoized: same object for the same key.
  CHECK(t == degen::stirling_table(StirlingKind::degenerate_second, 6, Rational(1, 3)));
  CHECK((*degen::stirling_table(StirlingKind::first, 5))(5, 2) == degen::stirling1(5, 2));
  CHECK(degen::parse_stirling_kind("prob-second") == StirlingKind::probabilistic_second);
  CHECK_THROWS(degen::parse_stirling_kind("third"));
}

TEST_CASE("degenerate Bell polynomials") {
  CHECK(degen::degenerate_bell(0, Rational(3), Rational(1, 2)) == Rational(1));
  CHECK(degen::degenerate_bell(2, Rational(1), Rational(0)) == Rational(2));
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    const Rational x = testing::random_rational(rng);
    const Rational l = testing::random_rational(rng);
    CHECK(degen::degenerate_bell(2, x, l) == (Rational(1) - l) * x + x * x);
  }
  const Rational bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
  for (int n = 0; n < 8; ++n) CHECK(degen::degenerate_bell(n, Rational(1), Rational(0)) == bell[n]);
}

TEST_CASE("degenerate Bernstein polynomials") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 20; ++i) {
    const Rational x = testing::random_rational(rng);
    const Rational l = testing::random_rational(rng);
    CHECK(degen::degenerate_bernstein(1, 2, x, l) == Rational(2) * x * (Rational(1) - x));
    CHECK(degen::degenerate_bernstein(0, 0, x, l) == Rational(1));
  }
  CHECK(degen::degenerate_bernstein(1, 2, Rational(1, 2), Rational(1, 7)) == Rational(1, 2));
  CHECK_THROWS_AS(degen::degenerate_bernstein(3, 2, Rational(1, 2), Rational(0)),
                  std::invalid_argument);
  // lambda = 0 gives the classical basis, which sums to one.
  const Rational x(2, 5);
  for (int n = 0; n <= 10; ++n) {
    Rational s;
    for (int k = 0; k <= n; ++k) {
      const Rational b = degen::degenerate_bernstein(k, n, x, Rational(0));
      CHECK(b == degen::binomial_int(n, k) * pow(x, k) * pow(Rational(1) - x, n - k));
      CHECK(b == degen::classical_bernstein(k, n, x));
      s += b;
    }
    CHECK(s == Rational(1));
  }
}
