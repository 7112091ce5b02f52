#include <doctest.h>

#include <random>
#include <stdexcept>
#include <unordered_set>

#include "degen/rational.hpp"
#include "support.hpp"

using degen::Rational;

TEST_CASE("rational arithmetic and canonical form") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-6, -3).str() == "2");
  CHECK(Rational(3, -9).str() == "-1/3");
  CHECK_THROWS_AS(Rational(1, 3) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("+2/3") == Rational(2, 3));
  CHECK(Rational::parse("123456789012345678901234567890").str() ==
        "123456789012345678901234567890");
  for (const char* bad : {"", "1/", "/2", "a", "1/0", "1.5", "1/2/3", " 1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
  }
}

TEST_CASE("rational string round trip and ordering") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Rational a = testing::random_rational(rng, 1000, 1000);
    CHECK(Rational::parse(a.str()) == a);
    const Rational b = testing::random_rational(rng, 1000, 1000);
    CHECK(((a < b) == (a.to_double() < b.to_double()) || a == b));
  }
}

TEST_CASE("field axioms on random rationals") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Rational a = testing::random_rational(rng);
    const Rational b = testing::random_rational(rng);
    const Rational c = testing::random_rational(rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("pow handles negative exponents") {
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow(Rational(5), 0) == Rational(1));
  CHECK_THROWS_AS(pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("factorial against an iterated product") {
  CHECK(degen::factorial(0) == Rational(1));
  CHECK(degen::factorial(5) == Rational(120));
  Rational p(1);
  for (long i = 1; i <= 12; ++i) p *= Rational(i);
  CHECK(degen::factorial(12) == p);
  CHECK(degen::factorial(12) == Rational(479001600));
  CHECK_THROWS(degen::factorial(-1));
}

TEST_CASE("integer binomials against Pascal's rule") {
  CHECK(degen::binomial_int(4, 2) == Rational(6));
  CHECK(degen::binomial_int(3, 5) == Rational(0));
  CHECK(degen::binomial_int(10, 3) == Rational(120));
  CHECK(degen::binomial_int(5, -1) == Rational(0));
  std::vector<std::vector<Rational>> pascal(21);
  for (int n = 0; n <= 20; ++n) {
    pascal[n].assign(static_cast<std::size_t>(n) + 1, Rational(1));
    for (int k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    for (int k = 0; k <= n; ++k) CHECK(degen::binomial_int(n, k) == pascal[n][k]);
  }
  // Upper negation: C(-n, k) = (-1)^k C(n+k-1, k).
  CHECK(degen::binomial_int(-3, 2) == Rational(6));
  CHECK(degen::binomial_int(-1, 5) == Rational(-1));
}

TEST_CASE("general binomials") {
  CHECK(degen::binomial_general(Rational(1, 2), 2) == Rational(-1, 8));
  CHECK(degen::binomial_general(Rational(7, 3), 0) == Rational(1));
  for (int n = 0; n <= 9; ++n) {
    for (int k = 0; k <= 11; ++k) {
      CHECK(degen::binomial_general(Rational(n), k) == degen::binomial_int(n, k));
    }
  }
}

TEST_CASE("hash is consistent with equality") {
  std::unordered_set<Rational> s{Rational(1, 2), Rational(2, 4), Rational(3)};
  CHECK(s.size() == 2);
}
