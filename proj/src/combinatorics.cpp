#include "degen/combinatorics.hpp"

#include <stdexcept>
#include <tuple>

#include "degen/memo.hpp"

namespace degen {

std::string to_string(StirlingKind kind) {
  switch (kind) {
    case StirlingKind::first: return "first";
    case StirlingKind::second: return "second";
    case StirlingKind::degenerate_second: return "degenerate-second";
    case StirlingKind::probabilistic_second: return "prob-second";
  }
  return "unknown";
}

StirlingKind parse_stirling_kind(const std::string& text) {
  if (text == "first") return StirlingKind::first;
  if (text == "second") return StirlingKind::second;
  if (text == "degenerate-second") return StirlingKind::degenerate_second;
  if (text == "prob-second") return StirlingKind::probabilistic_second;
  throw std::invalid_argument("unknown table kind '" + text + "'");
}

Rational StirlingTable::operator()(int n, int k) const {
  if (n > n_max) {
    throw std::out_of_range("table index n=" + std::to_string(n) + " exceeds n_max=" +
                            std::to_string(n_max));
  }
  if (n < 0 || k < 0 || k > n) return Rational(0);
  return entries[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Rational falling_factorial(const Rational& x, int n) {
  return degenerate_falling(x, n, Rational(1));
}

Rational degenerate_falling(const Rational& x, int n, const Rational& lambda) {
  if (n < 0) throw std::invalid_argument("falling factorial length must be nonnegative");
  Rational r(1);
  for (int i = 0; i < n; ++i) r *= x - Rational(i) * lambda;
  return r;
}

Rational degenerate_binomial(const Rational& x, int k, const Rational& lambda) {
  return degenerate_falling(x, k, lambda) / factorial(k);
}

Series degenerate_exp_series(const Rational& x, const Rational& lambda, int order) {
  Series s(order);
  Rational falling(1);
  Rational fact(1);
  for (int n = 0; n <= order; ++n) {
    if (n > 0) {
      falling *= x - Rational(n - 1) * lambda;
      fact *= Rational(n);
    }
    s[n] = falling / fact;
  }
  return s;
}

std::vector<std::vector<Rational>> partition_table(const Series& g, int n_max) {
  if (!g[0].is_zero()) throw std::domain_error("partition_table needs g(0) = 0");
  if (g.order() < n_max) throw std::invalid_argument("series order below table size");
  std::vector<std::vector<Rational>> t(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) t[n].assign(static_cast<std::size_t>(n) + 1, Rational(0));

  Series power = Series::constant(Rational(1), n_max);  // g^k / k!
  for (int k = 0; k <= n_max; ++k) {
    if (k > 0) power = power * g.truncated(n_max) * (Rational(1) / Rational(k));
    for (int n = k; n <= n_max; ++n) t[n][k] = power.extract_egf(n);
  }
  return t;
}

namespace {

std::vector<std::vector<Rational>> integer_stirling(StirlingKind kind, int n_max) {
  std::vector<std::vector<Rational>> t(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) t[n].assign(static_cast<std::size_t>(n) + 1, Rational(0));
  t[0][0] = Rational(1);
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      const Rational up = k <= n - 1 ? t[n - 1][k] : Rational(0);
      const Rational diag = t[n - 1][k - 1];
      if (kind == StirlingKind::first) {
        // (x)_n = (x)_{n-1} (x - (n-1))
        t[n][k] = diag - Rational(n - 1) * up;
      } else {
        t[n][k] = Rational(k) * up + diag;
      }
    }
  }
  return t;
}

using TableKey = std::tuple<int, int, std::string>;

MemoCache<TableKey, StirlingTable>& table_cache() {
  static MemoCache<TableKey, StirlingTable> cache;
  return cache;
}

// Single lookups share tables sized in blocks so the cache stays small.
int block_size(int n) { return ((n / 16) + 1) * 16; }

}  // namespace

std::shared_ptr<const StirlingTable> stirling_table(StirlingKind kind, int n_max,
                                                    const Rational& lambda) {
  if (n_max < 0) throw std::invalid_argument("table size must be nonnegative");
  if (kind == StirlingKind::probabilistic_second) {
    throw std::invalid_argument("probabilistic tables depend on a random variable");
  }
  const bool degenerate = kind == StirlingKind::degenerate_second;
  const TableKey key{static_cast<int>(kind), n_max, degenerate ? lambda.str() : std::string()};
  return table_cache().get_or_compute(key, [&] {
    StirlingTable table;
    table.kind = kind;
    table.n_max = n_max;
    if (degenerate) {
      table.lambda = lambda;
      Series g = degenerate_exp_series(Rational(1), lambda, n_max);
      g[0] = Rational(0);
      table.entries = partition_table(g, n_max);
    } else {
      table.entries = integer_stirling(kind, n_max);
    }
    return table;
  });
}

Rational stirling1(int n, int k) {
  if (n < 0 || k < 0 || k > n) return Rational(0);
  return (*stirling_table(StirlingKind::first, block_size(n)))(n, k);
}

Rational stirling2(int n, int k) {
  if (n < 0 || k < 0 || k > n) return Rational(0);
  return (*stirling_table(StirlingKind::second, block_size(n)))(n, k);
}

Rational degenerate_stirling2(int n, int k, const Rational& lambda) {
  if (n < 0 || k < 0 || k > n) return Rational(0);
  return (*stirling_table(StirlingKind::degenerate_second, n, lambda))(n, k);
}

Rational degenerate_bell(int n, const Rational& x, const Rational& lambda) {
  if (n < 0) throw std::invalid_argument("Bell index must be nonnegative");
  const auto table = stirling_table(StirlingKind::degenerate_second, n, lambda);
  Rational sum;
  Rational xk(1);
  for (int k = 0; k <= n; ++k) {
    sum += (*table)(n, k) * xk;
    xk *= x;
  }
  return sum;
}

Rational degenerate_bernstein(int k, int n, const Rational& x, const Rational& lambda) {
  if (k < 0 || n < 0 || k > n) throw std::invalid_argument("k must satisfy 0 <= k <= n");
  return binomial_int(n, k) * degenerate_falling(x, k, lambda) *
         degenerate_falling(Rational(1) - x, n - k, lambda);
}

Rational classical_bernstein(int k, int n, const Rational& x) {
  if (k < 0 || n < 0 || k > n) throw std::invalid_argument("k must satisfy 0 <= k <= n");
  return binomial_int(n, k) * pow(x, k) * pow(Rational(1) - x, n - k);
}

}  // namespace degen
