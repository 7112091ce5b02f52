#include "degen/monte_carlo.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <variant>
#include <vector>

#include "degen/combinatorics.hpp"
#include "degen/parallel.hpp"

namespace degen {

namespace {

// Fixed chunking keeps the result independent of the worker count.
constexpr std::size_t kChunks = 64;
constexpr double kMaxPoissonRate = 50.0;

class Sampler {
 public:
  explicit Sampler(const RandomVariable& y) {
    std::visit(
        [this](const auto& law) {
          using T = std::decay_t<decltype(law)>;
          if constexpr (std::is_same_v<T, Deterministic>) {
            values_ = {law.value.to_double()};
            cumulative_ = {1.0};
          } else if constexpr (std::is_same_v<T, Bernoulli>) {
            set_probability(law.p);
            trials_ = 1;
          } else if constexpr (std::is_same_v<T, Binomial>) {
            set_probability(law.p);
            trials_ = law.trials;
          } else if constexpr (std::is_same_v<T, Poisson>) {
            const double a = law.alpha.to_double();
            if (!(a > 0.0) || a > kMaxPoissonRate) {
              throw std::invalid_argument("Poisson sampling supports 0 < alpha <= 50");
            }
            poisson_rate_ = a;
          } else {
            double acc = 0.0;
            for (const auto& atom : law.atoms) {
              if (atom.prob.sign() < 0) {
                throw std::invalid_argument("cannot sample a law with negative probabilities");
              }
              acc += atom.prob.to_double();
              values_.push_back(atom.value.to_double());
              cumulative_.push_back(acc);
            }
            cumulative_.back() = 1.0;
          }
        },
        y.law());
  }

  template <class Engine>
  double draw(Engine& rng) const {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    if (trials_ > 0) {
      int successes = 0;
      for (int i = 0; i < trials_; ++i) successes += unit(rng) < p_ ? 1 : 0;
      return successes;
    }
    if (poisson_rate_ > 0.0) {
      // Inversion: walk the CDF using P(k) = P(k-1) * alpha / k.
      const double u = unit(rng);
      double pk = std::exp(-poisson_rate_);
      double cdf = pk;
      int k = 0;
      while (u > cdf && pk > 0.0) {
        ++k;
        pk *= poisson_rate_ / k;
        cdf += pk;
      }
      return k;
    }
    if (values_.size() == 1) return values_[0];
    const double u = unit(rng);
    for (std::size_t i = 0; i < cumulative_.size(); ++i) {
      if (u < cumulative_[i]) return values_[i];
    }
    return values_.back();
  }

 private:
  void set_probability(const Rational& p) {
    if (p.sign() < 0 || p > Rational(1)) {
      throw std::invalid_argument("cannot sample with probability " + p.str());
    }
    p_ = p.to_double();
  }

  std::vector<double> values_;
  std::vector<double> cumulative_;
  double p_ = 0.0;
  int trials_ = 0;
  double poisson_rate_ = 0.0;
};

double falling(double y, int n, double lambda) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= y - i * lambda;
  return r;
}

struct Moments {
  double sum = 0.0;
  double sum_sq = 0.0;
};

// Draws `samples` values of f(rng) split over kChunks seeded sub-streams.
template <class Fn>
McEstimate estimate(const McConfig& cfg, Fn&& value_of) {
  if (cfg.samples < 2) throw std::invalid_argument("need at least two samples");
  std::vector<Moments> chunks(kChunks);
  parallel_for(
      kChunks,
      [&](std::size_t c) {
        const std::size_t begin = cfg.samples * c / kChunks;
        const std::size_t end = cfg.samples * (c + 1) / kChunks;
        std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed),
                          static_cast<std::uint32_t>(cfg.seed >> 32U),
                          static_cast<std::uint32_t>(c)};
        std::mt19937_64 rng(seq);
        Moments m;
        for (std::size_t i = begin; i < end; ++i) {
          const double v = value_of(rng);
          m.sum += v;
          m.sum_sq += v * v;
        }
        chunks[c] = m;
      },
      cfg.threads);

  Moments total;
  for (const auto& m : chunks) {
    total.sum += m.sum;
    total.sum_sq += m.sum_sq;
  }
  const double n = static_cast<double>(cfg.samples);
  const double mean = total.sum / n;
  const double var = std::max(0.0, (total.sum_sq - n * mean * mean) / (n - 1.0));
  return {mean, std::sqrt(var / n)};
}

}  // namespace

McEstimate mc_degenerate_moment(const McConfig& cfg, int n, const Rational& lambda) {
  if (n < 0 || n > 8) throw std::invalid_argument("Monte Carlo moments need 0 <= n <= 8");
  if (n == 0) return {1.0, 0.0};
  if (const auto* d = std::get_if<Deterministic>(&cfg.law.law())) {
    return {degenerate_falling(d->value, n, lambda).to_double(), 0.0};
  }
  const Sampler sampler(cfg.law);
  const double l = lambda.to_double();
  return estimate(cfg, [&](std::mt19937_64& rng) { return falling(sampler.draw(rng), n, l); });
}

McEstimate mc_sum_moment(const McConfig& cfg, int k, int m, const Rational& lambda) {
  if (k < 0 || k > 6 || m < 0 || m > 6) {
    throw std::invalid_argument("Monte Carlo sums need 0 <= k <= 6 and 0 <= m <= 6");
  }
  if (m == 0) return {1.0, 0.0};
  if (k == 0) return {0.0, 0.0};
  if (const auto* d = std::get_if<Deterministic>(&cfg.law.law())) {
    return {degenerate_falling(Rational(k) * d->value, m, lambda).to_double(), 0.0};
  }
  const Sampler sampler(cfg.law);
  const double l = lambda.to_double();
  return estimate(cfg, [&](std::mt19937_64& rng) {
    double s = 0.0;
    for (int i = 0; i < k; ++i) s += sampler.draw(rng);
    return falling(s, m, l);
  });
}

double z_score(const McEstimate& e, const Rational& exact) {
  const double diff = exact.to_double() - e.estimate;
  if (e.std_error == 0.0) {
    return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return diff / e.std_error;
}

}  // namespace degen
