#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "degen/rational.hpp"
#include "degen/series.hpp"

namespace degen {

/// Checked models enforce the probabilistic parameter ranges. Formal models
/// only require what keeps the moments well defined, so that identities
/// polynomial in the parameters can be evaluated at arbitrary rationals.
enum class Domain { checked, formal };

struct Deterministic {
  Rational value;
};
struct Bernoulli {
  Rational p;
};
struct Binomial {
  int trials = 1;
  Rational p;
};
struct Poisson {
  Rational alpha;
};
struct Atom {
  Rational value;
  Rational prob;
};
struct FiniteDiscrete {
  std::vector<Atom> atoms;
};

using Law = std::variant<Deterministic, Bernoulli, Binomial, Poisson, FiniteDiscrete>;

class RandomVariable {
 public:
  static RandomVariable deterministic(const Rational& value);
  static RandomVariable bernoulli(const Rational& p, Domain domain = Domain::checked);
  static RandomVariable binomial(int trials, const Rational& p, Domain domain = Domain::checked);
  static RandomVariable poisson(const Rational& alpha, Domain domain = Domain::checked);
  static RandomVariable finite_discrete(std::vector<Atom> atoms, Domain domain = Domain::checked);

  const Law& law() const { return law_; }
  Domain domain() const { return domain_; }

  /// "det", "bernoulli", "binomial", "poisson" or "discrete".
  std::string family() const;
  /// Compact form accepted by parse_distribution, e.g. "binomial:m=4,p=1/3".
  std::string str() const;

  /// Name of the continuous law parameter ("p" or "alpha"), if any.
  std::optional<std::string> parameter_name() const;
  std::optional<Rational> parameter() const;
  /// Copy with the law parameter replaced; the result is a formal model.
  RandomVariable with_parameter(const Rational& value) const;

  Rational mean() const { return moment(1); }
  /// E[Y^m].
  Rational moment(int m) const;

  friend bool operator==(const RandomVariable& a, const RandomVariable& b) {
    return a.str() == b.str();
  }

 private:
  RandomVariable(Law law, Domain domain) : law_(std::move(law)), domain_(domain) {}

  Law law_;
  Domain domain_ = Domain::checked;
};

/// Parses `poisson:a=3/2`, `bernoulli:p=1/3`, `binomial:m=4,p=1/3`,
/// `discrete:0:1/2,2:1/2` and `det:1`.
RandomVariable parse_distribution(std::string_view text, Domain domain = Domain::checked);

/// E[Y^m].
Rational raw_moment(const RandomVariable& y, int m);

/// E[(Y)_{n,lambda}] = sum_m S1(n,m) lambda^{n-m} E[Y^m].
Rational degenerate_moment(const RandomVariable& y, int n, const Rational& lambda);

/// E[e_lambda^Y(t)] = sum_n E[(Y)_{n,lambda}] t^n / n!, built from moments.
Series mgf_series(const RandomVariable& y, const Rational& lambda, int order);

/// The same series from the law's closed form: e_lambda^c(t) for a constant,
/// 1 + p (e_lambda(t) - 1) for Bernoulli, its m-th power for the binomial,
/// exp(alpha (e_lambda(t) - 1)) for Poisson, and sum_i p_i e_lambda^{v_i}(t)
/// for finitely many atoms.
Series mgf_closed_form(const RandomVariable& y, const Rational& lambda, int order);

/// Memoized mgf_series; safe to call concurrently.
std::shared_ptr<const Series> cached_mgf_series(const RandomVariable& y, const Rational& lambda,
                                                int order);

/// E[(S_k)_{m,lambda}] for S_k a sum of k independent copies of Y (S_0 = 0).
Rational sum_degenerate_moment(const RandomVariable& y, int k, int m, const Rational& lambda);

}  // namespace degen
