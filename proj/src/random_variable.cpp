#include "degen/random_variable.hpp"

#include <charconv>
#include <stdexcept>
#include <tuple>

#include "degen/combinatorics.hpp"
#include "degen/memo.hpp"

namespace degen {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_probability(const Rational& p, Domain domain) {
  if (domain == Domain::checked && (p.sign() < 0 || p > Rational(1))) {
    throw std::invalid_argument("probability " + p.str() + " outside [0, 1]");
  }
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Parses "key=value" pairs separated by commas, in any order.
std::vector<std::pair<std::string, std::string>> parse_params(std::string_view body) {
  std::vector<std::pair<std::string, std::string>> out;
  if (body.empty()) return out;
  for (auto part : split(body, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("expected key=value in '" + std::string(part) + "'");
    }
    out.emplace_back(std::string(part.substr(0, eq)), std::string(part.substr(eq + 1)));
  }
  return out;
}

std::string require_param(const std::vector<std::pair<std::string, std::string>>& params,
                          std::initializer_list<const char*> names, const std::string& law) {
  for (const auto& [k, v] : params) {
    for (const char* n : names) {
      if (k == n) return v;
    }
  }
  throw std::invalid_argument(law + " needs parameter '" + *names.begin() + "'");
}

int parse_int(const std::string& text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("malformed integer '" + text + "'");
  }
  return value;
}

}  // namespace

RandomVariable RandomVariable::deterministic(const Rational& value) {
  return RandomVariable(Deterministic{value}, Domain::checked);
}

RandomVariable RandomVariable::bernoulli(const Rational& p, Domain domain) {
  check_probability(p, domain);
  return RandomVariable(Bernoulli{p}, domain);
}

RandomVariable RandomVariable::binomial(int trials, const Rational& p, Domain domain) {
  if (trials < 1) throw std::invalid_argument("binomial needs a positive number of trials");
  check_probability(p, domain);
  return RandomVariable(Binomial{trials, p}, domain);
}

RandomVariable RandomVariable::poisson(const Rational& alpha, Domain domain) {
  if (domain == Domain::checked && alpha.sign() <= 0) {
    throw std::invalid_argument("Poisson rate " + alpha.str() + " must be positive");
  }
  return RandomVariable(Poisson{alpha}, domain);
}

RandomVariable RandomVariable::finite_discrete(std::vector<Atom> atoms, Domain domain) {
  if (atoms.empty()) throw std::invalid_argument("discrete law needs at least one atom");
  Rational total;
  for (const auto& a : atoms) {
    if (domain == Domain::checked && a.prob.sign() < 0) {
      throw std::invalid_argument("negative atom probability " + a.prob.str());
    }
    total += a.prob;
  }
  if (total != Rational(1)) {
    throw std::invalid_argument("atom probabilities sum to " + total.str() + ", not 1");
  }
  return RandomVariable(FiniteDiscrete{std::move(atoms)}, domain);
}

std::string RandomVariable::family() const {
  return std::visit(overloaded{
                        [](const Deterministic&) { return std::string("det"); },
                        [](const Bernoulli&) { return std::string("bernoulli"); },
                        [](const Binomial&) { return std::string("binomial"); },
                        [](const Poisson&) { return std::string("poisson"); },
                        [](const FiniteDiscrete&) { return std::string("discrete"); },
                    },
                    law_);
}

std::string RandomVariable::str() const {
  return std::visit(
      overloaded{
          [](const Deterministic& d) { return "det:" + d.value.str(); },
          [](const Bernoulli& b) { return "bernoulli:p=" + b.p.str(); },
          [](const Binomial& b) {
            return "binomial:m=" + std::to_string(b.trials) + ",p=" + b.p.str();
          },
          [](const Poisson& p) { return "poisson:a=" + p.alpha.str(); },
          [](const FiniteDiscrete& f) {
            std::string s = "discrete:";
            for (std::size_t i = 0; i < f.atoms.size(); ++i) {
              if (i > 0) s += ",";
              s += f.atoms[i].value.str() + ":" + f.atoms[i].prob.str();
            }
            return s;
          },
      },
      law_);
}

std::optional<std::string> RandomVariable::parameter_name() const {
  return std::visit(overloaded{
                        [](const Bernoulli&) -> std::optional<std::string> { return "p"; },
                        [](const Binomial&) -> std::optional<std::string> { return "p"; },
                        [](const Poisson&) -> std::optional<std::string> { return "alpha"; },
                        [](const auto&) -> std::optional<std::string> { return std::nullopt; },
                    },
                    law_);
}

std::optional<Rational> RandomVariable::parameter() const {
  return std::visit(overloaded{
                        [](const Bernoulli& b) -> std::optional<Rational> { return b.p; },
                        [](const Binomial& b) -> std::optional<Rational> { return b.p; },
                        [](const Poisson& p) -> std::optional<Rational> { return p.alpha; },
                        [](const auto&) -> std::optional<Rational> { return std::nullopt; },
                    },
                    law_);
}

RandomVariable RandomVariable::with_parameter(const Rational& value) const {
  return std::visit(
      overloaded{
          [&](const Bernoulli&) { return bernoulli(value, Domain::formal); },
          [&](const Binomial& b) { return binomial(b.trials, value, Domain::formal); },
          [&](const Poisson&) { return poisson(value, Domain::formal); },
          [&](const auto&) -> RandomVariable {
            throw std::invalid_argument(family() + " has no continuous parameter");
          },
      },
      law_);
}

Rational RandomVariable::moment(int m) const { return raw_moment(*this, m); }

RandomVariable parse_distribution(std::string_view text, Domain domain) {
  const auto colon = text.find(':');
  const std::string name(text.substr(0, colon));
  const std::string_view body =
      colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

  if (name == "det") {
    if (body.empty()) throw std::invalid_argument("det needs a value, e.g. det:1");
    return RandomVariable::deterministic(Rational::parse(body));
  }
  if (name == "discrete") {
    std::vector<Atom> atoms;
    for (auto part : split(body, ',')) {
      const auto c = part.find(':');
      if (c == std::string_view::npos) {
        throw std::invalid_argument("discrete atoms are value:prob, got '" + std::string(part) +
                                    "'");
      }
      atoms.push_back({Rational::parse(part.substr(0, c)), Rational::parse(part.substr(c + 1))});
    }
    return RandomVariable::finite_discrete(std::move(atoms), domain);
  }
  if (name != "bernoulli" && name != "binomial" && name != "poisson") {
    throw std::invalid_argument("unknown law '" + name + "'");
  }
  const auto params = parse_params(body);
  if (name == "bernoulli") {
    return RandomVariable::bernoulli(Rational::parse(require_param(params, {"p"}, name)), domain);
  }
  if (name == "binomial") {
    return RandomVariable::binomial(parse_int(require_param(params, {"m", "n"}, name)),
                                    Rational::parse(require_param(params, {"p"}, name)), domain);
  }
  if (name == "poisson") {
    return RandomVariable::poisson(Rational::parse(require_param(params, {"a", "alpha"}, name)),
                                   domain);
  }
  throw std::invalid_argument("unknown law '" + name + "'");
}

Rational raw_moment(const RandomVariable& y, int m) {
  if (m < 0) throw std::invalid_argument("moment order must be nonnegative");
  if (m == 0) return Rational(1);
  return std::visit(
      overloaded{
          [&](const Deterministic& d) { return pow(d.value, m); },
          [&](const Bernoulli& b) { return b.p; },
          [&](const Binomial& b) {
            Rational s;
            for (int j = 0; j <= std::min(m, b.trials); ++j) {
              s += stirling2(m, j) * falling_factorial(Rational(b.trials), j) * pow(b.p, j);
            }
            return s;
          },
          [&](const Poisson& p) {
            Rational s;
            for (int j = 0; j <= m; ++j) s += stirling2(m, j) * pow(p.alpha, j);
            return s;
          },
          [&](const FiniteDiscrete& f) {
            Rational s;
            for (const auto& a : f.atoms) s += a.prob * pow(a.value, m);
            return s;
          },
      },
      y.law());
}

Rational degenerate_moment(const RandomVariable& y, int n, const Rational& lambda) {
  if (n < 0) throw std::invalid_argument("moment order must be nonnegative");
  Rational s;
  for (int m = 0; m <= n; ++m) {
    const Rational c = stirling1(n, m);
    if (!c.is_zero()) s += c * pow(lambda, n - m) * raw_moment(y, m);
  }
  return s;
}

Series mgf_series(const RandomVariable& y, const Rational& lambda, int order) {
  std::vector<Rational> moments;
  moments.reserve(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) moments.push_back(degenerate_moment(y, n, lambda));
  return Series::from_egf(moments);
}

Series mgf_closed_form(const RandomVariable& y, const Rational& lambda, int order) {
  const Series e = degenerate_exp_series(Rational(1), lambda, order);
  const Series one = Series::constant(Rational(1), order);
  return std::visit(
      overloaded{
          [&](const Deterministic& d) { return degenerate_exp_series(d.value, lambda, order); },
          [&](const Bernoulli& b) { return one + b.p * (e - one); },
          [&](const Binomial& b) { return series_pow(one + b.p * (e - one), b.trials); },
          [&](const Poisson& p) { return series_exp(p.alpha * (e - one)); },
          [&](const FiniteDiscrete& f) {
            Series s(order);
            for (const auto& a : f.atoms) s += a.prob * degenerate_exp_series(a.value, lambda, order);
            return s;
          },
      },
      y.law());
}

std::shared_ptr<const Series> cached_mgf_series(const RandomVariable& y, const Rational& lambda,
                                                int order) {
  using Key = std::tuple<std::string, std::string, int>;
  static MemoCache<Key, Series> cache;
  return cache.get_or_compute(Key{y.str(), lambda.str(), order},
                              [&] { return mgf_series(y, lambda, order); });
}

Rational sum_degenerate_moment(const RandomVariable& y, int k, int m, const Rational& lambda) {
  if (k < 0 || m < 0) throw std::invalid_argument("k and m must be nonnegative");
  const auto mgf = cached_mgf_series(y, lambda, m);
  return series_pow(*mgf, k).extract_egf(m);
}

}  // namespace degen
