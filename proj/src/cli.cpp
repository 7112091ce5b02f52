#include "degen/cli.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "degen/combinatorics.hpp"
#include "degen/families.hpp"
#include "degen/json_io.hpp"
#include "degen/monte_carlo.hpp"
#include "degen/random_variable.hpp"
#include "degen/verifier.hpp"

namespace degen::cli {

namespace {

// Thrown for anything the user can fix by changing the command line.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational rational_flag(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

RandomVariable dist_flag(const std::string& text) {
  try {
    return parse_distribution(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--dist: ") + e.what());
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string decimal(double v, int precision) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  std::vector<char> buf(64 + static_cast<std::size_t>(precision));
  std::snprintf(buf.data(), buf.size(), "%.*f", precision, v);
  return buf.data();
}

struct EvalArgs {
  std::string family;
  std::string dist = "det:1";
  std::optional<int> k;
  std::optional<int> n;
  std::optional<int> m;
  std::string x = "0";
  std::string lambda = "0";
  int r = 1;
};

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string(flag) + " is required");
  if (*v < 0) throw UsageError(std::string(flag) + " must be nonnegative");
  return *v;
}

int run_eval(const EvalArgs& a, std::ostream& out) {
  const RandomVariable y = dist_flag(a.dist);
  const Rational x = rational_flag(a.x, "--x");
  const Rational lambda = rational_flag(a.lambda, "--lambda");

  Json query;
  query["dist"] = y.str();
  query["lambda"] = lambda.str();
  Rational value;

  if (a.family == "bernstein") {
    const int k = need(a.k, "--k");
    const int n = need(a.n, "--n");
    if (k > n) throw UsageError("k must not exceed n");
    query["k"] = k;
    query["n"] = n;
    query["x"] = x.str();
    value = FamilyEvaluator(y, lambda, n).bernstein(k, n, x);
  } else if (a.family == "stirling2") {
    const int n = need(a.n, "--n");
    const int k = need(a.k, "--k");
    query["n"] = n;
    query["k"] = k;
    value = k > n ? Rational(0) : prob_degenerate_stirling2(y, n, k, lambda);
  } else if (a.family == "bell") {
    const int n = need(a.n, "--n");
    query["n"] = n;
    query["x"] = x.str();
    value = prob_degenerate_bell(y, n, x, lambda);
  } else if (a.family == "bernoulli") {
    const int n = need(a.n, "--n");
    if (a.r < 0) throw UsageError("--r must be nonnegative");
    query["n"] = n;
    query["x"] = x.str();
    query["r"] = a.r;
    FamilyEvaluator f(y, lambda, std::max(n, a.r));
    if (!f.has_bernoulli_kernel()) throw UsageError("Bernoulli polynomials need E[Y] != 0");
    value = f.bernoulli(n, x, a.r);
  } else if (a.family == "euler") {
    const int n = need(a.n, "--n");
    query["n"] = n;
    query["x"] = x.str();
    value = prob_degenerate_euler(y, n, x, lambda);
  } else if (a.family == "moment") {
    const int n = need(a.n, "--n");
    query["n"] = n;
    value = degenerate_moment(y, n, lambda);
  } else if (a.family == "sum-moment") {
    const int k = need(a.k, "--k");
    const int m = need(a.m, "--m");
    query["k"] = k;
    query["m"] = m;
    value = sum_degenerate_moment(y, k, m, lambda);
  } else {
    throw UsageError("unknown family '" + a.family + "'");
  }

  Json j;
  j["family"] = a.family;
  j["query"] = std::move(query);
  j["value"] = value.str();
  emit(out, j);
  return ok;
}

struct TableArgs {
  std::string kind = "second";
  int n_max = 8;
  std::string lambda = "0";
  std::string dist = "det:1";
  std::string format = "json";
};

int run_table(const TableArgs& a, std::ostream& out) {
  if (a.n_max < 0) throw UsageError("--nmax must be nonnegative");
  StirlingKind kind;
  try {
    kind = parse_stirling_kind(a.kind);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--kind: ") + e.what());
  }
  const Rational lambda = rational_flag(a.lambda, "--lambda");
  std::shared_ptr<const StirlingTable> table;
  if (kind == StirlingKind::probabilistic_second) {
    const FamilyEvaluator f(dist_flag(a.dist), lambda, a.n_max);
    table = std::make_shared<StirlingTable>(f.stirling2_table());
  } else {
    table = stirling_table(kind, a.n_max, lambda);
  }
  if (a.format == "csv") {
    out << to_csv(*table);
  } else {
    Json j = to_json(*table);
    if (kind == StirlingKind::probabilistic_second) j["dist"] = dist_flag(a.dist).str();
    emit(out, j);
  }
  return ok;
}

struct SeriesArgs {
  std::string name;
  std::string dist = "det:1";
  std::string x = "0";
  std::string lambda = "0";
  int order = 8;
  int k = 0;
  int r = 1;
};

int run_series(const SeriesArgs& a, std::ostream& out) {
  if (a.order < 0) throw UsageError("--order must be nonnegative");
  if (a.k < 0 || a.r < 0) throw UsageError("--k and --r must be nonnegative");
  const RandomVariable y = dist_flag(a.dist);
  const Rational x = rational_flag(a.x, "--x");
  const Rational lambda = rational_flag(a.lambda, "--lambda");

  Series s(0);
  if (a.name == "degenerate-exp") {
    s = degenerate_exp_series(x, lambda, a.order);
  } else {
    const FamilyEvaluator f(y, lambda, std::max(a.order, a.r));
    if (a.name == "mgf") {
      s = f.mgf();
    } else if (a.name == "bernstein") {
      s = f.bernstein_series(a.k, x);
    } else if (a.name == "bernoulli") {
      if (!f.has_bernoulli_kernel()) throw UsageError("Bernoulli series needs E[Y] != 0");
      s = f.bernoulli_series(x, a.r);
    } else if (a.name == "euler") {
      s = f.euler_series(x);
    } else if (a.name == "bell") {
      s = f.bell_series(x);
    } else {
      throw UsageError("unknown series '" + a.name + "'");
    }
  }
  if (s.order() < a.order) throw UsageError("series is only available to order " + std::to_string(s.order()));
  s = s.truncated(a.order);

  Json j;
  j["series"] = a.name;
  j["order"] = s.order();
  j["coefficients"] = to_json(s)["coefficients"];
  emit(out, j);
  return ok;
}

struct VerifyArgs {
  std::string theorem;
  bool all = false;
  int n_max = 6;
  std::string dist;
  std::string p;
  std::string alpha;
  std::optional<int> m;
  std::string perturb;
  std::optional<std::uint64_t> perturb_seed;
  std::size_t max_witnesses = 20;
};

std::optional<LawSelection> law_from(const VerifyArgs& a) {
  int given = (a.dist.empty() ? 0 : 1) + (a.alpha.empty() ? 0 : 1) +
              (a.p.empty() && !a.m ? 0 : 1);
  if (given > 1) throw UsageError("give only one of --dist, --alpha, or --p/--m");
  try {
    if (!a.dist.empty()) return parse_law_selection(a.dist);
    if (!a.alpha.empty()) {
      return LawSelection{RandomVariable::poisson(rational_flag(a.alpha, "--alpha")), false};
    }
    if (a.m) {
      if (a.p.empty()) return parse_law_selection("binomial:m=" + std::to_string(*a.m));
      return LawSelection{RandomVariable::binomial(*a.m, rational_flag(a.p, "--p")), false};
    }
    if (!a.p.empty()) {
      return LawSelection{RandomVariable::bernoulli(rational_flag(a.p, "--p")), false};
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  return std::nullopt;
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.n_max < 0) throw UsageError("--nmax must be nonnegative");
  if (a.all == !a.theorem.empty()) throw UsageError("give exactly one of --theorem or --all");

  std::vector<IdentityReport> reports;
  if (a.all) {
    if (!a.dist.empty() || !a.p.empty() || !a.alpha.empty() || a.m || !a.perturb.empty()) {
      throw UsageError("--all uses the default laws and takes no law or perturbation flags");
    }
    reports = verify_all(a.n_max);
  } else {
    TheoremId id;
    try {
      id = parse_theorem_id(a.theorem);
    } catch (const std::exception& e) {
      throw UsageError(std::string("--theorem: ") + e.what());
    }
    VerifyOptions opts;
    opts.n_max = a.n_max;
    opts.max_witnesses = a.max_witnesses;
    if (!a.perturb.empty()) {
      const auto kinds = supported_perturbations(id);
      std::optional<PerturbationKind> kind;
      for (auto k : kinds) {
        if (to_string(k) == a.perturb) kind = k;
      }
      if (!kind) throw UsageError("--perturb: '" + a.perturb + "' is not supported for " + to_string(id));
      opts.perturbation = Perturbation{*kind};
    } else if (a.perturb_seed) {
      opts.perturbation = Perturbation::seeded(id, *a.perturb_seed);
    }

    std::vector<std::optional<LawSelection>> laws;
    if (theorem_is_law_free(id)) {
      laws.emplace_back(std::nullopt);
    } else if (auto law = law_from(a)) {
      if (!theorem_applies(id, law->base)) {
        throw UsageError(to_string(id) + " does not apply to " + law->str());
      }
      laws.emplace_back(std::move(law));
    } else {
      for (auto& l : default_laws(id)) laws.emplace_back(std::move(l));
    }
    for (const auto& law : laws) {
      opts.law = law;
      reports.push_back(verify(id, opts));
    }
  }

  bool all_passed = true;
  for (const auto& r : reports) all_passed = all_passed && r.passed();
  if (reports.size() == 1) {
    emit(out, to_json(reports.front()));
  } else {
    emit(out, to_json(std::span<const IdentityReport>(reports)));
  }
  return all_passed ? ok : verification_failed;
}

struct McArgs {
  std::string dist;
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> m;
  std::string lambda = "0";
  std::size_t samples = 200000;
  std::uint64_t seed = 0;
  int precision = 6;
};

int run_mc(const McArgs& a, std::ostream& out) {
  if (a.precision < 0 || a.precision > 17) throw UsageError("--precision must be in 0..17");
  McConfig cfg;
  cfg.law = dist_flag(a.dist);
  cfg.seed = a.seed;
  cfg.samples = a.samples;
  const Rational lambda = rational_flag(a.lambda, "--lambda");

  McEstimate est;
  Rational exact;
  Json query;
  query["dist"] = cfg.law.str();
  query["lambda"] = lambda.str();
  try {
    if (a.n) {
      if (a.k || a.m) throw UsageError("give either --n or --k with --m");
      est = mc_degenerate_moment(cfg, *a.n, lambda);
      exact = degenerate_moment(cfg.law, *a.n, lambda);
      query["n"] = *a.n;
    } else {
      if (!a.k || !a.m) throw UsageError("give either --n or --k with --m");
      est = mc_sum_moment(cfg, *a.k, *a.m, lambda);
      exact = sum_degenerate_moment(cfg.law, *a.k, *a.m, lambda);
      query["k"] = *a.k;
      query["m"] = *a.m;
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  query["samples"] = cfg.samples;
  query["seed"] = cfg.seed;

  Json j;
  j["query"] = std::move(query);
  j["estimate"] = decimal(est.estimate, a.precision);
  j["stderr"] = decimal(est.std_error, a.precision);
  j["exact"] = exact.str();
  j["z"] = decimal(z_score(est, exact), a.precision);
  emit(out, j);
  return ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact probabilistic degenerate Bernstein polynomials and identity checks",
               "degen-bernstein"};
  app.require_subcommand(1);

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Evaluate one family member");
  eval->add_option("family", ev.family,
                   "bernstein, stirling2, bell, bernoulli, euler, moment, sum-moment")
      ->required();
  eval->add_option("--dist", ev.dist, "Random variable, e.g. poisson:a=3/2")->capture_default_str();
  eval->add_option("--k", ev.k);
  eval->add_option("--n", ev.n);
  eval->add_option("--m", ev.m, "Order of the sum moment");
  eval->add_option("--x", ev.x, "Rational argument (not restricted to [0,1])")
      ->capture_default_str();
  eval->add_option("--lambda", ev.lambda)->capture_default_str();
  eval->add_option("--r", ev.r, "Order of the Bernoulli polynomial")->capture_default_str();

  TableArgs tb;
  auto* table = app.add_subcommand("table", "Dump a Stirling-type triangle");
  table->add_option("--kind", tb.kind, "first, second, degenerate-second, prob-second")
      ->capture_default_str();
  table->add_option("--nmax", tb.n_max)->capture_default_str();
  table->add_option("--lambda", tb.lambda)->capture_default_str();
  table->add_option("--dist", tb.dist, "Law for prob-second")->capture_default_str();
  table->add_option("--format", tb.format)
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  SeriesArgs sr;
  auto* series = app.add_subcommand("series", "Dump a generating function");
  series->add_option("name", sr.name, "mgf, degenerate-exp, bernstein, bernoulli, euler, bell")
      ->required();
  series->add_option("--dist", sr.dist)->capture_default_str();
  series->add_option("--x", sr.x)->capture_default_str();
  series->add_option("--lambda", sr.lambda)->capture_default_str();
  series->add_option("--order", sr.order)->capture_default_str();
  series->add_option("--k", sr.k, "Index of the Bernstein series")->capture_default_str();
  series->add_option("--r", sr.r, "Order of the Bernoulli series")->capture_default_str();

  VerifyArgs vf;
  auto* verify_cmd = app.add_subcommand("verify", "Certify identities on exact grids");
  verify_cmd->add_option("--theorem", vf.theorem, "T2.1 .. T2.11, Eq3-1, Eq4, Eq7, Eq15, Eq16, EulerAltSum");
  verify_cmd->add_flag("--all", vf.all, "Every identity against its default laws");
  verify_cmd->add_option("--nmax", vf.n_max)->capture_default_str();
  verify_cmd->add_option("--dist", vf.dist, "Law; 'bernoulli', 'poisson' or 'binomial:m=3' grid the parameter");
  verify_cmd->add_option("--p", vf.p, "Bernoulli (or binomial with --m) probability");
  verify_cmd->add_option("--alpha", vf.alpha, "Poisson rate");
  verify_cmd->add_option("--m", vf.m, "Binomial trials");
  verify_cmd->add_option("--perturb", vf.perturb, "drop-first-term, drop-last-term, shift-index");
  verify_cmd->add_option("--perturb-seed", vf.perturb_seed, "Pick a supported perturbation from a seed");
  verify_cmd->add_option("--max-witnesses", vf.max_witnesses)->capture_default_str();

  McArgs mc;
  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo check of a degenerate moment");
  mc_cmd->add_option("--dist", mc.dist)->required();
  mc_cmd->add_option("--n", mc.n, "E[(Y)_{n,lambda}], n <= 8");
  mc_cmd->add_option("--k", mc.k, "E[(Y_1+...+Y_k)_{m,lambda}], k <= 6");
  mc_cmd->add_option("--m", mc.m);
  mc_cmd->add_option("--lambda", mc.lambda)->capture_default_str();
  mc_cmd->add_option("--samples", mc.samples)->capture_default_str();
  mc_cmd->add_option("--seed", mc.seed)->capture_default_str();
  mc_cmd->add_option("--precision", mc.precision, "Decimal places")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }

  try {
    if (*eval) return run_eval(ev, out);
    if (*table) return run_table(tb, out);
    if (*series) return run_series(sr, out);
    if (*verify_cmd) return run_verify(vf, out);
    return run_mc(mc, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return usage_error;
}

}  // namespace degen::cli
