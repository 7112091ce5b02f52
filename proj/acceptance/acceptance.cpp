// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "degen/combinatorics.hpp"
#include "degen/families.hpp"
#include "degen/monte_carlo.hpp"
#include "degen/random_variable.hpp"
#include "degen/series.hpp"
#include "degen/verifier.hpp"
#include "theorems.hpp"

using namespace degen;

namespace {

const char* const kLaws[] = {"det:1", "bernoulli:p=1/3", "binomial:m=3,p=1/2", "poisson:a=2",
                             "discrete:0:1/2,2:1/2"};

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (ok) detail << why;
    ok = false;
  }
};

IdentityReport certify(TheoremId id, const std::optional<std::string>& law, int n_max) {
  VerifyOptions o;
  o.n_max = n_max;
  if (law) o.law = parse_law_selection(*law);
  return verify(id, o);
}

// A report counts only if the stated form itself matched.
void require_stated(Outcome& out, const IdentityReport& r) {
  if (r.verdict != Verdict::pass) {
    out.fail(to_string(r.theorem) + " on " + r.law + " gave " + to_string(r.verdict));
  }
}

std::size_t checks_of(const IdentityReport& r) {
  std::size_t n = 0;
  for (const auto& v : r.variants) n += v.checks;
  return n;
}

// 1: series route against the T2.1 and T2.7 closed forms.
Outcome definitional_consistency() {
  Outcome out;
  std::size_t checks = 0;
  for (const char* law : kLaws) {
    for (auto id : {TheoremId::T2_1, TheoremId::T2_7}) {
      const auto r = certify(id, law, 8);
      require_stated(out, r);
      checks += checks_of(r);
    }
  }
  if (out.ok) out.detail << checks << " exact checks, 5 laws, 0<=k<=n<=8";
  return out;
}

// 2: T2.2 to T2.5.
Outcome explicit_formulas() {
  Outcome out;
  std::size_t checks = 0;
  for (const char* law : kLaws) {
    for (auto id : {TheoremId::T2_2, TheoremId::T2_3, TheoremId::T2_4, TheoremId::T2_5}) {
      const auto r = certify(id, law, 8);
      require_stated(out, r);
      checks += checks_of(r);
    }
  }
  if (out.ok) out.detail << checks << " exact checks, T2.4/T2.5 denominator-cleared";
  return out;
}

// T2.10 and T2.11 are stated for B^Y_{k,n}/k!; bring them to the scale of B^Y_{k,n}.
Rational bernstein_scale(TheoremId id, std::span<const int> idx) {
  return id == TheoremId::T2_10 || id == TheoremId::T2_11 ? factorial(idx[0]) : Rational(1);
}

// Number of points where the stated right-hand sides of (a, ya) and (b, yb) differ.
std::size_t rhs_disagreements(TheoremId a, const RandomVariable& ya, TheoremId b,
                              const RandomVariable& yb, int n_max, std::size_t& compared) {
  const auto& da = detail::theorem_def(a);
  const auto& db = detail::theorem_def(b);
  const auto nodes = grid_nodes(static_cast<std::size_t>(n_max) + 1);
  std::size_t differ = 0;
  for (const auto& l : nodes) {
    const FamilyEvaluator fa(ya, l, n_max + 2);
    const FamilyEvaluator fb(yb, l, n_max + 2);
    for (const auto& x : nodes) {
      detail::NodeData na(&fa, x, l, n_max + 2);
      detail::NodeData nb(&fb, x, l, n_max + 2);
      for (const auto& idx : da.indices(n_max)) {
        const auto ca = da.evaluate(na, idx, 0, detail::RangeEdit{});
        const auto cb = db.evaluate(nb, idx, 0, detail::RangeEdit{});
        ++compared;
        if (!ca || !cb ||
            ca->rhs * bernstein_scale(a, idx) != cb->rhs * bernstein_scale(b, idx)) {
          ++differ;
        }
      }
    }
  }
  return differ;
}

// 3: law-specific theorems and their coincidences.
Outcome special_laws() {
  Outcome out;
  const int n = 8;
  int reports = 0;
  for (const char* a : {"1", "2", "1/2"}) {
    for (auto id : {TheoremId::T2_8, TheoremId::T2_9}) {
      require_stated(out, certify(id, std::string("poisson:a=") + a, n));
      ++reports;
    }
  }
  for (const char* p : {"1/3", "1/2", "1"}) {
    require_stated(out, certify(TheoremId::T2_10, std::string("bernoulli:p=") + p, n));
    ++reports;
  }
  for (const char* law : {"binomial:m=1,p=1/3", "binomial:m=3,p=1/2", "binomial:m=4,p=2/5"}) {
    require_stated(out, certify(TheoremId::T2_11, law, n));
    ++reports;
  }

  const auto& d10 = detail::theorem_def(TheoremId::T2_10);
  if (detail::theorem_def(TheoremId::T2_11).index_names != d10.index_names ||
      detail::theorem_def(TheoremId::T2_1).index_names != d10.index_names) {
    out.fail("index conventions of T2.1, T2.10 and T2.11 differ");
    return out;
  }
  std::size_t compared = 0;
  for (const char* p : {"1/3", "1/2", "2/5"}) {
    const auto ber = parse_distribution(std::string("bernoulli:p=") + p);
    const auto bin = parse_distribution(std::string("binomial:m=1,p=") + p);
    if (rhs_disagreements(TheoremId::T2_11, bin, TheoremId::T2_10, ber, n, compared) != 0) {
      out.fail("T2.11(m=1) differs from T2.10 at p=" + std::string(p));
    }
  }
  if (rhs_disagreements(TheoremId::T2_10, parse_distribution("bernoulli:p=1"), TheoremId::T2_1,
                        parse_distribution("det:1"), n, compared) != 0) {
    out.fail("T2.10(p=1) differs from T2.1 with Y=1");
  }
  if (out.ok) {
    out.detail << reports << " reports pass; " << compared << " right-hand sides coincide";
  }
  return out;
}

// 4: which T2.6 variant matches, and whether every law agrees.
Outcome theorem26_variants() {
  Outcome out;
  std::map<std::string, std::set<std::string>> matched_by_law;
  for (const auto& law : default_laws(TheoremId::T2_6)) {
    VerifyOptions o;
    o.n_max = 6;
    o.law = law;
    const auto r = verify(TheoremId::T2_6, o);
    auto& s = matched_by_law[law.str()];
    for (const auto& v : r.variants) {
      if (v.matched) s.insert(v.name);
    }
  }
  const auto& first = matched_by_law.begin()->second;
  for (const auto& [law, s] : matched_by_law) {
    if (s != first) out.fail("variant outcome differs on " + law);
  }
  if (first.size() != 1) out.fail("expected exactly one matching variant");
  if (out.ok) {
    out.detail << "variant '" << *first.begin() << "' matches the definition on all "
               << matched_by_law.size() << " laws, n<=6; the other does not";
  }
  return out;
}

// 5: supporting identities.
Outcome identity_suite() {
  Outcome out;
  std::vector<std::string> errata;
  int reports = 0;
  for (auto id : {TheoremId::Eq3_1, TheoremId::Eq4, TheoremId::Eq7}) {
    require_stated(out, certify(id, std::nullopt, 8));
    ++reports;
  }
  for (auto id : {TheoremId::Eq15, TheoremId::Eq16, TheoremId::EulerAltSum}) {
    for (const char* law : kLaws) {
      const auto r = certify(id, std::string(law), 8);
      ++reports;
      if (r.verdict == Verdict::pass_with_erratum) {
        errata.push_back(to_string(id) + "@" + law);
        const VariantResult* matched = nullptr;
        for (const auto& v : r.variants) {
          if (v.matched) matched = &v;
        }
        if (matched == nullptr) out.fail(to_string(id) + " has no matching variant");
      } else {
        require_stated(out, r);
      }
    }
  }
  if (out.ok) {
    out.detail << reports << " reports certified";
    if (!errata.empty()) {
      std::set<std::string> ids;
      for (const auto& e : errata) ids.insert(e.substr(0, e.find('@')));
      out.detail << "; stated form corrected for";
      for (const auto& i : ids) out.detail << ' ' << i;
      out.detail << " (falling factorial of order k+1)";
    }
  }
  return out;
}

// B^Y_{k,n}(x) at lambda = 0 from (tx)^k/k! E[e^{Yt}]^{1-x}, built from raw moments.
Rational classical_probabilistic_bernstein(const RandomVariable& y, int k, int n,
                                           const Rational& x) {
  std::vector<Rational> moments;
  for (int m = 0; m <= n; ++m) moments.push_back(y.moment(m));
  const Series mgf = Series::from_egf(moments);
  const Series power = series_exp((Rational(1) - x) * series_log(mgf));
  return binomial_int(n, k) * pow(x, k) * power.extract_egf(n - k);
}

// 6: lambda -> 0 and Y -> 1.
Outcome degeneration_ladder() {
  Outcome out;
  const int n_max = 10;
  const auto xs = grid_nodes(12);
  const auto lambdas = grid_nodes(12);
  std::size_t checks = 0;
  for (const char* law : kLaws) {
    const auto y = parse_distribution(law);
    const FamilyEvaluator f(y, Rational(0), n_max);
    for (const auto& x : xs) {
      const auto table = f.bernstein_table(x);
      for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= n; ++k, ++checks) {
          if (table[n][k] != classical_probabilistic_bernstein(y, k, n, x)) {
            out.fail(std::string("lambda=0 mismatch for ") + law);
          }
        }
      }
    }
  }
  const auto one = RandomVariable::deterministic(Rational(1));
  for (const auto& l : lambdas) {
    const FamilyEvaluator f(one, l, n_max);
    for (const auto& x : xs) {
      const auto table = f.bernstein_table(x);
      for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= n; ++k, ++checks) {
          if (table[n][k] != degenerate_bernstein(k, n, x, l)) out.fail("Y=1 mismatch");
        }
      }
    }
  }
  const FamilyEvaluator both(one, Rational(0), n_max);
  for (const auto& x : xs) {
    for (int n = 0; n <= n_max; ++n) {
      for (int k = 0; k <= n; ++k, ++checks) {
        const Rational expected =
            binomial_int(n, k) * pow(x, k) * pow(Rational(1) - x, n - k);
        if (both.bernstein(k, n, x) != expected) out.fail("classical limit mismatch");
      }
    }
  }
  if (out.ok) out.detail << checks << " exact checks, n<=10";
  return out;
}

Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 9);
  return Rational(num(rng), den(rng));
}

Series random_series(std::mt19937_64& rng, const Rational& c0) {
  std::vector<Rational> c(11);
  c[0] = c0;
  for (int i = 1; i <= 10; ++i) c[i] = small_rational(rng);
  return Series(std::move(c));
}

// 7: power-series kernel.
Outcome series_kernel() {
  Outcome out;
  std::mt19937_64 rng(2024);
  int exp_log = 0, pow_routes = 0, div_mul = 0;
  for (int i = 0; i < 100; ++i) {
    const Series a = random_series(rng, Rational(0));
    const Series u = random_series(rng, Rational(1));
    if (series_log(series_exp(a)) == a && series_exp(series_log(u)) == u) ++exp_log;

    const Rational r = small_rational(rng);
    if (series_pow(u, r) == series_exp(r * series_log(u))) ++pow_routes;

    Rational c0 = small_rational(rng);
    if (c0.is_zero()) c0 = Rational(1);
    const Series b = random_series(rng, c0);
    const Series c = random_series(rng, small_rational(rng));
    if ((c * b) / b == c) ++div_mul;
  }
  if (exp_log != 100) out.fail("exp/log round trip failed");
  if (pow_routes != 100) out.fail("power routes disagree");
  if (div_mul != 100) out.fail("division does not invert multiplication");
  out.detail << "exp/log " << exp_log << "/100, pow " << pow_routes << "/100, div " << div_mul
             << "/100 at order 10";
  return out;
}

// 8: Monte Carlo against exact degenerate moments.
Outcome monte_carlo() {
  Outcome out;
  int cells = 0, worst = 20;
  for (const char* law : kLaws) {
    const auto y = parse_distribution(law);
    for (int n = 1; n <= 4; ++n) {
      for (const Rational& l : {Rational(0), Rational(1, 2)}) {
        const Rational exact = degenerate_moment(y, n, l);
        int within = 0;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
          McConfig cfg;
          cfg.law = y;
          cfg.seed = seed;
          cfg.samples = 200000;
          const auto e = mc_degenerate_moment(cfg, n, l);
          if (std::abs(z_score(e, exact)) <= 4.0) ++within;
        }
        ++cells;
        worst = std::min(worst, within);
        if (within < 19) {
          std::ostringstream why;
          why << law << " n=" << n << " lambda=" << l << ": " << within << "/20 within 4 stderr";
          out.fail(why.str());
        }
      }
    }
  }
  if (out.ok) out.detail << cells << " cells, worst " << worst << "/20 within 4 stderr";
  return out;
}

// 9: negative controls.
Outcome negative_controls() {
  Outcome out;
  int injected = 0, detected = 0;
  auto run = [&](TheoremId id, const std::optional<LawSelection>& law, Perturbation p) {
    VerifyOptions o;
    o.n_max = 5;
    o.law = law;
    o.perturbation = p;
    const auto r = verify(id, o);
    ++injected;
    if (r.verdict == Verdict::fail && !r.witnesses.empty()) {
      ++detected;
    } else {
      out.fail(to_string(id) + " " + to_string(p.kind) + " on " + r.law + " went undetected");
    }
  };
  for (auto id : all_theorems()) {
    std::vector<std::optional<LawSelection>> laws;
    if (theorem_is_law_free(id)) {
      laws.emplace_back(std::nullopt);
    } else {
      for (auto& l : default_laws(id)) laws.emplace_back(std::move(l));
    }
    for (const auto& law : laws) {
      for (auto kind : supported_perturbations(id)) run(id, law, Perturbation{kind});
    }
    for (std::uint64_t seed = 0; seed < 3; ++seed) run(id, laws.front(), Perturbation::seeded(id, seed));
  }
  out.detail << detected << "/" << injected << " corruptions detected";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "definitional consistency", definitional_consistency},
      {2, "explicit formulas T2.2-T2.5", explicit_formulas},
      {3, "special-law theorems", special_laws},
      {4, "T2.6 variant report", theorem26_variants},
      {5, "identity suite", identity_suite},
      {6, "degeneration ladder", degeneration_ladder},
      {7, "power-series kernel", series_kernel},
      {8, "Monte Carlo concordance", monte_carlo},
      {9, "negative controls", negative_controls},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name
              << "): " << o.detail.str() << " [" << std::fixed << std::setprecision(1) << secs
              << "s]" << std::endl;
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
