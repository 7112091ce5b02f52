#include "degen/verifier.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "degen/families.hpp"
#include "degen/parallel.hpp"
#include "theorems.hpp"

namespace degen {

namespace {

struct IdName {
  TheoremId id;
  const char* name;
};

constexpr IdName kNames[] = {
    {TheoremId::T2_1, "T2.1"},   {TheoremId::T2_2, "T2.2"},   {TheoremId::T2_3, "T2.3"},
    {TheoremId::T2_4, "T2.4"},   {TheoremId::T2_5, "T2.5"},   {TheoremId::T2_6, "T2.6"},
    {TheoremId::T2_7, "T2.7"},   {TheoremId::T2_8, "T2.8"},   {TheoremId::T2_9, "T2.9"},
    {TheoremId::T2_10, "T2.10"}, {TheoremId::T2_11, "T2.11"}, {TheoremId::Eq3_1, "Eq3-1"},
    {TheoremId::Eq4, "Eq4"},     {TheoremId::Eq7, "Eq7"},     {TheoremId::Eq15, "Eq15"},
    {TheoremId::Eq16, "Eq16"},   {TheoremId::EulerAltSum, "EulerAltSum"},
};

}  // namespace

std::string to_string(TheoremId id) {
  for (const auto& [i, name] : kNames) {
    if (i == id) return name;
  }
  return "unknown";
}

TheoremId parse_theorem_id(std::string_view text) {
  for (const auto& [i, name] : kNames) {
    if (text == name) return i;
  }
  throw std::invalid_argument("unknown theorem '" + std::string(text) + "'");
}

std::vector<TheoremId> all_theorems() {
  std::vector<TheoremId> ids;
  for (const auto& entry : kNames) ids.push_back(entry.id);
  return ids;
}

std::string to_string(PerturbationKind kind) {
  switch (kind) {
    case PerturbationKind::drop_first_term: return "drop-first-term";
    case PerturbationKind::drop_last_term: return "drop-last-term";
    case PerturbationKind::shift_index: return "shift-index";
  }
  return "unknown";
}

std::string to_string(VariantRole role) {
  switch (role) {
    case VariantRole::stated: return "stated";
    case VariantRole::alternate: return "alternate";
    case VariantRole::spot_check: return "spot-check";
  }
  return "unknown";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass: return "pass";
    case Verdict::pass_with_erratum: return "pass-with-erratum";
    case Verdict::fail: return "fail";
  }
  return "unknown";
}

std::string LawSelection::str() const {
  if (!grid_parameter || !base.parameter_name()) return base.str();
  if (const auto* b = std::get_if<Binomial>(&base.law())) {
    return "binomial:m=" + std::to_string(b->trials) + ",p=*";
  }
  return base.family() == "poisson" ? "poisson:a=*" : base.family() + ":p=*";
}

LawSelection parse_law_selection(std::string_view text) {
  if (text == "bernoulli") return {RandomVariable::bernoulli(Rational(1, 2)), true};
  if (text == "poisson") return {RandomVariable::poisson(Rational(1)), true};
  if (text.starts_with("binomial") && text.find("p=") == std::string_view::npos) {
    const auto pos = text.find("m=");
    if (pos == std::string_view::npos) {
      throw std::invalid_argument("binomial needs the number of trials, e.g. binomial:m=3");
    }
    const auto law = parse_distribution(std::string(text) + ",p=1/2");
    return {law, true};
  }
  return {parse_distribution(text), false};
}

bool theorem_applies(TheoremId id, const RandomVariable& y) {
  return detail::theorem_def(id).applies(y);
}

bool theorem_is_law_free(TheoremId id) { return detail::theorem_def(id).law_free; }

std::vector<LawSelection> default_laws(TheoremId id) {
  if (theorem_is_law_free(id)) return {};
  switch (id) {
    case TheoremId::T2_8:
    case TheoremId::T2_9: return {parse_law_selection("poisson")};
    case TheoremId::T2_10: return {parse_law_selection("bernoulli")};
    case TheoremId::T2_11:
      return {parse_law_selection("binomial:m=1"), parse_law_selection("binomial:m=3")};
    default:
      return {parse_law_selection("det:1"), parse_law_selection("bernoulli"),
              parse_law_selection("binomial:m=3"), parse_law_selection("poisson"),
              parse_law_selection("discrete:0:1/2,2:1/2")};
  }
}

std::vector<PerturbationKind> supported_perturbations(TheoremId id) {
  return detail::theorem_def(id).perturbations;
}

Perturbation Perturbation::seeded(TheoremId id, std::uint64_t seed) {
  const auto kinds = supported_perturbations(id);
  std::mt19937_64 rng(seed);
  return Perturbation{kinds[rng() % kinds.size()]};
}

const VariantResult* IdentityReport::variant(std::string_view name) const {
  for (const auto& v : variants) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

std::vector<Rational> grid_nodes(std::size_t count, const std::vector<Rational>& excluded) {
  const std::set<Rational> skip(excluded.begin(), excluded.end());
  std::vector<Rational> nodes;
  std::set<Rational> seen;
  auto offer = [&](const Rational& r) {
    if (nodes.size() >= count || skip.count(r) || !seen.insert(r).second) return;
    nodes.push_back(r);
  };
  for (const auto& r : {Rational(0), Rational(1), Rational(1, 2), Rational(-1), Rational(2),
                        Rational(1, 3), Rational(-1, 2)}) {
    offer(r);
  }
  for (long height = 2; nodes.size() < count; ++height) {
    for (long q = 1; q < height && nodes.size() < count; ++q) {
      const long p = height - q;
      if (std::gcd(p, q) != 1) continue;
      offer(Rational(p, q));
      offer(Rational(-p, q));
    }
  }
  return nodes;
}

namespace {

struct Tally {
  std::size_t checks = 0;
  std::size_t mismatches = 0;
  std::size_t skipped = 0;
  std::vector<Witness> witnesses;
};

struct TaskResult {
  std::size_t nodes = 0;
  std::vector<Tally> tallies;
};

struct Task {
  Rational lambda;
  std::optional<Rational> param;
};

std::string mismatch_summary(const VariantResult& v) {
  return std::to_string(v.mismatches) + " of " + std::to_string(v.checks) + " checks differ";
}

void decide(IdentityReport& report) {
  const VariantResult* stated = nullptr;
  bool spot_ok = true;
  for (const auto& v : report.variants) {
    if (v.role == VariantRole::stated) stated = &v;
    if (v.role == VariantRole::spot_check && !v.matched) spot_ok = false;
  }
  const VariantResult* matching_alternate = nullptr;
  for (const auto& v : report.variants) {
    if (v.role == VariantRole::alternate && v.matched && !matching_alternate) {
      matching_alternate = &v;
    }
  }

  if (stated->matched && spot_ok) {
    report.verdict = Verdict::pass;
    for (const auto& v : report.variants) {
      if (v.role != VariantRole::alternate) continue;
      if (v.matched) {
        report.notes.push_back("variant '" + v.name + "' (" + v.description +
                               ") also matches the definition");
      } else {
        report.notes.push_back("variant '" + v.name + "' (" + v.description +
                               ") does not match the definition: " + mismatch_summary(v));
      }
    }
  } else if (matching_alternate && spot_ok) {
    report.verdict = Verdict::pass_with_erratum;
    report.notes.push_back("stated form '" + stated->name + "' does not match the definition: " +
                           mismatch_summary(*stated));
    report.notes.push_back("variant '" + matching_alternate->name + "' (" +
                           matching_alternate->description + ") matches the definition");
  } else {
    report.verdict = Verdict::fail;
    for (const auto& v : report.variants) {
      if (v.role == VariantRole::alternate) continue;
      report.witnesses.insert(report.witnesses.end(), v.witnesses.begin(), v.witnesses.end());
    }
    for (const auto& v : report.variants) {
      if (!v.matched) {
        report.notes.push_back("variant '" + v.name + "' fails: " + mismatch_summary(v));
      }
    }
  }
}

}  // namespace

IdentityReport verify(TheoremId id, const VerifyOptions& options) {
  const auto& def = detail::theorem_def(id);
  const int n_max = options.n_max;
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");

  std::optional<LawSelection> law;
  if (!def.law_free) {
    if (!options.law) throw std::invalid_argument(to_string(id) + " needs a law");
    law = options.law;
    if (!law->base.parameter_name()) law->grid_parameter = false;
    if (!def.applies(law->base)) {
      throw std::invalid_argument(to_string(id) + " does not apply to " + law->str());
    }
    if (def.needs_nonzero_mean && !law->grid_parameter && law->base.mean().is_zero()) {
      throw std::invalid_argument(to_string(id) + " needs E[Y] != 0, got " + law->str());
    }
  }

  IdentityReport report;
  report.theorem = id;
  report.statement = def.statement;
  report.law = law ? law->str() : "none";
  report.n_max = n_max;
  report.index_range = def.index_range(n_max);
  if (options.perturbation) report.perturbation = options.perturbation->kind;

  auto add_variable = [&](const std::string& name, int bound, std::vector<Rational> excluded) {
    GridVariable g;
    g.name = name;
    g.degree_bound = bound;
    g.nodes = grid_nodes(static_cast<std::size_t>(bound) + 1, excluded);
    g.excluded = std::move(excluded);
    report.grid.push_back(std::move(g));
    return report.grid.size() - 1;
  };

  std::optional<std::size_t> x_var, lambda_var, param_var;
  if (def.uses_x) x_var = add_variable("x", def.bound_x(n_max), {});
  if (def.uses_lambda) lambda_var = add_variable("lambda", def.bound_lambda(n_max), {});
  if (law && law->grid_parameter) {
    const int bound = def.bound_param(n_max);
    std::vector<Rational> excluded;
    if (def.needs_nonzero_mean) {
      for (const auto& v : grid_nodes(static_cast<std::size_t>(bound) + 8)) {
        if (law->base.with_parameter(v).mean().is_zero()) excluded.push_back(v);
      }
    }
    param_var = add_variable(*law->base.parameter_name(), bound, std::move(excluded));
  }

  const std::vector<Rational> lambdas =
      lambda_var ? report.grid[*lambda_var].nodes : std::vector<Rational>{Rational(0)};
  const std::vector<Rational> xs =
      x_var ? report.grid[*x_var].nodes : std::vector<Rational>{Rational(0)};
  std::vector<Task> tasks;
  for (const auto& l : lambdas) {
    if (param_var) {
      for (const auto& p : report.grid[*param_var].nodes) tasks.push_back({l, p});
    } else {
      tasks.push_back({l, std::nullopt});
    }
  }

  const auto indices = def.indices(n_max);
  const auto edit = detail::RangeEdit::from(options.perturbation);
  const std::size_t variant_count = def.variants.size();
  // Tables extend two rows past n_max so index-shifting perturbations stay in range.
  const int table_size = n_max + 2;

  std::vector<TaskResult> results(tasks.size());
  parallel_for(
      tasks.size(),
      [&](std::size_t t) {
        const Task& task = tasks[t];
        TaskResult& out = results[t];
        out.tallies.resize(variant_count);
        std::optional<FamilyEvaluator> family;
        if (law) {
          RandomVariable y = task.param ? law->base.with_parameter(*task.param) : law->base;
          family.emplace(std::move(y), task.lambda, table_size);
        }
        for (const auto& x : xs) {
          detail::NodeData node(family ? &*family : nullptr, x, task.lambda, table_size);
          ++out.nodes;
          for (const auto& idx : indices) {
            for (std::size_t v = 0; v < variant_count; ++v) {
              auto c = def.evaluate(node, idx, static_cast<int>(v), edit);
              Tally& tally = out.tallies[v];
              if (!c) {
                ++tally.skipped;
                continue;
              }
              ++tally.checks;
              if (c->lhs == c->rhs) continue;
              ++tally.mismatches;
              if (tally.witnesses.size() >= options.max_witnesses) continue;
              Witness w;
              if (x_var) w.point.values.emplace_back("x", x);
              if (lambda_var) w.point.values.emplace_back("lambda", task.lambda);
              if (param_var) {
                w.point.values.emplace_back(report.grid[*param_var].name, *task.param);
              }
              for (std::size_t i = 0; i < idx.size(); ++i) {
                w.point.indices.emplace_back(def.index_names[i], idx[i]);
              }
              w.lhs = std::move(c->lhs);
              w.rhs = std::move(c->rhs);
              tally.witnesses.push_back(std::move(w));
            }
          }
        }
      },
      options.threads);

  for (std::size_t v = 0; v < variant_count; ++v) {
    VariantResult r;
    r.name = def.variants[v].name;
    r.role = def.variants[v].role;
    r.description = def.variants[v].description;
    for (const auto& res : results) {
      const Tally& tally = res.tallies[v];
      r.checks += tally.checks;
      r.mismatches += tally.mismatches;
      r.skipped += tally.skipped;
      for (const auto& w : tally.witnesses) {
        if (r.witnesses.size() < options.max_witnesses) r.witnesses.push_back(w);
      }
    }
    r.matched = r.mismatches == 0;
    report.variants.push_back(std::move(r));
  }
  for (const auto& res : results) report.nodes_evaluated += res.nodes;

  decide(report);
  return report;
}

std::vector<IdentityReport> verify_all(int n_max, unsigned threads) {
  std::vector<IdentityReport> reports;
  for (const auto id : all_theorems()) {
    VerifyOptions options;
    options.n_max = n_max;
    options.threads = threads;
    if (theorem_is_law_free(id)) {
      reports.push_back(verify(id, options));
      continue;
    }
    for (const auto& law : default_laws(id)) {
      options.law = law;
      reports.push_back(verify(id, options));
    }
  }
  return reports;
}

}  // namespace degen
