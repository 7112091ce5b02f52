#include <doctest.h>

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "degen/json_io.hpp"
#include "degen/verifier.hpp"

using degen::LawSelection;
using degen::Rational;
using degen::TheoremId;
using degen::Verdict;

namespace {

degen::IdentityReport run(TheoremId id, const char* law, int n_max,
                          std::optional<degen::Perturbation> perturbation = std::nullopt,
                          unsigned threads = 0) {
  degen::VerifyOptions o;
  o.n_max = n_max;
  if (law) o.law = degen::parse_law_selection(law);
  o.perturbation = perturbation;
  o.threads = threads;
  return degen::verify(id, o);
}

}  // namespace

TEST_CASE("theorem ids round trip") {
  for (auto id : degen::all_theorems()) CHECK(degen::parse_theorem_id(to_string(id)) == id);
  CHECK(degen::parse_theorem_id("T2.10") == TheoremId::T2_10);
  CHECK_THROWS(degen::parse_theorem_id("T9.9"));
}

TEST_CASE("grid nodes are distinct and skip exclusions") {
  const auto nodes = degen::grid_nodes(40, {Rational(0), Rational(1, 2)});
  CHECK(nodes.size() == 40);
  CHECK(std::set<Rational>(nodes.begin(), nodes.end()).size() == 40);
  for (const auto& n : nodes) {
    CHECK(n != Rational(0));
    CHECK(n != Rational(1, 2));
  }
  CHECK(degen::grid_nodes(3)[0] == Rational(0));
}

TEST_CASE("grids exceed the degree bounds") {
  const auto r = run(TheoremId::T2_2, "poisson", 5);
  for (const auto& g : r.grid) {
    CAPTURE(g.name);
    CHECK(g.nodes.size() > static_cast<std::size_t>(g.degree_bound));
  }
  // The parameter grid avoids E[Y] = 0.
  const auto& alpha = r.grid.back();
  CHECK(alpha.name == "alpha");
  for (const auto& n : alpha.nodes) CHECK(n != Rational(0));
}

TEST_CASE("stated theorems certify") {
  CHECK(run(TheoremId::T2_1, "bernoulli:p=1/3", 8).verdict == Verdict::pass);
  CHECK(run(TheoremId::T2_7, "binomial:m=3", 5).verdict == Verdict::pass);
  CHECK(run(TheoremId::T2_8, "poisson:a=1", 6).verdict == Verdict::pass);
  CHECK(run(TheoremId::T2_10, "bernoulli:p=1/3", 6).verdict == Verdict::pass);
  CHECK(run(TheoremId::T2_11, "binomial:m=4,p=2/5", 6).verdict == Verdict::pass);
  CHECK(run(TheoremId::Eq15, "poisson:a=2", 6).verdict == Verdict::pass);
  CHECK(run(TheoremId::Eq3_1, nullptr, 8).verdict == Verdict::pass);
  CHECK(run(TheoremId::EulerAltSum, "discrete:0:1/2,2:1/2", 6).verdict == Verdict::pass);
}

TEST_CASE("textual variants") {
  const auto t26 = run(TheoremId::T2_6, "det:1", 6);
  REQUIRE(t26.variant("k+1") != nullptr);
  REQUIRE(t26.variant("k+j") != nullptr);
  CHECK_FALSE(t26.variant("k+1")->matched);
  CHECK(t26.variant("k+j")->matched);
  CHECK(t26.verdict == Verdict::pass_with_erratum);
  CHECK_FALSE(t26.notes.empty());

  const auto eq16 = run(TheoremId::Eq16, "poisson:a=2", 6);
  CHECK_FALSE(eq16.variant("(x)_k")->matched);
  CHECK(eq16.variant("(x)_{k+1}")->matched);
  CHECK(eq16.verdict == Verdict::pass_with_erratum);

  const auto t29 = run(TheoremId::T2_9, "poisson", 5);
  CHECK(t29.variant("n-k")->matched);
  CHECK_FALSE(t29.variant("n-j")->matched);
  CHECK(t29.verdict == Verdict::pass);
}

TEST_CASE("every seeded corruption is detected") {
  for (auto id : degen::all_theorems()) {
    const auto laws = degen::default_laws(id);
    const char* law = nullptr;
    std::string law_text;
    if (!laws.empty()) {
      law_text = laws.front().base.str();
      law = law_text.c_str();
    }
    for (auto kind : degen::supported_perturbations(id)) {
      CAPTURE(to_string(id));
      CAPTURE(to_string(kind));
      const auto r = run(id, law, 4, degen::Perturbation{kind});
      CHECK(r.verdict == Verdict::fail);
      CHECK_FALSE(r.witnesses.empty());
      for (const auto& w : r.witnesses) CHECK(w.lhs != w.rhs);
    }
  }
}

TEST_CASE("reports do not depend on the thread count") {
  const auto one = degen::to_json(run(TheoremId::T2_4, "poisson", 4, std::nullopt, 1)).dump();
  const auto four = degen::to_json(run(TheoremId::T2_4, "poisson", 4, std::nullopt, 4)).dump();
  CHECK(one == four);
  const auto bad1 = degen::to_json(run(TheoremId::T2_3, "bernoulli", 4,
                                       degen::Perturbation{degen::PerturbationKind::drop_last_term}, 1));
  const auto bad3 = degen::to_json(run(TheoremId::T2_3, "bernoulli", 4,
                                       degen::Perturbation{degen::PerturbationKind::drop_last_term}, 3));
  CHECK(bad1.dump() == bad3.dump());
}

TEST_CASE("law applicability") {
  CHECK_THROWS_AS(run(TheoremId::T2_8, "bernoulli:p=1/3", 4), std::invalid_argument);
  CHECK_THROWS_AS(run(TheoremId::T2_10, "poisson:a=1", 4), std::invalid_argument);
  CHECK_THROWS_AS(run(TheoremId::T2_11, "det:1", 4), std::invalid_argument);
  CHECK_THROWS_AS(run(TheoremId::T2_1, nullptr, 4), std::invalid_argument);
  // t/(M - 1) needs a nonzero mean.
  CHECK_THROWS_AS(run(TheoremId::T2_2, "discrete:-1:1/2,1:1/2", 4), std::invalid_argument);
  CHECK(degen::theorem_is_law_free(TheoremId::Eq4));
}

TEST_CASE("perturbations are seeded deterministically") {
  for (auto id : degen::all_theorems()) {
    const auto kinds = degen::supported_perturbations(id);
    REQUIRE_FALSE(kinds.empty());
    for (std::uint64_t s = 0; s < 10; ++s) {
      const auto p = degen::Perturbation::seeded(id, s);
      CHECK(p.kind == degen::Perturbation::seeded(id, s).kind);
      CHECK(std::find(kinds.begin(), kinds.end(), p.kind) != kinds.end());
    }
  }
}
