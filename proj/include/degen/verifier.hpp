#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degen/random_variable.hpp"

namespace degen {

/// Identities the verifier can certify. T2_* are the explicit formulas for
/// B^Y_{k,n}(x|lambda) and its relatives; the Eq* ids are the supporting
/// identities for the degenerate and probabilistic families.
enum class TheoremId {
  T2_1,
  T2_2,
  T2_3,
  T2_4,
  T2_5,
  T2_6,
  T2_7,
  T2_8,
  T2_9,
  T2_10,
  T2_11,
  Eq3_1,
  Eq4,
  Eq7,
  Eq15,
  Eq16,
  EulerAltSum,
};

std::string to_string(TheoremId id);
TheoremId parse_theorem_id(std::string_view text);
std::vector<TheoremId> all_theorems();

/// Which random variable a check runs against. When grid_parameter is set
/// the law's continuous parameter (p or alpha) becomes a grid variable and
/// base only fixes the family (and the number of trials for a binomial).
struct LawSelection {
  RandomVariable base = RandomVariable::deterministic(Rational(1));
  bool grid_parameter = false;

  std::string str() const;
};

/// "bernoulli:p=1/3" fixes the law; "bernoulli", "poisson" or
/// "binomial:m=3" grid the parameter.
LawSelection parse_law_selection(std::string_view text);

/// Laws a theorem applies to (law-free identities ignore the law).
bool theorem_applies(TheoremId id, const RandomVariable& y);
bool theorem_is_law_free(TheoremId id);
/// Default law set for `verify --all`.
std::vector<LawSelection> default_laws(TheoremId id);

/// Seeded corruption of the claimed side of an identity, used as a
/// negative control.
enum class PerturbationKind { drop_first_term, drop_last_term, shift_index };
std::string to_string(PerturbationKind kind);

struct Perturbation {
  PerturbationKind kind = PerturbationKind::shift_index;

  /// Picks one of the kinds the theorem supports, deterministically from seed.
  static Perturbation seeded(TheoremId id, std::uint64_t seed);
};
std::vector<PerturbationKind> supported_perturbations(TheoremId id);

struct GridVariable {
  std::string name;
  int degree_bound = 0;
  std::vector<Rational> nodes;
  std::vector<Rational> excluded;
};

struct EvalPoint {
  std::vector<std::pair<std::string, Rational>> values;
  std::vector<std::pair<std::string, int>> indices;
};

struct Witness {
  EvalPoint point;
  Rational lhs;
  Rational rhs;
};

enum class VariantRole { stated, alternate, spot_check };
std::string to_string(VariantRole role);

struct VariantResult {
  std::string name;
  VariantRole role = VariantRole::stated;
  std::string description;
  bool matched = true;
  std::size_t checks = 0;
  std::size_t mismatches = 0;
  std::size_t skipped = 0;
  std::vector<Witness> witnesses;
};

enum class Verdict { pass, pass_with_erratum, fail };
std::string to_string(Verdict verdict);

struct IdentityReport {
  TheoremId theorem = TheoremId::T2_1;
  std::string statement;
  std::string law;
  int n_max = 0;
  std::string index_range;
  std::vector<GridVariable> grid;
  std::size_t nodes_evaluated = 0;
  std::vector<VariantResult> variants;
  Verdict verdict = Verdict::fail;
  /// Mismatches of the deciding variants; empty unless the verdict is fail.
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;
  std::optional<PerturbationKind> perturbation;

  bool passed() const { return verdict != Verdict::fail; }
  const VariantResult* variant(std::string_view name) const;
};

struct VerifyOptions {
  int n_max = 6;
  /// Required unless the theorem is law-free.
  std::optional<LawSelection> law;
  std::optional<Perturbation> perturbation;
  std::size_t max_witnesses = 20;
  /// 0 means thread_count().
  unsigned threads = 0;
};

/// Evaluates the definitional side and every textual variant of the claimed
/// side on a tensor grid whose per-variable node count exceeds the degree
/// bound of both sides. Throws std::invalid_argument if the theorem does
/// not apply to the selected law.
IdentityReport verify(TheoremId id, const VerifyOptions& options);

/// Every theorem against its default laws.
std::vector<IdentityReport> verify_all(int n_max, unsigned threads = 0);

/// Distinct rationals 0, 1, 1/2, -1, 2, 1/3, -1/2, ... skipping excluded values.
std::vector<Rational> grid_nodes(std::size_t count, const std::vector<Rational>& excluded = {});

}  // namespace degen
