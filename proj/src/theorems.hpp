#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "degen/combinatorics.hpp"
#include "degen/families.hpp"
#include "degen/verifier.hpp"

namespace degen::detail {

/// Summation-range edits applied to the claimed side of an identity.
struct RangeEdit {
  int lo = 0;   // added to the first summation index
  int hi = 0;   // added to the last summation index
  int idx = 0;  // added to the key index (a Stirling row, an order, ...)

  static RangeEdit from(const std::optional<Perturbation>& p);
};

/// One grid point (x, lambda, law parameter) with lazily built per-point
/// tables. Owned by a single worker.
class NodeData {
 public:
  NodeData(const FamilyEvaluator* family, Rational x, Rational lambda, int n_max);

  const FamilyEvaluator& family() const { return *family_; }
  const RandomVariable& variable() const { return family_->variable(); }
  const Rational& x() const { return x_; }
  const Rational& lambda() const { return lambda_; }
  int n_max() const { return n_max_; }

  /// {n brace k}_{Y,lambda}
  Rational prob_stirling(int n, int k) const { return family_->stirling2(n, k); }
  /// {n brace k}_lambda
  Rational deg_stirling(int n, int k);
  /// B^Y_{k,n}(x|lambda) from the defining series.
  const Rational& bernstein(int k, int n);
  /// beta^{(r,Y)}_{n,lambda}(y)
  const Rational& bernoulli(int n, const Rational& y, int r);
  /// E^Y_{n,lambda}(y)
  const Rational& euler(int n, const Rational& y);
  /// E[(Y)_{n,lambda}]
  const Rational& degenerate_moment(int n);
  /// E[(S_k)_{m,lambda}] = m! [t^m] M^k
  Rational sum_moment(int k, int m);
  /// binomial_general(y, j), cached per y.
  const Rational& binom(const Rational& y, int j);
  /// (x)_{k,lambda}
  const Rational& x_falling(int k);
  /// {n brace k}_lambda from solving the falling-factorial basis change.
  Rational solved_deg_stirling(int n, int k);
  /// e_lambda^{y}(t) to order n_max.
  const Series& degenerate_exp(const Rational& y);

 private:
  const FamilyEvaluator* family_;
  Rational x_;
  Rational lambda_;
  int n_max_;

  std::shared_ptr<const StirlingTable> deg_stirling_;
  std::optional<std::vector<std::vector<Rational>>> bernstein_;
  std::map<std::pair<std::string, int>, std::vector<Rational>> bernoulli_;
  std::map<std::string, std::vector<Rational>> euler_;
  std::vector<Rational> moments_;
  std::vector<Series> mgf_powers_;
  std::map<std::string, std::vector<Rational>> binom_;
  std::vector<Rational> x_falling_;
  std::map<int, std::vector<Rational>> solved_rows_;
  std::map<std::string, Series> degenerate_exp_;
};

struct Comparison {
  Rational lhs;
  Rational rhs;
};

struct VariantInfo {
  const char* name;
  VariantRole role;
  const char* description;
};

using Evaluate = std::optional<Comparison> (*)(NodeData&, std::span<const int>, int variant,
                                               const RangeEdit&);

struct TheoremDef {
  TheoremId id;
  const char* statement;
  bool law_free;
  bool uses_x;
  bool uses_lambda;
  bool needs_nonzero_mean;
  int (*bound_x)(int n_max);
  int (*bound_lambda)(int n_max);
  int (*bound_param)(int n_max);
  std::vector<VariantInfo> variants;
  std::vector<PerturbationKind> perturbations;
  std::vector<std::string> index_names;
  std::string (*index_range)(int n_max);
  std::vector<std::vector<int>> (*indices)(int n_max);
  bool (*applies)(const RandomVariable&);
  Evaluate evaluate;
};

const TheoremDef& theorem_def(TheoremId id);

}  // namespace degen::detail
