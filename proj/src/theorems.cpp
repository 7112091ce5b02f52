#include "theorems.hpp"

#include <stdexcept>

namespace degen::detail {

RangeEdit RangeEdit::from(const std::optional<Perturbation>& p) {
  RangeEdit e;
  if (!p) return e;
  switch (p->kind) {
    case PerturbationKind::drop_first_term: e.lo = 1; break;
    case PerturbationKind::drop_last_term: e.hi = -1; break;
    case PerturbationKind::shift_index: e.idx = 1; break;
  }
  return e;
}

NodeData::NodeData(const FamilyEvaluator* family, Rational x, Rational lambda, int n_max)
    : family_(family), x_(std::move(x)), lambda_(std::move(lambda)), n_max_(n_max) {}

Rational NodeData::deg_stirling(int n, int k) {
  if (!deg_stirling_) {
    deg_stirling_ = stirling_table(StirlingKind::degenerate_second, n_max_, lambda_);
  }
  return (*deg_stirling_)(n, k);
}

const Rational& NodeData::bernstein(int k, int n) {
  if (!bernstein_) bernstein_ = family_->bernstein_table(x_);
  return (*bernstein_)[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

const Rational& NodeData::bernoulli(int n, const Rational& y, int r) {
  auto key = std::make_pair(y.str(), r);
  auto it = bernoulli_.find(key);
  if (it == bernoulli_.end()) it = bernoulli_.emplace(key, family_->bernoulli_row(y, r)).first;
  return it->second.at(static_cast<std::size_t>(n));
}

const Rational& NodeData::euler(int n, const Rational& y) {
  auto it = euler_.find(y.str());
  if (it == euler_.end()) it = euler_.emplace(y.str(), family_->euler_row(y)).first;
  return it->second.at(static_cast<std::size_t>(n));
}

const Rational& NodeData::degenerate_moment(int n) {
  if (moments_.empty()) {
    for (int i = 0; i <= n_max_; ++i) moments_.push_back(degen::degenerate_moment(variable(), i, lambda_));
  }
  return moments_.at(static_cast<std::size_t>(n));
}

Rational NodeData::sum_moment(int k, int m) {
  if (mgf_powers_.empty()) mgf_powers_.push_back(Series::constant(Rational(1), family_->mgf().order()));
  while (static_cast<int>(mgf_powers_.size()) <= k) {
    mgf_powers_.push_back(mgf_powers_.back() * family_->mgf());
  }
  return mgf_powers_[static_cast<std::size_t>(k)].extract_egf(m);
}

const Rational& NodeData::binom(const Rational& y, int j) {
  auto& row = binom_[y.str()];
  if (row.empty()) row.push_back(Rational(1));
  while (static_cast<int>(row.size()) <= j) {
    const int i = static_cast<int>(row.size());
    row.push_back(row.back() * (y - Rational(i - 1)) / Rational(i));
  }
  return row[static_cast<std::size_t>(j)];
}

const Rational& NodeData::x_falling(int k) {
  if (x_falling_.empty()) x_falling_.push_back(Rational(1));
  while (static_cast<int>(x_falling_.size()) <= k) {
    const int i = static_cast<int>(x_falling_.size());
    x_falling_.push_back(x_falling_.back() * (x_ - Rational(i - 1) * lambda_));
  }
  return x_falling_[static_cast<std::size_t>(k)];
}

Rational NodeData::solved_deg_stirling(int n, int k) {
  auto it = solved_rows_.find(n);
  if (it == solved_rows_.end()) {
    // (j)_{n,lambda} = sum_{i<=j} T(n,i) (j)_i at j = 0..n; (j)_i vanishes for i > j.
    std::vector<Rational> row(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
      Rational acc = degenerate_falling(Rational(j), n, lambda_);
      for (int i = 0; i < j; ++i) acc -= row[i] * falling_factorial(Rational(j), i);
      row[j] = acc / factorial(j);
    }
    it = solved_rows_.emplace(n, std::move(row)).first;
  }
  if (k < 0 || k > n) return Rational(0);
  return it->second[static_cast<std::size_t>(k)];
}

const Series& NodeData::degenerate_exp(const Rational& y) {
  auto it = degenerate_exp_.find(y.str());
  if (it == degenerate_exp_.end()) {
    it = degenerate_exp_.emplace(y.str(), degenerate_exp_series(y, lambda_, n_max_)).first;
  }
  return it->second;
}

namespace {

const Rational kOne(1);

int same(int n) { return n; }
int plus_one(int n) { return n + 1; }
int twice(int n) { return 2 * n; }
int twice_plus_two(int n) { return 2 * n + 2; }
int unused(int) { return -1; }

std::string range_kn(int n) { return "0<=k<=n<=" + std::to_string(n); }
std::string range_kn_shifted(int n) { return "k,n>=0, n+k<=" + std::to_string(n); }
std::string range_n(int n) { return "0<=n<=" + std::to_string(n); }
std::string range_n1(int n) { return "1<=n<=" + std::to_string(n); }
std::string range_nm(int n) { return "0<=n,m<=" + std::to_string(n); }
std::string range_nm_even(int n) { return "0<=m<=" + std::to_string(n) + ", even 0<=n<=" + std::to_string(n); }

std::vector<std::vector<int>> idx_kn(int N) {
  std::vector<std::vector<int>> out;
  for (int n = 0; n <= N; ++n)
    for (int k = 0; k <= n; ++k) out.push_back({k, n});
  return out;
}

std::vector<std::vector<int>> idx_kn_shifted(int N) {
  std::vector<std::vector<int>> out;
  for (int n = 0; n <= N; ++n)
    for (int k = 0; n + k <= N; ++k) out.push_back({k, n});
  return out;
}

std::vector<std::vector<int>> idx_n(int N) {
  std::vector<std::vector<int>> out;
  for (int n = 0; n <= N; ++n) out.push_back({n});
  return out;
}

std::vector<std::vector<int>> idx_n1(int N) {
  std::vector<std::vector<int>> out;
  for (int n = 1; n <= N; ++n) out.push_back({n});
  return out;
}

std::vector<std::vector<int>> idx_nk(int N) {
  std::vector<std::vector<int>> out;
  for (int n = 0; n <= N; ++n)
    for (int k = 0; k <= n; ++k) out.push_back({n, k});
  return out;
}

std::vector<std::vector<int>> idx_nm(int N) {
  std::vector<std::vector<int>> out;
  for (int n = 0; n <= N; ++n)
    for (int m = 0; m <= N; ++m) out.push_back({n, m});
  return out;
}

std::vector<std::vector<int>> idx_nm_even(int N) {
  std::vector<std::vector<int>> out;
  for (int n = 0; n <= N; n += 2)
    for (int m = 0; m <= N; ++m) out.push_back({n, m});
  return out;
}

bool any_law(const RandomVariable&) { return true; }
bool poisson_only(const RandomVariable& y) { return y.family() == "poisson"; }
bool bernoulli_only(const RandomVariable& y) { return y.family() == "bernoulli"; }
bool binomial_only(const RandomVariable& y) { return y.family() == "binomial"; }

const Rational& law_parameter(NodeData& d, Rational& storage) {
  storage = *d.variable().parameter();
  return storage;
}

// B^Y_{k,n} = sum_j C(n,k) (x)_{k,l} C(1-x, j) j! {n-k brace j}_{Y,l}
std::optional<Comparison> eval_t2_1(NodeData& d, std::span<const int> i, int, const RangeEdit& e) {
  const int k = i[0], n = i[1];
  const Rational one_minus_x = kOne - d.x();
  const Rational c = binomial_int(n, k) * d.x_falling(k);
  Rational rhs;
  for (int j = e.lo; j <= n - k + e.hi; ++j) {
    rhs += c * d.binom(one_minus_x, j) * factorial(j) * d.prob_stirling(n - k + e.idx, j);
  }
  return Comparison{d.bernstein(k, n), rhs};
}

// B^Y_{k,n} = (x)_{k,l} sum_{m=k}^n C(n,m) {m brace k}_{Y,l} beta^{(k,Y)}_{n-m,l}(1-x)
std::optional<Comparison> eval_t2_2(NodeData& d, std::span<const int> i, int, const RangeEdit& e) {
  const int k = i[0], n = i[1];
  const Rational y = kOne - d.x();
  Rational sum;
  for (int m = k + e.lo; m <= n + e.hi; ++m) {
    sum += binomial_int(n, m) * d.prob_stirling(m + e.idx, k) * d.bernoulli(n - m, y, k);
  }
  return Comparison{d.bernstein(k, n), d.x_falling(k) * sum};
}

// (x)_{k,l} sum_{j=0}^n C(1-x,j) j! {n brace j}_{Y,l} = B^Y_{k,n+k} / C(n+k,k)
std::optional<Comparison> eval_t2_3(NodeData& d, std::span<const int> i, int, const RangeEdit& e) {
  const int k = i[0], n = i[1];
  const Rational y = kOne - d.x();
  Rational sum;
  for (int j = e.lo; j <= n + e.hi; ++j) {
    sum += d.binom(y, j) * factorial(j) * d.prob_stirling(n + e.idx, j);
  }
  return Comparison{d.bernstein(k, n + k) / binomial_int(n + k, k), d.x_falling(k) * sum};
}

// E[(Y)_{n-k,l}] = sum_l sum_j C(x,j)/C(x,k)_l j!/k! {l brace j}_{Y,l} C(n,l)/C(n,k) B^Y_{k,n-l}
std::optional<Comparison> eval_t2_4(NodeData& d, std::span<const int> i, int variant,
                                    const RangeEdit& e) {
  const int k = i[0], n = i[1];
  const Rational& xk = d.x_falling(k);
  Rational sum;
  for (int l = e.lo; l <= n - k + e.hi; ++l) {
    Rational inner;
    for (int j = 0; j <= l; ++j) {
      inner += d.binom(d.x(), j) * factorial(j) * d.prob_stirling(l + e.idx, j);
    }
    sum += inner * binomial_int(n, l) * d.bernstein(k, n - l);
  }
  const Rational& moment = d.degenerate_moment(n - k);
  if (variant == 0) {
    // multiplied through by C(n,k) (x)_{k,lambda}
    return Comparison{moment * binomial_int(n, k) * xk, sum};
  }
  if (xk.is_zero()) return std::nullopt;
  const Rational xbin = degenerate_binomial(d.x(), k, d.lambda());
  Rational direct;
  for (int l = e.lo; l <= n - k + e.hi; ++l) {
    for (int j = 0; j <= l; ++j) {
      direct += d.binom(d.x(), j) / xbin * (factorial(j) / factorial(k)) *
                d.prob_stirling(l + e.idx, j) * (binomial_int(n, l) / binomial_int(n, k)) *
                d.bernstein(k, n - l);
    }
  }
  return Comparison{moment, direct};
}

// E^Y_{n-k,l}(1-x) = sum_{l=k}^n C(n,l) / (C(n,k) C(x,k)_l) E^Y_{n-l,l} B^Y_{k,l} / k!
std::optional<Comparison> eval_t2_5(NodeData& d, std::span<const int> i, int variant,
                                    const RangeEdit& e) {
  const int k = i[0], n = i[1];
  const Rational& xk = d.x_falling(k);
  Rational sum;
  for (int l = k + e.lo; l <= n + e.hi; ++l) {
    sum += binomial_int(n, l) * d.euler(n - l + e.idx, Rational(0)) * d.bernstein(k, l);
  }
  const Rational& lhs = d.euler(n - k, kOne - d.x());
  if (variant == 0) return Comparison{lhs * binomial_int(n, k) * xk, sum};
  if (xk.is_zero()) return std::nullopt;
  const Rational denom = binomial_int(n, k) * degenerate_binomial(d.x(), k, d.lambda());
  Rational direct;
  for (int l = k + e.lo; l <= n + e.hi; ++l) {
    direct += binomial_int(n, l) / denom * d.euler(n - l + e.idx, Rational(0)) *
              d.bernstein(k, l) / factorial(k);
  }
  return Comparison{lhs, direct};
}

// B^Y_{k,n} = (x)_{k,l} sum_m sum_j C(n,m) beta^{(k,Y)}_{n-m,l}(kx) C(k+j,j) C(1-x-kx,j)
//             {m brace k+1 | k+j}_{Y,l} j!
std::optional<Comparison> eval_t2_6(NodeData& d, std::span<const int> i, int variant,
                                    const RangeEdit& e) {
  const int k = i[0], n = i[1];
  const Rational kx = Rational(k) * d.x();
  const Rational y = kOne - d.x() - kx;
  Rational sum;
  for (int m = k + e.lo; m <= n + e.hi; ++m) {
    const Rational outer = binomial_int(n, m) * d.bernoulli(n - m, kx, k);
    for (int j = 0; j <= m - k; ++j) {
      const int col = variant == 0 ? k + 1 : k + j;
      sum += outer * binomial_int(k + j, j) * d.binom(y, j) * factorial(j) *
             d.prob_stirling(m + e.idx, col);
    }
  }
  return Comparison{d.bernstein(k, n), d.x_falling(k) * sum};
}

// B^Y_{k,n}/k! = C(x,k)_l C(n,k) sum_j sum_l (1-x)^l S1(j,l) {n-k brace j}_{Y,l}
std::optional<Comparison> eval_t2_7(NodeData& d, std::span<const int> i, int, const RangeEdit& e) {
  const int k = i[0], n = i[1];
  const Rational y = kOne - d.x();
  Rational sum;
  for (int j = e.lo; j <= n - k + e.hi; ++j) {
    Rational inner;
    Rational yl(1);
    for (int l = 0; l <= j; ++l) {
      inner += yl * stirling1(j, l);
      yl *= y;
    }
    sum += inner * d.prob_stirling(n - k + e.idx, j);
  }
  const Rational rhs = degenerate_binomial(d.x(), k, d.lambda()) * binomial_int(n, k) * sum;
  return Comparison{d.bernstein(k, n) / factorial(k), rhs};
}

// B^Y_{k,n}/k! = C(x,k)_l C(n,k) phi_{n-k,l}(alpha (1-x))
std::optional<Comparison> eval_t2_8(NodeData& d, std::span<const int> i, int, const RangeEdit& e) {
  const int k = i[0], n = i[1];
  Rational alpha;
  const Rational z = law_parameter(d, alpha) * (kOne - d.x());
  Rational sum;
  for (int s = e.lo; s <= e.hi; ++s) {
    const int row = n - k + e.idx;
    Rational bell;
    Rational zj(1);
    for (int j = 0; j <= row; ++j) {
      bell += d.deg_stirling(row, j) * zj;
      zj *= z;
    }
    sum += bell;
  }
  const Rational rhs = degenerate_binomial(d.x(), k, d.lambda()) * binomial_int(n, k) * sum;
  return Comparison{d.bernstein(k, n) / factorial(k), rhs};
}

// B^Y_{k,n}/k! = C(x,k)_l C(n,k) sum_j alpha^j (1-x)^j {n-k brace j | n-j brace j}_l
std::optional<Comparison> eval_t2_9(NodeData& d, std::span<const int> i, int variant,
                                    const RangeEdit& e) {
  const int k = i[0], n = i[1];
  Rational alpha;
  const Rational z = law_parameter(d, alpha) * (kOne - d.x());
  Rational sum;
  for (int j = e.lo; j <= n - k + e.hi; ++j) {
    const int row = (variant == 0 ? n - k : n - j) + e.idx;
    sum += pow(z, j) * d.deg_stirling(row, j);
  }
  const Rational rhs = degenerate_binomial(d.x(), k, d.lambda()) * binomial_int(n, k) * sum;
  return Comparison{d.bernstein(k, n) / factorial(k), rhs};
}

// B^Y_{k,n}/k! = C(n,k) C(x,k)_l sum_l p^l C(1-x,l) l! {n-k brace l}_l
std::optional<Comparison> eval_t2_10(NodeData& d, std::span<const int> i, int, const RangeEdit& e) {
  const int k = i[0], n = i[1];
  Rational p;
  law_parameter(d, p);
  const Rational y = kOne - d.x();
  Rational sum;
  for (int l = e.lo; l <= n - k + e.hi; ++l) {
    sum += pow(p, l) * d.binom(y, l) * factorial(l) * d.deg_stirling(n - k + e.idx, l);
  }
  const Rational rhs = binomial_int(n, k) * degenerate_binomial(d.x(), k, d.lambda()) * sum;
  return Comparison{d.bernstein(k, n) / factorial(k), rhs};
}

// B^Y_{k,n}/k! = C(n,k) C(x,k)_l sum_j C(m(1-x),j) j! p^j {n-k brace j | n-j brace j}_l
std::optional<Comparison> eval_t2_11(NodeData& d, std::span<const int> i, int variant,
                                     const RangeEdit& e) {
  const int k = i[0], n = i[1];
  const auto& law = std::get<Binomial>(d.variable().law());
  const Rational y = Rational(law.trials) * (kOne - d.x());
  Rational sum;
  for (int j = e.lo; j <= n - k + e.hi; ++j) {
    const int row = (variant == 0 ? n - k : n - j) + e.idx;
    sum += d.binom(y, j) * factorial(j) * pow(law.p, j) * d.deg_stirling(row, j);
  }
  const Rational rhs = binomial_int(n, k) * degenerate_binomial(d.x(), k, d.lambda()) * sum;
  return Comparison{d.bernstein(k, n) / factorial(k), rhs};
}

// (x)_{n,l} = sum_k {n brace k}_l (x)_k
std::optional<Comparison> eval_eq3_1(NodeData& d, std::span<const int> i, int, const RangeEdit& e) {
  const int n = i[0];
  Rational sum;
  for (int k = e.lo; k <= n + e.hi; ++k) {
    sum += d.deg_stirling(n + e.idx, k) * falling_factorial(d.x(), k);
  }
  return Comparison{d.x_falling(n), sum};
}

// n! [t^n] (e_l(t) - 1)^k / k!  versus the basis-change solve
std::optional<Comparison> eval_eq4(NodeData& d, std::span<const int> i, int, const RangeEdit& e) {
  const int n = i[0], k = i[1];
  return Comparison{d.deg_stirling(n, k), d.solved_deg_stirling(n + e.idx, k)};
}

// C(n,k) (x)_{k,l} (1-x)_{n-k,l} = n! [t^n] (x)_{k,l} t^k / k! e_l^{1-x}(t)
std::optional<Comparison> eval_eq7(NodeData& d, std::span<const int> i, int, const RangeEdit& e) {
  const int k = i[0], n = i[1];
  const Series& tail = d.degenerate_exp(kOne - d.x());
  const Rational c = d.x_falling(k + e.idx) / factorial(k);
  const Rational rhs = c * tail[n - k] * factorial(n);
  return Comparison{degenerate_bernstein(k, n, d.x(), d.lambda()), rhs};
}

// sum_{k=0}^n E[(S_k)_{m,l}] = (beta_{m+1,l}(n+1) - beta_{m+1,l}) / (m+1)
std::optional<Comparison> eval_eq15(NodeData& d, std::span<const int> i, int, const RangeEdit& e) {
  const int n = i[0], m = i[1];
  Rational lhs;
  for (int k = e.lo; k <= n + e.hi; ++k) lhs += d.sum_moment(k, m);
  const int b = m + 1 + e.idx;
  const Rational rhs = (d.bernoulli(b, Rational(n + 1), 1) - d.bernoulli(b, Rational(0), 1)) /
                       Rational(m + 1);
  return Comparison{lhs, rhs};
}

// (beta_{n,l}(x) - beta_{n,l}) / n = sum_{k<n} (x)_k / (k+1) {n-1 brace k}_{Y,l}
// Stated with (x)_k; the generating function gives (x)_{k+1}.
std::optional<Comparison> eval_eq16(NodeData& d, std::span<const int> i, int variant,
                                    const RangeEdit& e) {
  const int n = i[0];
  const Rational lhs =
      (d.bernoulli(n, d.x(), 1) - d.bernoulli(n, Rational(0), 1)) / Rational(n);
  Rational rhs;
  for (int k = e.lo; k <= n - 1 + e.hi; ++k) {
    const int len = variant == 0 ? k : k + 1;
    rhs += falling_factorial(d.x(), len) / Rational(k + 1) * d.prob_stirling(n - 1 + e.idx, k);
  }
  return Comparison{lhs, rhs};
}

// sum_{k=0}^n (-1)^k E[(S_k)_{m,l}] = (E^Y_{m,l} + E^Y_{m,l}(n+1)) / 2, n even
std::optional<Comparison> eval_euler_alt(NodeData& d, std::span<const int> i, int,
                                         const RangeEdit& e) {
  const int n = i[0], m = i[1];
  Rational lhs;
  for (int k = e.lo; k <= n + e.hi; ++k) {
    const Rational term = d.sum_moment(k, m);
    lhs += (k % 2 == 0) ? term : -term;
  }
  const int row = m + e.idx;
  const Rational rhs = (d.euler(row, Rational(0)) + d.euler(row, Rational(n + 1))) / Rational(2);
  return Comparison{lhs, rhs};
}

const std::vector<PerturbationKind> kAllKinds{PerturbationKind::drop_first_term,
                                              PerturbationKind::drop_last_term,
                                              PerturbationKind::shift_index};
const std::vector<PerturbationKind> kIndexOnly{PerturbationKind::shift_index};

std::vector<TheoremDef> build_defs() {
  const VariantInfo stated{"stated", VariantRole::stated, "formula as stated"};
  std::vector<TheoremDef> defs;
  defs.push_back({TheoremId::T2_1,
                  "B^Y_{k,n}(x|l) = sum_{j=0}^{n-k} C(n,k) (x)_{k,l} C(1-x,j) j! {n-k brace j}_{Y,l}",
                  false, true, true, false, same, same, same, {stated}, kAllKinds, {"k", "n"},
                  range_kn, idx_kn, any_law, eval_t2_1});
  defs.push_back({TheoremId::T2_2,
                  "B^Y_{k,n}(x|l) = (x)_{k,l} sum_{m=k}^n C(n,m) {m brace k}_{Y,l} "
                  "beta^{(k,Y)}_{n-m,l}(1-x)",
                  false, true, true, true, same, same, twice, {stated}, kAllKinds, {"k", "n"},
                  range_kn, idx_kn, any_law, eval_t2_2});
  defs.push_back({TheoremId::T2_3,
                  "(x)_{k,l} sum_{j=0}^n C(1-x,j) j! {n brace j}_{Y,l} = B^Y_{k,n+k}(x|l) / C(n+k,k)",
                  false, true, true, false, same, same, same, {stated}, kAllKinds, {"k", "n"},
                  range_kn_shifted, idx_kn_shifted, any_law, eval_t2_3});
  defs.push_back({TheoremId::T2_4,
                  "E[(Y)_{n-k,l}] = sum_{l=0}^{n-k} sum_{j=0}^l C(x,j)/C(x,k)_l j!/k! "
                  "{l brace j}_{Y,l} C(n,l)/C(n,k) B^Y_{k,n-l}(x|l)",
                  false, true, true, false, same, same, same,
                  {{"cleared", VariantRole::stated,
                    "both sides multiplied by C(n,k) (x)_{k,l}; certifies the identity"},
                   {"direct", VariantRole::spot_check,
                    "formula as stated, at nodes where (x)_{k,l} != 0"}},
                  kAllKinds, {"k", "n"}, range_kn, idx_kn, any_law, eval_t2_4});
  defs.push_back({TheoremId::T2_5,
                  "E^Y_{n-k,l}(1-x) = sum_{l=k}^n C(n,l) / (C(n,k) C(x,k)_l) E^Y_{n-l,l} "
                  "B^Y_{k,l}(x|l) / k!",
                  false, true, true, false, same, same, same,
                  {{"cleared", VariantRole::stated,
                    "both sides multiplied by C(n,k) (x)_{k,l}; certifies the identity"},
                   {"direct", VariantRole::spot_check,
                    "formula as stated, at nodes where (x)_{k,l} != 0"}},
                  kAllKinds, {"k", "n"}, range_kn, idx_kn, any_law, eval_t2_5});
  defs.push_back({TheoremId::T2_6,
                  "B^Y_{k,n}(x|l) = (x)_{k,l} sum_{m=k}^n sum_{j=0}^{m-k} C(n,m) "
                  "beta^{(k,Y)}_{n-m,l}(kx) C(k+j,j) C(1-x-kx,j) {m brace k+1}_{Y,l} j!",
                  false, true, true, true, same, same, twice,
                  {{"k+1", VariantRole::stated, "Stirling column k+1 as in the theorem statement"},
                   {"k+j", VariantRole::alternate,
                    "Stirling column k+j, as the generating function gives"}},
                  kAllKinds, {"k", "n"}, range_kn, idx_kn, any_law, eval_t2_6});
  defs.push_back({TheoremId::T2_7,
                  "B^Y_{k,n}(x|l)/k! = C(x,k)_l C(n,k) sum_{j=0}^{n-k} sum_{l=0}^j (1-x)^l S1(j,l) "
                  "{n-k brace j}_{Y,l}",
                  false, true, true, false, same, same, same, {stated}, kAllKinds, {"k", "n"},
                  range_kn, idx_kn, any_law, eval_t2_7});
  defs.push_back({TheoremId::T2_8,
                  "Y ~ Poisson(alpha): B^Y_{k,n}(x|l)/k! = C(x,k)_l C(n,k) phi_{n-k,l}(alpha(1-x))",
                  false, true, true, false, same, same, same, {stated}, kAllKinds, {"k", "n"},
                  range_kn, idx_kn, poisson_only, eval_t2_8});
  defs.push_back({TheoremId::T2_9,
                  "Y ~ Poisson(alpha): B^Y_{k,n}(x|l)/k! = C(x,k)_l C(n,k) sum_{j=0}^{n-k} "
                  "alpha^j (1-x)^j {n-k brace j}_l",
                  false, true, true, false, same, same, same,
                  {{"n-k", VariantRole::stated, "Stirling row n-k as in the theorem statement"},
                   {"n-j", VariantRole::alternate,
                    "Stirling row n-j in place of n-k"}},
                  kAllKinds, {"k", "n"}, range_kn, idx_kn, poisson_only, eval_t2_9});
  defs.push_back({TheoremId::T2_10,
                  "Y ~ Bernoulli(p): B^Y_{k,n}(x|l)/k! = C(n,k) C(x,k)_l sum_{l=0}^{n-k} p^l "
                  "C(1-x,l) l! {n-k brace l}_l",
                  false, true, true, false, same, same, same, {stated}, kAllKinds, {"k", "n"},
                  range_kn, idx_kn, bernoulli_only, eval_t2_10});
  defs.push_back({TheoremId::T2_11,
                  "Y ~ Binomial(m,p): B^Y_{k,n}(x|l)/k! = C(n,k) C(x,k)_l sum_{j=0}^{n-k} "
                  "C(m(1-x),j) j! p^j {n-k brace j}_l",
                  false, true, true, false, same, same, same,
                  {{"n-k", VariantRole::stated, "Stirling row n-k as in the theorem statement"},
                   {"n-j", VariantRole::alternate,
                    "Stirling row n-j in place of n-k"}},
                  kAllKinds, {"k", "n"}, range_kn, idx_kn, binomial_only, eval_t2_11});
  defs.push_back({TheoremId::Eq3_1, "(x)_{n,l} = sum_{k=0}^n {n brace k}_l (x)_k", true, true,
                  true, false, same, same, unused, {stated}, kAllKinds, {"n"}, range_n, idx_n,
                  any_law, eval_eq3_1});
  defs.push_back({TheoremId::Eq4,
                  "n! [t^n] (e_l(t) - 1)^k / k! equals the {n brace k}_l solving "
                  "(x)_{n,l} = sum_k {n brace k}_l (x)_k",
                  true, false, true, false, unused, same, unused, {stated}, kIndexOnly,
                  {"n", "k"}, range_kn, idx_nk, any_law, eval_eq4});
  defs.push_back({TheoremId::Eq7,
                  "C(n,k) (x)_{k,l} (1-x)_{n-k,l} = n! [t^n] (x)_{k,l} t^k / k! e_l^{1-x}(t)", true,
                  true, true, false, same, same, unused, {stated}, kIndexOnly, {"k", "n"},
                  range_kn, idx_kn, any_law, eval_eq7});
  defs.push_back({TheoremId::Eq15,
                  "sum_{k=0}^n E[(S_k)_{m,l}] = (beta^Y_{m+1,l}(n+1) - beta^Y_{m+1,l}) / (m+1)",
                  false, false, true, true, unused, plus_one, twice_plus_two, {stated}, kAllKinds,
                  {"n", "m"}, range_nm, idx_nm, any_law, eval_eq15});
  defs.push_back({TheoremId::Eq16,
                  "(beta^Y_{n,l}(x) - beta^Y_{n,l}) / n = sum_{k=0}^{n-1} (x)_k / (k+1) "
                  "{n-1 brace k}_{Y,l}",
                  false, true, true, true, same, same, twice,
                  {{"(x)_k", VariantRole::stated, "falling factorial (x)_k as stated"},
                   {"(x)_{k+1}", VariantRole::alternate,
                    "falling factorial (x)_{k+1}, as the generating function gives"}},
                  kAllKinds, {"n"}, range_n1, idx_n1, any_law, eval_eq16});
  defs.push_back({TheoremId::EulerAltSum,
                  "sum_{k=0}^n (-1)^k E[(S_k)_{m,l}] = (E^Y_{m,l} + E^Y_{m,l}(n+1)) / 2, n even",
                  false, false, true, false, unused, same, same, {stated}, kAllKinds, {"n", "m"},
                  range_nm_even, idx_nm_even, any_law, eval_euler_alt});
  return defs;
}

}  // namespace

const TheoremDef& theorem_def(TheoremId id) {
  static const std::vector<TheoremDef> defs = build_defs();
  for (const auto& d : defs) {
    if (d.id == id) return d;
  }
  throw std::invalid_argument("unknown theorem");
}

}  // namespace degen::detail
