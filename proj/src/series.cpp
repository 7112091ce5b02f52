#include "degen/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace degen {

Series::Series(int order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

Series Series::constant(const Rational& c, int order) {
  Series s(order);
  s[0] = c;
  return s;
}

Series Series::monomial(const Rational& c, int power, int order) {
  if (power < 0) throw std::invalid_argument("negative monomial power");
  Series s(order);
  if (power <= order) s[power] = c;
  return s;
}

Series Series::from_egf(std::span<const Rational> values) {
  std::vector<Rational> c(values.begin(), values.end());
  Rational f(1);
  for (std::size_t n = 1; n < c.size(); ++n) {
    f *= Rational(static_cast<long>(n));
    c[n] /= f;
  }
  return Series(std::move(c));
}

const Rational& Series::coefficient(int n) const {
  if (n < 0 || n > order()) {
    throw std::out_of_range("coefficient index " + std::to_string(n) + " outside 0.." +
                            std::to_string(order()));
  }
  return (*this)[n];
}

Rational Series::extract_egf(int n) const { return coefficient(n) * factorial(n); }

std::optional<int> Series::valuation() const {
  for (int i = 0; i <= order(); ++i) {
    if (!(*this)[i].is_zero()) return i;
  }
  return std::nullopt;
}

Series Series::truncated(int order) const {
  if (order < 0 || order > this->order()) {
    throw std::out_of_range("cannot truncate to order " + std::to_string(order));
  }
  return Series(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

Series Series::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  Series s(order());
  for (int i = 0; i + k <= order(); ++i) s[i + k] = (*this)[i];
  return s;
}

Series& Series::operator+=(const Series& rhs) {
  if (rhs.order() < order()) coeffs_.resize(rhs.coeffs_.size());
  for (int i = 0; i <= order(); ++i) (*this)[i] += rhs[i];
  return *this;
}

Series& Series::operator-=(const Series& rhs) {
  if (rhs.order() < order()) coeffs_.resize(rhs.coeffs_.size());
  for (int i = 0; i <= order(); ++i) (*this)[i] -= rhs[i];
  return *this;
}

Series& Series::operator*=(const Series& rhs) {
  const int n = std::min(order(), rhs.order());
  Series out(n);
  for (int i = 0; i <= n; ++i) {
    if ((*this)[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (!rhs[j].is_zero()) out[i + j] += (*this)[i] * rhs[j];
    }
  }
  return *this = std::move(out);
}

Series& Series::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Series Series::operator-() const {
  Series s = *this;
  for (auto& x : s.coeffs_) x = -x;
  return s;
}

Series series_div(const Series& a, const Series& b) {
  const auto vb = b.valuation();
  if (!vb) throw std::domain_error("series division by a series that is zero to its order");
  const int v = *vb;
  const int n = std::min(a.order(), b.order()) - v;
  if (n < 0) throw std::domain_error("series division leaves no representable coefficients");
  for (int i = 0; i < v; ++i) {
    if (!a[i].is_zero()) {
      throw std::domain_error("series division: divisor valuation exceeds dividend valuation");
    }
  }
  const Rational lead = b[v];
  Series q(n);
  for (int i = 0; i <= n; ++i) {
    Rational acc = a[i + v];
    for (int j = 1; j <= i; ++j) {
      if (!b[j + v].is_zero()) acc -= b[j + v] * q[i - j];
    }
    q[i] = acc / lead;
  }
  return q;
}

Series series_exp(const Series& a) {
  if (!a[0].is_zero()) throw std::domain_error("series_exp needs a zero constant term");
  const int n = a.order();
  Series f(n);
  f[0] = Rational(1);
  // f' = a' f
  for (int m = 1; m <= n; ++m) {
    Rational acc;
    for (int k = 1; k <= m; ++k) {
      if (!a[k].is_zero()) acc += Rational(k) * a[k] * f[m - k];
    }
    f[m] = acc / Rational(m);
  }
  return f;
}

Series series_log(const Series& a) {
  if (a[0] != Rational(1)) throw std::domain_error("series_log needs constant term 1");
  const int n = a.order();
  Series g(n);
  // a g' = a'
  for (int m = 1; m <= n; ++m) {
    Rational acc = Rational(m) * a[m];
    for (int k = 1; k < m; ++k) {
      if (!a[m - k].is_zero()) acc -= Rational(k) * g[k] * a[m - k];
    }
    g[m] = acc / Rational(m);
  }
  return g;
}

Series series_pow(const Series& a, const Rational& r) {
  if (a[0] != Rational(1)) throw std::domain_error("series_pow needs constant term 1");
  const int n = a.order();
  if (r.is_zero()) return Series::constant(Rational(1), n);
  if (r == Rational(1)) return a;
  Series u = a;
  u[0] = Rational(0);
  Series result = Series::constant(Rational(1), n);
  Series u_power = Series::constant(Rational(1), n);
  Rational c(1);
  // u^j starts at t^j, so j <= n terms suffice.
  for (int j = 1; j <= n; ++j) {
    c *= (r - Rational(j - 1)) / Rational(j);
    u_power *= u;
    if (!c.is_zero()) result += u_power * c;
  }
  return result;
}

Series series_pow(const Series& a, int e) {
  if (e < 0) throw std::invalid_argument("series_pow with negative integer exponent");
  Series result = Series::constant(Rational(1), a.order());
  Series base = a;
  while (e != 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

}  // namespace degen
