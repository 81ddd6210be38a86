#include "tautring/power_series.hpp"

#include <algorithm>

namespace tautring {

PowerSeries::PowerSeries(std::vector<Rational> coefficients, int order)
    : coeffs_(std::move(coefficients)), order_(order) {
  if (order < 0) throw UsageError("power series: negative truncation order");
  if (int(coeffs_.size()) > order + 1) coeffs_.resize(std::size_t(order) + 1);
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PowerSeries PowerSeries::constant(const Rational& c, int order) { return PowerSeries({c}, order); }

Rational PowerSeries::operator[](int i) const {
  if (i < 0 || i > order_) throw UsageError("power series: index beyond truncation order");
  return std::size_t(i) < coeffs_.size() ? coeffs_[std::size_t(i)] : Rational(0);
}

PowerSeries PowerSeries::truncate(int order) const { return PowerSeries(coeffs_, std::min(order, order_)); }

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  int n = std::min(a.order_, b.order_);
  std::vector<Rational> c(std::size_t(n) + 1);
  for (int i = 0; i <= n; ++i) c[std::size_t(i)] = a[i] + b[i];
  return PowerSeries(std::move(c), n);
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  int n = std::min(a.order_, b.order_);
  std::vector<Rational> c(std::size_t(n) + 1);
  for (int i = 0; i <= n; ++i) c[std::size_t(i)] = a[i] - b[i];
  return PowerSeries(std::move(c), n);
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  int n = std::min(a.order_, b.order_);
  std::vector<Rational> c(std::size_t(n) + 1);
  for (std::size_t i = 0; i < a.coeffs_.size() && int(i) <= n; ++i)
    for (std::size_t j = 0; j < b.coeffs_.size() && int(i + j) <= n; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return PowerSeries(std::move(c), n);
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
  if (b[0] == 0) throw UsageError("power series division: divisor has zero constant term");
  int n = std::min(a.order_, b.order_);
  std::vector<Rational> q(std::size_t(n) + 1);
  Rational inv = 1 / b[0];
  for (int i = 0; i <= n; ++i) {
    Rational acc = a[i];
    for (int j = 1; j <= i; ++j) acc -= b[j] * q[std::size_t(i - j)];
    q[std::size_t(i)] = acc * inv;
  }
  return PowerSeries(std::move(q), n);
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
  return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

PowerSeries series_log(const PowerSeries& s) {
  if (s[0] != 1) throw UsageError("series_log: constant term must be 1");
  const int n = s.order();
  // log s = integral of s'/s
  std::vector<Rational> deriv(std::size_t(std::max(n, 1)));
  for (int i = 1; i <= n; ++i) deriv[std::size_t(i - 1)] = s[i] * i;
  PowerSeries ratio = PowerSeries(deriv, std::max(n - 1, 0)) / s.truncate(std::max(n - 1, 0));
  std::vector<Rational> out(std::size_t(n) + 1);
  for (int i = 1; i <= n; ++i) out[std::size_t(i)] = ratio[i - 1] / i;
  return PowerSeries(std::move(out), n);
}

PowerSeries series_exp(const PowerSeries& s) {
  if (s[0] != 0) throw UsageError("series_exp: constant term must be 0");
  const int n = s.order();
  // E' = s' E  =>  n e_n = sum_{k=1}^{n} k s_k e_{n-k}
  std::vector<Rational> e(std::size_t(n) + 1);
  e[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (int k = 1; k <= m; ++k) acc += s[k] * k * e[std::size_t(m - k)];
    e[std::size_t(m)] = acc / m;
  }
  return PowerSeries(std::move(e), n);
}

}  // namespace tautring
