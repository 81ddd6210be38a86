#pragma once

#include <vector>

#include "tautring/rational.hpp"

namespace tautring {

/// Truncated formal power series sum_{i<=N} c_i t^i with exact coefficients.
/// Binary operations truncate at the smaller of the two orders.
class PowerSeries {
 public:
  PowerSeries(std::vector<Rational> coefficients, int order);

  /// The constant series c + O(t^{order+1}).
  static PowerSeries constant(const Rational& c, int order);

  int order() const { return order_; }
  /// Coefficient of t^i, zero past the stored length. Requires i <= order().
  Rational operator[](int i) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  PowerSeries truncate(int order) const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  /// Requires b[0] != 0.
  friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b);

 private:
  std::vector<Rational> coeffs_;
  int order_;
};

/// Requires s[0] == 1.
PowerSeries series_log(const PowerSeries& s);
/// Requires s[0] == 0.
PowerSeries series_exp(const PowerSeries& s);

}  // namespace tautring
