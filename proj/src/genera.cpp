#include "tautring/genera.hpp"

namespace tautring {

CharacteristicSeries::CharacteristicSeries(PowerSeries q) : q_(std::move(q)) {
  if (q_[0] != 1) throw UsageError("characteristic series must have constant term 1");
}

namespace {

// Even series in u: returns c_{2k} * scale^k as the coefficient of z^k.
PowerSeries even_part_in_z(const PowerSeries& in_u, int n, const Rational& scale) {
  std::vector<Rational> c(std::size_t(n) + 1);
  Rational s = 1;
  for (int k = 0; k <= n; ++k) {
    c[std::size_t(k)] = in_u[2 * k] * s;
    s *= scale;
  }
  return PowerSeries(std::move(c), n);
}

// cosh(u) and sinh(u)/u through u^{2n+1}, from the exponential series.
std::pair<PowerSeries, PowerSeries> cosh_and_sinhc(int n) {
  const int order = 2 * n + 1;
  std::vector<Rational> ch(std::size_t(order) + 1), shc(std::size_t(order) + 1);
  Integer fact = 1;  // (2k)!
  for (int k = 0; 2 * k <= order; ++k) {
    if (k > 0) fact *= Integer(2 * k - 1) * Integer(2 * k);
    ch[std::size_t(2 * k)] = Rational(1) / Rational(fact);
    shc[std::size_t(2 * k)] = Rational(1) / Rational(fact * (2 * k + 1));
  }
  return {PowerSeries(std::move(ch), order), PowerSeries(std::move(shc), order)};
}

}  // namespace

CharacteristicSeries char_series_L(int n) {
  if (n < 0) throw UsageError("char_series_L: negative order");
  auto [ch, shc] = cosh_and_sinhc(n);
  // u cosh u / sinh u = cosh u / (sinh u / u)
  return CharacteristicSeries(even_part_in_z(ch / shc, n, Rational(1)));
}

CharacteristicSeries char_series_Ahat(int n) {
  if (n < 0) throw UsageError("char_series_Ahat: negative order");
  auto [ch, shc] = cosh_and_sinhc(n);
  // v / sinh v with v = sqrt(z)/2, so v^{2k} = z^k / 4^k
  auto one = PowerSeries::constant(1, shc.order());
  return CharacteristicSeries(even_part_in_z(one / shc, n, Rational(1, 4)));
}

GenusKind parse_genus_kind(std::string_view text) {
  if (text == "L") return GenusKind::L;
  if (text == "Ahat" || text == "A") return GenusKind::Ahat;
  throw UsageError("unknown genus '" + std::string(text) + "' (expected L or Ahat)");
}

CharacteristicSeries char_series(GenusKind kind, int n) {
  return kind == GenusKind::L ? char_series_L(n) : char_series_Ahat(n);
}

Polynomial MultiplicativeSequence::total() const {
  Polynomial sum(ring);
  for (const auto& k : K) sum = sum + k;
  return sum;
}

std::vector<Polynomial> power_sums(const RingPtr& ring, int n) {
  std::vector<Polynomial> s;
  s.reserve(std::size_t(n) + 1);
  s.push_back(Polynomial::constant(ring, 0));
  for (int j = 1; j <= n; ++j) {
    // s_j = sum_{i=1}^{j-1} (-1)^{i-1} p_i s_{j-i} + (-1)^{j-1} j p_j
    Polynomial acc = Polynomial::variable(ring, std::size_t(j - 1)) * Rational(j % 2 ? j : -j);
    for (int i = 1; i < j; ++i) {
      Polynomial t = Polynomial::variable(ring, std::size_t(i - 1)) * s[std::size_t(j - i)];
      acc = i % 2 ? acc + t : acc - t;
    }
    s.push_back(std::move(acc));
  }
  return s;
}

MultiplicativeSequence multiplicative_sequence(const CharacteristicSeries& q, int n) {
  if (n < 0) throw UsageError("multiplicative_sequence: negative length");
  MultiplicativeSequence seq;
  seq.ring = pontryagin_ring(n);
  const auto& ring = seq.ring;
  auto logq = series_log(q.series().truncate(n));
  auto s = power_sums(ring, n);

  Polynomial exponent(ring);
  for (int j = 1; j <= n; ++j)
    if (logq[j] != 0) exponent = exponent + s[std::size_t(j)] * logq[j];

  // exp(exponent) truncated above degree n; exponent has no degree-0 part.
  Polynomial total = Polynomial::constant(ring, 1);
  Polynomial power = Polynomial::constant(ring, 1);
  for (int m = 1; m <= n; ++m) {
    power = truncated_mul(power, exponent, n) * Rational(1, m);
    if (power.is_zero()) break;
    total = total + power;
  }
  for (int k = 0; k <= n; ++k) seq.K.push_back(homogeneous_part(total, k));
  return seq;
}

}  // namespace tautring
