#include <gtest/gtest.h>

#include <random>

#include "tautring/genera.hpp"

using namespace tautring;

namespace {

PowerSeries S(std::vector<int> num, std::vector<int> den, int order) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < num.size(); ++i) c.push_back(make_rational(num[i], den[i]));
  return PowerSeries(c, order);
}

Rational evaluate(const Polynomial& p, const std::map<std::string, Rational>& at) {
  auto v = substitute(p, at);
  EXPECT_TRUE(v.is_constant());
  return v.constant_term();
}

void enumerate_partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    enumerate_partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

// K_n through n formal roots: expand prod Q(x_i), take the degree-n part and
// write it in the elementary symmetric polynomials e_j(x) by solving a
// linear system over the monomials of Q[x_1..x_n].
Polynomial roots_oracle(const CharacteristicSeries& q, int n, const RingPtr& pring) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  auto xr = make_ring(names, std::vector<int>(n, 1));
  Polynomial prod = Polynomial::constant(xr, 1);
  for (int i = 0; i < n; ++i) {
    Polynomial factor(xr);
    auto x = Polynomial::variable(xr, std::size_t(i));
    for (int k = 0; k <= n; ++k) factor = factor + x.pow(k) * q[k];
    prod = truncated_mul(prod, factor, n);
  }
  Polynomial target = homogeneous_part(prod, n);

  std::vector<Polynomial> e(n + 1, Polynomial(xr));
  e[0] = Polynomial::constant(xr, 1);
  for (int i = 0; i < n; ++i) {
    auto x = Polynomial::variable(xr, std::size_t(i));
    for (int j = i + 1; j >= 1; --j) e[j] = e[j] + e[j - 1] * x;
  }
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  enumerate_partitions(n, n, cur, parts);
  std::vector<Polynomial> images;
  for (const auto& part : parts) {
    Polynomial m = Polynomial::constant(xr, 1);
    for (int j : part) m = m * e[j];
    images.push_back(m);
  }

  // Columns: partitions; rows: monomials of x.
  std::vector<Monomial> rows;
  auto row_of = [&](const Monomial& m) {
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i] == m) return i;
    rows.push_back(m);
    return rows.size() - 1;
  };
  const std::size_t cols = parts.size();
  std::vector<std::vector<Rational>> a;
  auto put = [&](const Polynomial& p, std::size_t col) {
    for (const auto& t : p.terms()) {
      std::size_t r = row_of(t.mono);
      if (a.size() <= r) a.resize(r + 1, std::vector<Rational>(cols + 1, 0));
      a[r][col] = t.coeff;
    }
  };
  for (std::size_t c = 0; c < cols; ++c) put(images[c], c);
  put(target, cols);
  for (auto& row : a) row.resize(cols + 1, 0);

  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k <= cols; ++k) a[r][k] -= f * a[rank][k];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  EXPECT_EQ(rank, cols);
  for (std::size_t r = rank; r < a.size(); ++r) EXPECT_EQ(a[r][cols], 0);

  Polynomial out(pring);
  for (std::size_t r = 0; r < rank; ++r) {
    Polynomial m = Polynomial::constant(pring, a[r][cols] / a[r][pivot_col[r]]);
    for (int j : parts[pivot_col[r]]) m = m * Polynomial::variable(pring, "p" + std::to_string(j));
    out = out + m;
  }
  return out;
}

}  // namespace

TEST(PowerSeries, LogExpInverse) {
  auto s = S({1, 1}, {1, 1}, 8);
  EXPECT_EQ(series_exp(series_log(s)), s);
  auto t = S({0, 2, -3, 0, 5}, {1, 3, 7, 1, 2}, 6);
  EXPECT_EQ(series_log(series_exp(t)), t);
}

TEST(PowerSeries, GeometricInverse) {
  std::vector<Rational> alt;
  for (int i = 0; i <= 10; ++i) alt.push_back(i % 2 ? -1 : 1);
  auto prod = S({1, 1}, {1, 1}, 10) * PowerSeries(alt, 10);
  EXPECT_EQ(prod, PowerSeries::constant(1, 10));
  EXPECT_EQ(PowerSeries::constant(1, 10) / S({1, 1}, {1, 1}, 10), PowerSeries(alt, 10));
}

TEST(PowerSeries, LogExample) {
  auto l = series_log(S({1, 1, -1}, {1, 3, 45}, 2));
  EXPECT_EQ(l[0], 0);
  EXPECT_EQ(l[1], make_rational(1, 3));
  EXPECT_EQ(l[2], make_rational(-7, 90));
}

TEST(PowerSeries, TruncatesAtSmallerOrder) {
  auto a = S({1, 1, 1, 1}, {1, 1, 1, 1}, 3), b = S({1, 2}, {1, 1}, 1);
  EXPECT_EQ((a * b).order(), 1);
  EXPECT_EQ((a + b).order(), 1);
  EXPECT_THROW(a[4], UsageError);
}

TEST(PowerSeries, Preconditions) {
  EXPECT_THROW(series_log(S({2, 1}, {1, 1}, 3)), UsageError);
  EXPECT_THROW(series_exp(S({1, 1}, {1, 1}, 3)), UsageError);
  EXPECT_THROW(S({1}, {1}, 3) / S({0, 1}, {1, 1}, 3), UsageError);
}

TEST(CharacteristicSeries, LCoefficients) {
  auto q = char_series_L(4);
  EXPECT_EQ(q[0], 1);
  EXPECT_EQ(q[1], make_rational(1, 3));
  EXPECT_EQ(q[2], make_rational(-1, 45));
  EXPECT_EQ(q[3], make_rational(2, 945));
}

TEST(CharacteristicSeries, AhatCoefficients) {
  auto q = char_series_Ahat(3);
  EXPECT_EQ(q[0], 1);
  EXPECT_EQ(q[1], make_rational(-1, 24));
  EXPECT_EQ(q[2], make_rational(7, 5760));
}

TEST(CharacteristicSeries, RequiresUnitConstant) {
  EXPECT_THROW(CharacteristicSeries(PowerSeries({2}, 3)), UsageError);
  EXPECT_EQ(parse_genus_kind("Ahat"), GenusKind::Ahat);
  EXPECT_EQ(parse_genus_kind("L"), GenusKind::L);
  EXPECT_THROW(parse_genus_kind("Todd"), UsageError);
}

TEST(MultiplicativeSequence, LowDegreeL) {
  auto seq = multiplicative_sequence(char_series_L(3), 3);
  auto r = seq.ring;
  EXPECT_EQ(seq.K[0], Polynomial::constant(r, 1));
  EXPECT_EQ(seq.K[1], parse_polynomial("1/3*p1", r));
  EXPECT_EQ(seq.K[2], parse_polynomial("7/45*p2 - 1/45*p1^2", r));
  EXPECT_EQ(seq.K[3], parse_polynomial("62/945*p3 - 13/945*p1*p2 + 2/945*p1^3", r));
}

TEST(MultiplicativeSequence, LowDegreeAhat) {
  auto seq = multiplicative_sequence(char_series_Ahat(2), 2);
  auto r = seq.ring;
  EXPECT_EQ(seq.K[1], parse_polynomial("-1/24*p1", r));
  EXPECT_EQ(seq.K[2], parse_polynomial("-4/5760*p2 + 7/5760*p1^2", r));
}

TEST(MultiplicativeSequence, AgreesWithFormalRoots) {
  for (auto kind : {GenusKind::L, GenusKind::Ahat}) {
    auto q = char_series(kind, 4);
    auto seq = multiplicative_sequence(q, 4);
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(seq.K[n], roots_oracle(q, n, seq.ring)) << "n = " << n;
  }
}

TEST(MultiplicativeSequence, TrivialSeries) {
  auto seq = multiplicative_sequence(CharacteristicSeries(PowerSeries::constant(1, 5)), 5);
  for (int n = 1; n <= 5; ++n) EXPECT_TRUE(seq.K[n].is_zero());
  EXPECT_EQ(multiplicative_sequence(char_series_L(0), 0).K.size(), 1u);
}

TEST(MultiplicativeSequence, HomogeneousAndSupported) {
  for (auto kind : {GenusKind::L, GenusKind::Ahat}) {
    auto seq = multiplicative_sequence(char_series(kind, 10), 10);
    for (int n = 1; n <= 10; ++n) {
      auto d = weighted_degree(seq.K[n]);
      ASSERT_TRUE(d.homogeneous()) << n;
      EXPECT_EQ(d.degree, n);
      for (std::size_t v = std::size_t(n); v < seq.ring->size(); ++v) EXPECT_FALSE(seq.K[n].uses_variable(v));
    }
  }
}

TEST(MultiplicativeSequence, PowerSumsNewton) {
  auto ring = pontryagin_ring(3);
  auto s = power_sums(ring, 3);
  EXPECT_EQ(s[1], parse_polynomial("p1", ring));
  EXPECT_EQ(s[2], parse_polynomial("p1^2 - 2*p2", ring));
  EXPECT_EQ(s[3], parse_polynomial("p1^3 - 3*p1*p2 + 3*p3", ring));
}

// K(p * q) = K(p) K(q) for the Whitney product of total classes,
// evaluated at random integer points degree by degree.
TEST(MultiplicativeSequence, WhitneyMultiplicativity) {
  constexpr int kN = 6;
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> val(-5, 5);
  for (auto kind : {GenusKind::L, GenusKind::Ahat}) {
    auto seq = multiplicative_sequence(char_series(kind, kN), kN);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Rational> p(kN + 1), q(kN + 1), r(kN + 1, 0);
      p[0] = q[0] = 1;
      for (int i = 1; i <= kN; ++i) {
        p[i] = val(rng);
        q[i] = val(rng);
      }
      for (int i = 0; i <= kN; ++i)
        for (int j = 0; i + j <= kN; ++j) r[i + j] += p[i] * q[j];
      auto at = [&](const std::vector<Rational>& v) {
        std::map<std::string, Rational> m;
        for (int i = 1; i <= kN; ++i) m["p" + std::to_string(i)] = v[i];
        return m;
      };
      auto mp = at(p), mq = at(q), mr = at(r);
      for (int n = 1; n <= kN; ++n) {
        Rational rhs = 0;
        for (int a = 0; a <= n; ++a) rhs += evaluate(seq.K[a], mp) * evaluate(seq.K[n - a], mq);
        ASSERT_EQ(evaluate(seq.K[n], mr), rhs) << "trial " << trial << " degree " << n;
      }
    }
  }
}
