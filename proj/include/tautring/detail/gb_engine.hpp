#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tautring/detail/packed_monomial.hpp"
#include "tautring/rational.hpp"

namespace tautring::detail {

// A coefficient domain tells the engine how to clear leading terms.
// Reducing f by g at a term with coefficient cf against lc(g) = cg uses
// factors (a, b) = reduction_factors(cf, cg) and forms a*f - b*q*g.

/// Z/p for a prime p < 2^31. Polynomials are kept monic.
struct PrimeField {
  using Coeff = std::uint32_t;
  std::uint32_t p;

  std::vector<Coeff> convert(const std::vector<Rational>& qs) const {
    std::vector<Coeff> out;
    out.reserve(qs.size());
    for (const auto& q : qs) {
      Integer n = q.get_num() % p, d = q.get_den() % p;
      if (n < 0) n += p;
      if (d == 0) throw UsageError("prime " + std::to_string(p) + " divides a denominator");
      out.push_back(mul(Coeff(n.get_ui()), inv(Coeff(d.get_ui()))));
    }
    return out;
  }
  /// Coefficients of the monic associate, as canonical representatives.
  std::vector<Rational> to_rationals(const std::vector<Coeff>& cs) const {
    std::vector<Rational> out;
    for (auto c : cs) out.emplace_back(c);
    return out;
  }
  static bool is_zero(Coeff c) { return c == 0; }
  static std::size_t bits(Coeff) { return 1; }
  static bool is_one(Coeff c) { return c == 1; }
  std::pair<Coeff, Coeff> reduction_factors(Coeff cf, Coeff cg) const { return {1, mul(cf, inv(cg))}; }
  Coeff scale(Coeff a, Coeff x) const { return mul(a, x); }
  Coeff neg_scale(Coeff b, Coeff y) const { return Coeff((p - std::uint64_t(b) * y % p) % p); }
  /// a*x - b*y
  Coeff combine(Coeff a, Coeff x, Coeff b, Coeff y) const {
    std::uint64_t l = std::uint64_t(a) * x % p, r = std::uint64_t(b) * y % p;
    return Coeff((l + p - r) % p);
  }
  void normalize(std::vector<Coeff>& cs) const {
    if (cs.empty() || cs.front() == 1) return;
    Coeff i = inv(cs.front());
    for (auto& c : cs) c = mul(c, i);
  }

  Coeff mul(Coeff a, Coeff b) const { return Coeff(std::uint64_t(a) * b % p); }
  Coeff inv(Coeff a) const {
    // a^(p-2)
    std::uint64_t r = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return Coeff(r);
  }
};

/// Q, carried as primitive integer polynomials with positive leading
/// coefficient (fraction-free reduction, content removed after each
/// normal form).
struct IntegerFractionFree {
  using Coeff = Integer;

  std::vector<Coeff> convert(const std::vector<Rational>& qs) const {
    Integer den = 1;
    for (const auto& q : qs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Coeff> out;
    out.reserve(qs.size());
    for (const auto& q : qs) out.push_back(q.get_num() * (den / q.get_den()));
    normalize(out);
    return out;
  }
  std::vector<Rational> to_rationals(const std::vector<Coeff>& cs) const {
    std::vector<Rational> out;
    if (cs.empty()) return out;
    for (const auto& c : cs) out.push_back(make_rational(c, cs.front()));
    return out;
  }
  static bool is_zero(const Coeff& c) { return sgn(c) == 0; }
  static bool is_one(const Coeff& c) { return c == 1; }
  static std::size_t bits(const Coeff& c) { return mpz_sizeinbase(c.get_mpz_t(), 2); }
  std::pair<Coeff, Coeff> reduction_factors(const Coeff& cf, const Coeff& cg) const {
    Integer g;
    mpz_gcd(g.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    Integer a = cg / g, b = cf / g;
    if (a < 0) {
      a = -a;
      b = -b;
    }
    return {a, b};
  }
  Coeff scale(const Coeff& a, const Coeff& x) const { return a * x; }
  Coeff neg_scale(const Coeff& b, const Coeff& y) const { return -(b * y); }
  Coeff combine(const Coeff& a, const Coeff& x, const Coeff& b, const Coeff& y) const {
    Integer r = a * x;
    mpz_submul(r.get_mpz_t(), b.get_mpz_t(), y.get_mpz_t());
    return r;
  }
  void normalize(std::vector<Coeff>& cs) const {
    if (cs.empty()) return;
    Integer g = 0;
    for (const auto& c : cs) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) break;
    }
    if (sgn(cs.front()) < 0) g = -g;
    if (g == 1) return;
    for (auto& c : cs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
};

/// Q with exact rational coefficients, polynomials kept monic. Used for
/// plain division where the exact multiple matters.
struct RationalField {
  using Coeff = Rational;

  std::vector<Coeff> convert(const std::vector<Rational>& qs) const { return qs; }
  std::vector<Rational> to_rationals(const std::vector<Coeff>& cs) const { return cs; }
  static bool is_zero(const Coeff& c) { return sgn(c) == 0; }
  static bool is_one(const Coeff& c) { return c == 1; }
  static std::size_t bits(const Coeff&) { return 1; }
  std::pair<Coeff, Coeff> reduction_factors(const Coeff& cf, const Coeff& cg) const { return {1, cf / cg}; }
  Coeff scale(const Coeff& a, const Coeff& x) const { return a * x; }
  Coeff neg_scale(const Coeff& b, const Coeff& y) const { return -(b * y); }
  Coeff combine(const Coeff& a, const Coeff& x, const Coeff& b, const Coeff& y) const { return a * x - b * y; }
  void normalize(std::vector<Coeff>& cs) const {
    if (cs.empty() || cs.front() == 1) return;
    Coeff i = 1 / cs.front();
    for (auto& c : cs) c *= i;
  }
};

struct Timeout {};

/// Buchberger's algorithm over a coefficient domain. Polynomials are sorted
/// descending and kept normalized (monic or primitive); pairs are selected
/// by sugar and pruned with the Gebauer-Moeller update.
template <class Domain>
class BuchbergerEngine {
 public:
  using Coeff = typename Domain::Coeff;
  using Clock = std::chrono::steady_clock;

  struct Poly {
    std::vector<PackedMonomial> mon;
    std::vector<Coeff> coef;
    int sugar = 0;

    bool empty() const { return mon.empty(); }
    std::size_t size() const { return mon.size(); }
  };

  struct Stats {
    std::size_t pairs_considered = 0;
    std::size_t pairs_reduced = 0;
    std::size_t zero_reductions = 0;
    std::size_t basis_size_peak = 0;
  };

  /// `grading[v]` is the degree of variable v; packed monomials handed to
  /// the engine must carry degrees under it. With `tail_reduce` unset the
  /// main loop only clears leading terms and tails are reduced once at the
  /// end.
  BuchbergerEngine(Domain domain, std::vector<int> grading, std::optional<Clock::time_point> deadline,
                   bool tail_reduce = false)
      : domain_(std::move(domain)), grading_(std::move(grading)), deadline_(deadline), tail_reduce_(tail_reduce) {}

  /// Queues a generator; terms may come in any order.
  void add_generator(Poly f) {
    sort_terms(f);
    if (f.empty()) return;
    f.sugar = 0;
    for (auto& m : f.mon) f.sugar = std::max(f.sugar, m.deg);
    domain_.normalize(f.coef);
    pending_.push_back(std::move(f));
  }

  /// Makes f available as a reducer without generating pairs. Used for
  /// plain division.
  void add_reducer(Poly f) {
    sort_terms(f);
    if (f.empty()) return;
    domain_.normalize(f.coef);
    basis_.push_back(std::move(f));
    active_.push_back(basis_.size() - 1);
    active_lead_.push_back(basis_.back().mon.front());
  }

  void run() {
    // Generators go through the same reduce-then-update path as
    // S-polynomials, lowest sugar first.
    std::stable_sort(pending_.begin(), pending_.end(), [](const Poly& a, const Poly& b) {
      return a.sugar != b.sugar ? a.sugar < b.sugar : compare(a.mon.front(), b.mon.front()) < 0;
    });
    for (auto& f : pending_) {
      if (unit_) break;
      insert(reduce(std::move(f), std::nullopt, tail_reduce_));
    }
    pending_.clear();
    while (!pairs_.empty() && !unit_) {
      auto pair = select_pair();
      ++stats_.pairs_reduced;
      auto h = reduce(s_poly(pair.i, pair.j), std::nullopt, tail_reduce_);
      if (h.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      insert(std::move(h));
    }
  }

  /// Reduced basis: minimal, tail-reduced, normalized, ascending by leading
  /// monomial.
  std::vector<Poly> reduced_basis() {
    if (unit_) {
      Poly one;
      one.mon.push_back(PackedMonomial{});
      one.coef.push_back(Coeff(1));
      return {one};
    }
    std::vector<std::size_t> idx = active_;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return compare(basis_[a].mon.front(), basis_[b].mon.front()) < 0; });
    // Ascending order: every reducer of a tail term has a smaller leading
    // monomial, so reducing in this order lets later elements use the
    // already tail-reduced earlier ones.
    for (std::size_t k : idx) {
      basis_[k] = reduce(std::move(basis_[k]), k, true, true);
      active_lead_[position_in_active(k)] = basis_[k].mon.front();
    }
    std::vector<Poly> out;
    for (std::size_t k : idx) out.push_back(basis_[k]);
    return out;
  }

  /// Normal form of f against the active basis (skipping one element if
  /// asked). With `full` unset only leading terms are cleared. With
  /// `keep_lead` the first term is never reduced. The result is normalized
  /// when `normalize` is set, otherwise returned up to a scalar factor.
  Poly reduce(Poly f, std::optional<std::size_t> skip, bool full, bool keep_lead = false, bool normalize = true) {
    Poly result;
    result.sugar = f.sugar;
    std::size_t idx = 0;
    Poly tmp;
    if (keep_lead && !f.empty()) {
      result.mon.push_back(f.mon[0]);
      result.coef.push_back(std::move(f.coef[0]));
      idx = 1;
    }
    while (idx < f.size()) {
      if ((++ticks_ & 0x3f) == 0) check_deadline();
      const PackedMonomial m = f.mon[idx];
      std::size_t r = find_reducer(m, skip);
      if (r == npos) {
        if (!full) {
          // Leading term is irreducible: keep the rest as it is.
          for (; idx < f.size(); ++idx) {
            result.mon.push_back(f.mon[idx]);
            result.coef.push_back(std::move(f.coef[idx]));
          }
          break;
        }
        result.mon.push_back(m);
        result.coef.push_back(std::move(f.coef[idx]));
        ++idx;
        continue;
      }
      const Poly& g = basis_[r];
      const PackedMonomial q = quotient(m, g.mon.front());
      auto [a, b] = domain_.reduction_factors(f.coef[idx], g.coef.front());
      const bool scale_f = !Domain::is_one(a);
      if (scale_f)
        for (auto& c : result.coef) c = domain_.scale(a, c);
      // f <- a * f[idx+1..] - b * q * g[1..]
      tmp.mon.clear();
      tmp.coef.clear();
      tmp.mon.reserve(f.size() - idx + g.size());
      tmp.coef.reserve(f.size() - idx + g.size());
      std::size_t i = idx + 1, j = 1;
      while (i < f.size() && j < g.size()) {
        PackedMonomial gm = g.mon[j] * q;
        int cmp = compare(f.mon[i], gm);
        if (cmp > 0) {
          tmp.mon.push_back(f.mon[i]);
          tmp.coef.push_back(scale_f ? domain_.scale(a, f.coef[i]) : std::move(f.coef[i]));
          ++i;
        } else if (cmp < 0) {
          tmp.mon.push_back(gm);
          tmp.coef.push_back(domain_.neg_scale(b, g.coef[j]));
          ++j;
        } else {
          Coeff v = domain_.combine(a, f.coef[i], b, g.coef[j]);
          if (!Domain::is_zero(v)) {
            tmp.mon.push_back(gm);
            tmp.coef.push_back(std::move(v));
          }
          ++i;
          ++j;
        }
      }
      for (; i < f.size(); ++i) {
        tmp.mon.push_back(f.mon[i]);
        tmp.coef.push_back(scale_f ? domain_.scale(a, f.coef[i]) : std::move(f.coef[i]));
      }
      for (; j < g.size(); ++j) {
        tmp.mon.push_back(g.mon[j] * q);
        tmp.coef.push_back(domain_.neg_scale(b, g.coef[j]));
      }
      result.sugar = std::max(result.sugar, g.sugar + q.deg);
      std::swap(f.mon, tmp.mon);
      std::swap(f.coef, tmp.coef);
      idx = 0;
    }
    if (normalize) domain_.normalize(result.coef);
    return result;
  }

  const Stats& stats() const { return stats_; }
  const Domain& domain() const { return domain_; }

  static void sort_terms(Poly& f) {
    std::vector<std::size_t> order(f.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return compare(f.mon[a], f.mon[b]) > 0; });
    Poly s;
    s.sugar = f.sugar;
    for (auto i : order) {
      s.mon.push_back(f.mon[i]);
      s.coef.push_back(std::move(f.coef[i]));
    }
    f = std::move(s);
  }

  int degree(const PackedMonomial& m) const {
    int d = 0;
    for (std::size_t v = 0; v < grading_.size(); ++v) d += m.exponent(int(v)) * grading_[v];
    return d;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  struct Pair {
    std::size_t i, j;
    PackedMonomial lcm;
    int sugar;
  };

  void check_deadline() const {
    if (deadline_ && Clock::now() > *deadline_) throw Timeout{};
  }

  std::size_t position_in_active(std::size_t k) const {
    return std::size_t(std::find(active_.begin(), active_.end(), k) - active_.begin());
  }

  std::size_t find_reducer(const PackedMonomial& m, std::optional<std::size_t> skip) const {
    std::size_t best = npos;
    for (std::size_t k = 0; k < active_.size(); ++k) {
      if (active_lead_[k].deg > m.deg || !divides(active_lead_[k], m)) continue;
      std::size_t r = active_[k];
      if (skip && *skip == r) continue;
      if (best == npos || cost(r) < cost(best)) best = r;
    }
    return best;
  }

  /// Reducers are chosen by total coefficient size.
  std::size_t cost(std::size_t r) const {
    std::size_t c = 0;
    for (const auto& x : basis_[r].coef) c += Domain::bits(x);
    return c;
  }

  PackedMonomial lcm_of(const PackedMonomial& a, const PackedMonomial& b) const {
    PackedMonomial l = lcm_exponents(a, b);
    l.deg = degree(l);
    return l;
  }

  Poly s_poly(std::size_t fi, std::size_t gi) {
    const Poly& f = basis_[fi];
    const Poly& g = basis_[gi];
    PackedMonomial l = lcm_of(f.mon.front(), g.mon.front());
    PackedMonomial qf = quotient(l, f.mon.front()), qg = quotient(l, g.mon.front());
    // a*qf*f - b*qg*g with a*lc(f) = b*lc(g)
    auto [a, b] = domain_.reduction_factors(g.coef.front(), f.coef.front());
    std::swap(a, b);
    Poly s;
    s.sugar = std::max(f.sugar + qf.deg, g.sugar + qg.deg);
    std::size_t i = 1, j = 1;
    while (i < f.size() && j < g.size()) {
      PackedMonomial fm = f.mon[i] * qf, gm = g.mon[j] * qg;
      int cmp = compare(fm, gm);
      if (cmp > 0) {
        s.mon.push_back(fm);
        s.coef.push_back(domain_.scale(a, f.coef[i++]));
      } else if (cmp < 0) {
        s.mon.push_back(gm);
        s.coef.push_back(domain_.neg_scale(b, g.coef[j++]));
      } else {
        Coeff v = domain_.combine(a, f.coef[i], b, g.coef[j]);
        if (!Domain::is_zero(v)) {
          s.mon.push_back(fm);
          s.coef.push_back(std::move(v));
        }
        ++i;
        ++j;
      }
    }
    for (; i < f.size(); ++i) {
      s.mon.push_back(f.mon[i] * qf);
      s.coef.push_back(domain_.scale(a, f.coef[i]));
    }
    for (; j < g.size(); ++j) {
      s.mon.push_back(g.mon[j] * qg);
      s.coef.push_back(domain_.neg_scale(b, g.coef[j]));
    }
    domain_.normalize(s.coef);
    return s;
  }

  Pair select_pair() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& p = pairs_[k];
      const auto& q = pairs_[best];
      if (p.sugar != q.sugar) {
        if (p.sugar < q.sugar) best = k;
        continue;
      }
      int c = compare(p.lcm, q.lcm);
      if (c < 0 || (c == 0 && std::pair(p.i, p.j) < std::pair(q.i, q.j))) best = k;
    }
    Pair p = pairs_[best];
    pairs_.erase(pairs_.begin() + long(best));
    return p;
  }

  /// Gebauer-Moeller update for a new h whose leading term is irreducible
  /// by the active basis.
  void insert(Poly h) {
    if (h.empty()) return;
    if (h.mon.front().is_one()) {
      unit_ = true;
      pairs_.clear();
      return;
    }
    const std::size_t hi = basis_.size();
    basis_.push_back(std::move(h));
    const PackedMonomial lh = basis_[hi].mon.front();

    std::vector<Pair> cand;
    for (std::size_t g : active_) {
      const PackedMonomial& lg = basis_[g].mon.front();
      Pair p{g, hi, lcm_of(lg, lh), 0};
      PackedMonomial qg = quotient(p.lcm, lg), qh = quotient(p.lcm, lh);
      p.sugar = std::max(basis_[g].sugar + qg.deg, basis_[hi].sugar + qh.deg);
      cand.push_back(p);
    }
    stats_.pairs_considered += cand.size();

    // Chain criterion among the new pairs; coprime pairs survive this step
    // so that they can still eliminate others, then go.
    std::vector<Pair> kept;
    for (std::size_t k = 0; k < cand.size(); ++k) {
      const Pair& p = cand[k];
      bool redundant = false;
      if (!coprime(basis_[p.i].mon.front(), lh)) {
        for (std::size_t m = k + 1; m < cand.size() && !redundant; ++m) redundant = divides(cand[m].lcm, p.lcm);
        for (std::size_t m = 0; m < kept.size() && !redundant; ++m) redundant = divides(kept[m].lcm, p.lcm);
      }
      if (!redundant) kept.push_back(p);
    }
    std::vector<Pair> fresh;
    for (auto& p : kept)
      if (!coprime(basis_[p.i].mon.front(), lh)) fresh.push_back(p);

    // Old pairs made redundant by h.
    std::vector<Pair> old;
    old.reserve(pairs_.size() + fresh.size());
    for (auto& p : pairs_) {
      bool drop = false;
      if (divides(lh, p.lcm)) {
        PackedMonomial l1 = lcm_of(basis_[p.i].mon.front(), lh);
        PackedMonomial l2 = lcm_of(basis_[p.j].mon.front(), lh);
        drop = !(l1 == p.lcm) && !(l2 == p.lcm);
      }
      if (!drop) old.push_back(p);
    }
    pairs_ = std::move(old);
    pairs_.insert(pairs_.end(), fresh.begin(), fresh.end());

    std::vector<std::size_t> still;
    for (std::size_t g : active_)
      if (!divides(lh, basis_[g].mon.front())) still.push_back(g);
    still.push_back(hi);
    active_ = std::move(still);
    active_lead_.clear();
    for (std::size_t g : active_) active_lead_.push_back(basis_[g].mon.front());
    stats_.basis_size_peak = std::max(stats_.basis_size_peak, active_.size());
  }

  Domain domain_;
  std::vector<int> grading_;
  std::optional<Clock::time_point> deadline_;
  bool tail_reduce_;
  std::vector<Poly> pending_;
  std::vector<Poly> basis_;
  std::vector<std::size_t> active_;
  std::vector<PackedMonomial> active_lead_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
  std::size_t ticks_ = 0;
  Stats stats_;
};

}  // namespace tautring::detail
