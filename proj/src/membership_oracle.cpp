#include <algorithm>
#include <map>

#include "tautring/groebner.hpp"

namespace tautring {

namespace {

int total_degree(const Monomial& m) {
  int d = 0;
  for (auto e : m.exp) d += e;
  return d;
}

int max_total_degree(const Polynomial& p) {
  int d = 0;
  for (const auto& t : p.terms()) d = std::max(d, total_degree(t.mono));
  return d;
}

void monomials_up_to(std::size_t nvars, int bound, std::size_t var, Monomial& cur, int used, std::vector<Monomial>& out) {
  if (var == nvars) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; used + e <= bound; ++e) {
    cur.exp[var] = std::int16_t(e);
    monomials_up_to(nvars, bound, var + 1, cur, used + e, out);
  }
  cur.exp[var] = 0;
}

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.exp < b.exp; }
};

}  // namespace

bool membership_oracle(const Polynomial& p, const Ideal& ideal, int degree_bound) {
  const std::size_t n = ideal.ring()->size();
  if (n > 4) throw UsageError("membership_oracle: more than 4 variables");
  if (degree_bound > 8 || degree_bound < 0) throw UsageError("membership_oracle: degree bound must lie in [0, 8]");
  if (!p.ring()->same_as(*ideal.ring())) throw UsageError("membership_oracle: polynomial lives in another ring");
  if (p.is_zero()) return true;
  if (max_total_degree(p) > degree_bound) return false;

  // Columns indexed by monomial; rows are m * g for deg(m) + deg(g) <= bound.
  std::map<Monomial, std::size_t, MonomialLess> column;
  auto col = [&](const Monomial& m) {
    auto [it, inserted] = column.try_emplace(m, column.size());
    return it->second;
  };
  using Row = std::map<std::size_t, Rational>;
  std::vector<Row> rows;
  for (const auto& g : ideal.generators()) {
    int dg = max_total_degree(g);
    if (dg > degree_bound) continue;
    std::vector<Monomial> multipliers;
    Monomial cur;
    monomials_up_to(n, degree_bound - dg, 0, cur, 0, multipliers);
    for (const auto& m : multipliers) {
      Row r;
      for (const auto& t : g.terms()) r[col(t.mono * m)] = t.coeff;
      rows.push_back(std::move(r));
    }
  }
  Row target;
  for (const auto& t : p.terms()) target[col(t.mono)] = t.coeff;

  // Row echelon form keyed by pivot column (the smallest column index present).
  std::map<std::size_t, Row> pivots;
  auto eliminate = [&](Row r) -> Row {
    while (!r.empty()) {
      auto [c, v] = *r.begin();
      auto it = pivots.find(c);
      if (it == pivots.end()) break;
      Rational factor = v / it->second.at(c);
      for (const auto& [pc, pv] : it->second) {
        Rational nv = r[pc] - factor * pv;
        if (nv == 0)
          r.erase(pc);
        else
          r[pc] = nv;
      }
    }
    return r;
  };
  for (auto& r : rows) {
    Row red = eliminate(std::move(r));
    if (!red.empty()) pivots.emplace(red.begin()->first, std::move(red));
  }
  return eliminate(std::move(target)).empty();
}

}  // namespace tautring
