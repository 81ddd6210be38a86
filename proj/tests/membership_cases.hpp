#pragma once

#include <random>

#include "tautring/groebner.hpp"

namespace tautring::test {

struct MembershipCase {
  Ideal ideal;
  Polynomial target;
};

// Homogeneous generators keep the degree-bounded Macaulay oracle exact: a
// target of degree <= bound lies in the ideal iff each of its homogeneous
// parts is a combination of generator multiples of that degree.
inline Polynomial random_form(std::mt19937& rng, const RingPtr& ring, int degree, int max_terms) {
  std::uniform_int_distribution<int> count(1, max_terms), coef(-4, 4), var(0, int(ring->size()) - 1);
  std::vector<Term> terms;
  for (int t = count(rng); t > 0; --t) {
    Term term;
    for (int k = 0; k < degree; ++k) ++term.mono.exp[var(rng)];
    term.coeff = coef(rng);
    terms.push_back(term);
  }
  return Polynomial(ring, std::move(terms));
}

/// Random ideal in <= 3 variables with <= 3 generators of degree <= 3, and
/// a target that is an explicit member, a perturbed member, or random.
inline MembershipCase random_membership_case(std::mt19937& rng) {
  std::uniform_int_distribution<int> nvars(1, 3), ngens(1, 3), deg(1, 3), kind(0, 2);
  const int n = nvars(rng);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
  auto ring = make_ring(names, std::vector<int>(std::size_t(n), 1));
  std::vector<Polynomial> gens;
  for (int g = ngens(rng); g > 0; --g) gens.push_back(random_form(rng, ring, deg(rng), 3));
  Ideal ideal(ring, gens);

  constexpr int kTargetDegree = 4;
  Polynomial target(ring);
  const int k = kind(rng);
  if (k == 2) {
    target = random_form(rng, ring, std::uniform_int_distribution<int>(0, kTargetDegree)(rng), 3);
  } else {
    for (const auto& g : ideal.generators())
      target = target + random_form(rng, ring, kTargetDegree - int(weighted_degree(g).degree), 2) * g;
    if (k == 1) target = target + random_form(rng, ring, kTargetDegree, 1);
  }
  return {ideal, target};
}

}  // namespace tautring::test
