#include "tautring/hp2_model.hpp"

namespace tautring {

ParameterMode parse_parameter_mode(std::string_view text) {
  if (text == "signature") return ParameterMode::Signature;
  if (text == "free") return ParameterMode::Free;
  throw UsageError("unknown mode '" + std::string(text) + "' (expected signature or free)");
}

P4Mode parse_p4_mode(std::string_view text) {
  if (text == "euler-squared") return P4Mode::EulerSquared;
  if (text == "zero") return P4Mode::Zero;
  throw UsageError("unknown p4 mode '" + std::string(text) + "' (expected euler-squared or zero)");
}

std::string_view to_string(ParameterMode mode) { return mode == ParameterMode::Signature ? "signature" : "free"; }
std::string_view to_string(P4Mode mode) { return mode == P4Mode::EulerSquared ? "euler-squared" : "zero"; }

const std::vector<std::string>& ModelRing::base_variables() {
  static const std::vector<std::string> names{"a8", "a12", "p1_0", "p2_0", "p2_1", "p3_0", "p3_1", "p3_2"};
  return names;
}

const std::vector<int>& ModelRing::base_weights() {
  static const std::vector<int> weights{8, 12, 4, 8, 4, 12, 8, 4};
  return weights;
}

ModelRing::ModelRing(ParameterMode mode, P4Mode p4_mode) : mode_(mode), p4_mode_(p4_mode) {
  auto build = [](bool with_p2) {
    auto names = base_variables();
    auto weights = base_weights();
    names.push_back("P1");
    weights.push_back(0);
    if (with_p2) {
      names.push_back("P2");
      weights.push_back(0);
    }
    return make_ring(names, weights);
  };
  // One ring per mode and process; signature mode has no P2 at all.
  static const RingPtr signature = build(false), free = build(true);
  ring_ = mode == ParameterMode::Signature ? signature : free;
}

TotalSpaceElement reduce_total(const ModelRing& model, std::vector<Polynomial> coeffs) {
  while (coeffs.size() < 3) coeffs.emplace_back(model.ring());
  const Polynomial a8 = model.var("a8");
  const Polynomial a12 = model.var("a12");
  // x^n = x^{n-3} (-a8 x - a12)
  for (std::size_t n = coeffs.size() - 1; n >= 3; --n) {
    if (coeffs[n].is_zero()) continue;
    coeffs[n - 2] = coeffs[n - 2] - a8 * coeffs[n];
    coeffs[n - 3] = coeffs[n - 3] - a12 * coeffs[n];
  }
  return TotalSpaceElement{{coeffs[0], coeffs[1], coeffs[2]}};
}

TotalSpaceElement mul_total(const ModelRing& model, const TotalSpaceElement& s, const TotalSpaceElement& t) {
  if (!s.c[0].ring()->same_as(*model.ring()) || !t.c[0].ring()->same_as(*model.ring()))
    throw UsageError("mul_total: element from a different model ring");
  std::vector<Polynomial> conv(5, Polynomial(model.ring()));
  for (std::size_t i = 0; i < 3; ++i) {
    if (s.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < 3; ++j)
      if (!t.c[j].is_zero()) conv[i + j] = conv[i + j] + s.c[i] * t.c[j];
  }
  return reduce_total(model, std::move(conv));
}

TotalSpaceElement total_from_base(const ModelRing& model, const Polynomial& b) {
  Polynomial zero(model.ring());
  return TotalSpaceElement{{b, zero, zero}};
}

TotalSpaceElement add_total(const TotalSpaceElement& s, const TotalSpaceElement& t) {
  return TotalSpaceElement{{s.c[0] + t.c[0], s.c[1] + t.c[1], s.c[2] + t.c[2]}};
}

Polynomial fibre_integrate(const TotalSpaceElement& t) { return t.c[2]; }

TotalSpaceElement char_class(const ModelRing& model, CharClass which) {
  Polynomial zero(model.ring());
  switch (which) {
    case CharClass::Euler:
      return {{model.var("a8"), zero, model.constant(3)}};
    case CharClass::P1:
      return {{model.var("p1_0"), model.var("P1"), zero}};
    case CharClass::P2: {
      Polynomial top = model.mode() == ParameterMode::Free
                           ? model.var("P2")
                           : (model.constant(45) + model.var("P1").pow(2)) * Rational(1, 7);
      return {{model.var("p2_0"), model.var("p2_1"), top}};
    }
    case CharClass::P3:
      return {{model.var("p3_0"), model.var("p3_1"), model.var("p3_2")}};
    case CharClass::P4: {
      if (model.p4_mode() == P4Mode::Zero) return {{zero, zero, zero}};
      auto e = char_class(model, CharClass::Euler);
      return mul_total(model, e, e);
    }
  }
  throw InvariantError("char_class: unhandled class");
}

TotalSpaceElement pontryagin_class(const ModelRing& model, int i) {
  if (i < 1) throw UsageError("pontryagin_class: index must be >= 1");
  if (i > 4) {
    Polynomial zero(model.ring());
    return {{zero, zero, zero}};
  }
  return char_class(model, static_cast<CharClass>(i));
}

RingPtr abstract_class_ring() {
  static const RingPtr ring = make_ring({"e", "p1", "p2", "p3", "p4"}, {8, 4, 8, 12, 16});
  return ring;
}

Polynomial restrict_to_rank8(const Polynomial& genus_poly) {
  const auto& target = abstract_class_ring();
  std::map<std::string, Polynomial> assignments;
  for (std::size_t i = 0; i < genus_poly.ring()->size(); ++i) {
    const auto& name = genus_poly.ring()->name(i);
    if (!target->index_of(name)) assignments.emplace(name, Polynomial(target));
  }
  return map_to_ring(genus_poly, target, assignments);
}

Polynomial kappa(const ModelRing& model, const Polynomial& c) {
  const auto& abstract = abstract_class_ring();
  if (!c.ring()->same_as(*abstract)) throw UsageError("kappa: class must live in the abstract class ring");
  if (c.is_zero()) return Polynomial(model.ring());
  auto deg = weighted_degree(c);
  if (!deg.homogeneous()) throw UsageError("kappa: class is not homogeneous");

  std::vector<TotalSpaceElement> gens{char_class(model, CharClass::Euler), char_class(model, CharClass::P1),
                                      char_class(model, CharClass::P2), char_class(model, CharClass::P3),
                                      char_class(model, CharClass::P4)};
  std::vector<std::vector<TotalSpaceElement>> powers(gens.size());
  for (auto& p : powers) p.push_back(total_from_base(model, model.constant(1)));
  auto power = [&](std::size_t i, int e) -> const TotalSpaceElement& {
    auto& cache = powers[i];
    while (int(cache.size()) <= e) cache.push_back(mul_total(model, cache.back(), gens[i]));
    return cache[std::size_t(e)];
  };

  Polynomial zero(model.ring());
  TotalSpaceElement acc{{zero, zero, zero}};
  for (const auto& term : c.terms()) {
    TotalSpaceElement value = total_from_base(model, model.constant(term.coeff));
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (term.mono.exp[i]) value = mul_total(model, value, power(i, term.mono.exp[i]));
    acc = add_total(acc, value);
  }
  return fibre_integrate(acc);
}

std::vector<KappaClass> hirzebruch_generators(const ModelRing& model, int k_max) {
  if (k_max < 3) throw UsageError("hirzebruch_generators: k_max must be >= 3");
  auto seq = multiplicative_sequence(char_series_L(k_max), k_max);
  std::vector<KappaClass> out;
  for (int k = 3; k <= k_max; ++k) out.push_back({k, kappa(model, restrict_to_rank8(seq.K[std::size_t(k)]))});
  return out;
}

Polynomial kappa_L(const ModelRing& model, int k) {
  if (k < 1) throw UsageError("kappa_L: k must be >= 1");
  auto seq = multiplicative_sequence(char_series_L(k), k);
  return kappa(model, restrict_to_rank8(seq.K[std::size_t(k)]));
}

}  // namespace tautring
