#include "tautring/groebner.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "tautring/detail/gb_engine.hpp"

namespace tautring {

CoefficientField parse_field(std::string_view text) {
  if (text == "rational") return CoefficientField::rational();
  if (text.substr(0, 6) == "prime:") {
    auto digits = text.substr(6);
    if (digits.empty() || digits.size() > 10 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw UsageError("malformed field '" + std::string(text) + "'");
    unsigned long long p = std::stoull(std::string(digits));
    if (p < 3 || p >= (1ull << 31)) throw UsageError("prime must lie in [3, 2^31)");
    for (unsigned long long d = 2; d * d <= p; ++d)
      if (p % d == 0) throw UsageError(std::to_string(p) + " is not prime");
    return CoefficientField::modular(std::uint32_t(p));
  }
  throw UsageError("unknown field '" + std::string(text) + "' (expected rational or prime:N)");
}

std::string to_string(const CoefficientField& field) {
  return field.kind == CoefficientField::Kind::Rational ? "rational" : "prime:" + std::to_string(field.prime);
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!g.ring()->same_as(*ring_)) throw UsageError("ideal generator lives in another ring");
    if (g.is_zero()) continue;
    if (std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(std::move(g));
  }
}

bool GroebnerBasis::is_unit() const { return leading.size() == 1 && leading.front().is_one(); }

RingPtr with_order(const RingPtr& ring, const MonomialOrder& order) {
  if (ring->order() == order) return ring;
  return make_ring(ring->names(), ring->weights(), order);
}

namespace {

using detail::PackedMonomial;

// Internal variable i of the engine is ring variable layout.perm[i].
struct Layout {
  std::vector<std::size_t> perm;
  std::vector<int> grading;

  Layout(const RingSpec& ring, const MonomialOrder& order) {
    perm = order.permutation;
    if (perm.empty()) {
      perm.resize(ring.size());
      std::iota(perm.begin(), perm.end(), std::size_t{0});
    }
    if (perm.size() != ring.size()) throw UsageError("order permutation does not match the ring");
    for (std::size_t i = 0; i < perm.size(); ++i) {
      int w = order.grading == MonomialOrder::Grading::AllOnes ? 1 : ring.weight(perm[i]);
      if (w <= 0) throw UsageError("weighted grading requires positive weights");
      grading.push_back(w);
    }
  }

  PackedMonomial pack(const Monomial& m) const {
    PackedMonomial p;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      int e = m.exp[perm[i]];
      if (e > PackedMonomial::kMaxExponent) throw std::overflow_error("exponent too large for the Groebner engine");
      p.set_exponent(int(i), e);
      p.deg += e * grading[i];
    }
    return p;
  }

  Monomial unpack(const PackedMonomial& p) const {
    Monomial m;
    for (std::size_t i = 0; i < perm.size(); ++i) m.exp[perm[i]] = std::int16_t(p.exponent(int(i)));
    return m;
  }
};

template <class Domain>
typename detail::BuchbergerEngine<Domain>::Poly to_engine(const Polynomial& p, const Layout& layout,
                                                          const Domain& domain) {
  std::vector<Rational> qs;
  qs.reserve(p.size());
  for (const auto& t : p.terms()) qs.push_back(t.coeff);
  auto cs = domain.convert(qs);
  typename detail::BuchbergerEngine<Domain>::Poly out;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (Domain::is_zero(cs[i])) continue;
    out.mon.push_back(layout.pack(p.terms()[i].mono));
    out.coef.push_back(std::move(cs[i]));
  }
  return out;
}

template <class Domain>
Polynomial from_engine(const typename detail::BuchbergerEngine<Domain>::Poly& p, const Layout& layout,
                       const Domain& domain, const RingPtr& ring) {
  auto qs = domain.to_rationals(p.coef);
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) terms.push_back({layout.unpack(p.mon[i]), std::move(qs[i])});
  return Polynomial(ring, std::move(terms));
}

template <class Domain>
GroebnerResult run_buchberger(const Ideal& ideal, const MonomialOrder& order, const GroebnerOptions& options,
                              Domain field) {
  using Engine = detail::BuchbergerEngine<Domain>;
  const auto start = Engine::Clock::now();
  std::optional<typename Engine::Clock::time_point> deadline;
  if (options.timeout) deadline = start + *options.timeout;

  Layout layout(*ideal.ring(), order);
  RingPtr ring = with_order(ideal.ring(), order);
  Engine engine(field, layout.grading, deadline, true);
  for (const auto& g : ideal.generators()) {
    auto f = to_engine(g, layout, field);
    if (!f.empty()) engine.add_generator(std::move(f));
  }

  GroebnerResult result;
  auto copy_stats = [&] {
    const auto& s = engine.stats();
    result.stats = {s.pairs_considered, s.pairs_reduced, s.zero_reductions, s.basis_size_peak};
    result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Engine::Clock::now() - start);
  };
  try {
    engine.run();
    auto reduced = engine.reduced_basis();
    GroebnerBasis gb;
    gb.ring = ring;
    gb.order = order;
    gb.field = options.field;
    for (const auto& p : reduced) {
      gb.elements.push_back(from_engine(p, layout, field, ring));
      gb.leading.push_back(layout.unpack(p.mon.front()));
    }
    copy_stats();
    gb.stats = result.stats;
    result.basis = std::move(gb);
  } catch (const detail::Timeout&) {
    result.status = GroebnerResult::Status::Timeout;
    copy_stats();
  }
  return result;
}

}  // namespace

GroebnerResult buchberger(const Ideal& ideal, const MonomialOrder& order, const GroebnerOptions& options) {
  if (options.field.kind == CoefficientField::Kind::Prime)
    return run_buchberger(ideal, order, options, detail::PrimeField{options.field.prime});
  return run_buchberger(ideal, order, options, detail::IntegerFractionFree{});
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  using Engine = detail::BuchbergerEngine<detail::RationalField>;
  Layout layout(*p.ring(), order);
  detail::RationalField field;
  Engine engine(field, layout.grading, std::nullopt);
  for (const auto& b : basis) {
    if (!b.ring()->same_as(*p.ring()) && b.ring()->names() != p.ring()->names())
      throw UsageError("normal_form: basis element lives in another ring");
    if (b.is_zero()) throw UsageError("normal_form: basis elements must be nonzero");
    engine.add_reducer(to_engine(b, layout, field));
  }
  auto f = to_engine(p, layout, field);
  Engine::sort_terms(f);
  if (f.empty()) return Polynomial(with_order(p.ring(), order));
  auto r = engine.reduce(std::move(f), std::nullopt, true, false, false);
  return from_engine(r, layout, field, with_order(p.ring(), order));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) throw UsageError("s_polynomial: arguments must be nonzero");
  RingPtr ring = with_order(f.ring(), order);
  Polynomial fo(ring, f.terms()), go(ring, g.terms());
  const auto& lf = fo.leading();
  const auto& lg = go.leading();
  Monomial l;
  for (std::size_t i = 0; i < kMaxVars; ++i) l.exp[i] = std::max(lf.mono.exp[i], lg.mono.exp[i]);
  auto cofactor = [&](const Term& lead) {
    Monomial q;
    for (std::size_t i = 0; i < kMaxVars; ++i) q.exp[i] = std::int16_t(l.exp[i] - lead.mono.exp[i]);
    return Polynomial(ring, {Term{q, Rational(1) / lead.coeff}});
  };
  return cofactor(lf) * fo - cofactor(lg) * go;
}

std::string render_basis(const GroebnerBasis& basis) {
  std::string out = "ring:";
  for (std::size_t i = 0; i < basis.ring->size(); ++i)
    out += " " + basis.ring->name(i) + ":" + std::to_string(basis.ring->weight(i));
  out += "\norder: " + describe(basis.order) + "\nfield: " + to_string(basis.field) +
         "\nelements: " + std::to_string(basis.elements.size()) + "\n";
  for (const auto& e : basis.elements) out += render(e) + "\n";
  return out;
}

int krull_dimension(const std::vector<Monomial>& leading, std::size_t nvars) {
  if (nvars > kMaxVars) throw UsageError("krull_dimension: too many variables");
  std::vector<std::uint32_t> supports;
  for (const auto& m : leading) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (m.exp[i]) s |= 1u << i;
    for (std::size_t i = nvars; i < kMaxVars; ++i)
      if (m.exp[i]) throw UsageError("krull_dimension: monomial uses a variable beyond nvars");
    if (s == 0) return -1;
    supports.push_back(s);
  }
  int best = 0;
  const std::uint32_t full = nvars == 32 ? ~0u : (1u << nvars) - 1;
  for (std::uint32_t subset = 0;; ++subset) {
    int size = std::popcount(subset);
    if (size > best) {
      bool independent = std::all_of(supports.begin(), supports.end(),
                                     [&](std::uint32_t s) { return (s & ~subset) != 0; });
      if (independent) best = size;
    }
    if (subset == full) break;
  }
  return best;
}

}  // namespace tautring
