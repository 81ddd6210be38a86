#include "tautring/selfcheck.hpp"

#include <functional>

#include "tautring/genera.hpp"
#include "tautring/hp2_model.hpp"
#include "tautring/sweep.hpp"

namespace tautring {

bool SelfcheckReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

void check(SelfcheckReport& report, std::string name, const std::function<std::string()>& body) {
  try {
    std::string failure = body();
    report.checks.push_back({std::move(name), failure.empty(), failure});
  } catch (const std::exception& e) {
    report.checks.push_back({std::move(name), false, e.what()});
  }
}

std::string expect_equal(const Polynomial& got, const Polynomial& want) {
  return got == want ? std::string() : "got " + render(got) + ", expected " + render(want);
}

}  // namespace

SelfcheckReport run_selfcheck(const SelfcheckOptions& options) {
  SelfcheckReport report;

  check(report, "genus L", [&] {
    auto q = char_series_L(2);
    if (options.perturb_l2) {
      auto c = q.series().coefficients();
      c.resize(3);
      c[2] += Rational(1, 1000);
      q = CharacteristicSeries(PowerSeries(c, q.series().order()));
    }
    auto seq = multiplicative_sequence(q, 2);
    auto r = seq.ring;
    std::string f = expect_equal(seq.K[1], parse_polynomial("1/3*p1", r));
    return f.empty() ? expect_equal(seq.K[2], parse_polynomial("7/45*p2 - 1/45*p1^2", r)) : f;
  });
  check(report, "genus Ahat", [] {
    auto seq = multiplicative_sequence(char_series_Ahat(2), 2);
    auto r = seq.ring;
    std::string f = expect_equal(seq.K[1], parse_polynomial("-1/24*p1", r));
    return f.empty() ? expect_equal(seq.K[2], parse_polynomial("-4/5760*p2 + 7/5760*p1^2", r)) : f;
  });
  check(report, "genus restricts to its series", [] {
    // K_n(p1 = z, p_j = 0 otherwise) is q_n z^n.
    for (auto kind : {GenusKind::L, GenusKind::Ahat}) {
      auto q = char_series(kind, 6);
      auto seq = multiplicative_sequence(q, 6);
      std::map<std::string, Rational> at{{"p1", 1}};
      for (int j = 2; j <= 6; ++j) at.emplace("p" + std::to_string(j), 0);
      for (int n = 1; n <= 6; ++n) {
        auto v = substitute(seq.K[n], at);
        if (!(v == Polynomial::constant(seq.ring, q[n]))) return "K_" + std::to_string(n) + " disagrees with its series";
      }
    }
    return std::string();
  });
  check(report, "fibre integrals", [] {
    ModelRing m(ParameterMode::Signature);
    auto x = TotalSpaceElement{{m.constant(0), m.constant(1), m.constant(0)}};
    auto x2 = mul_total(m, x, x);
    auto x4 = mul_total(m, x2, x2);
    std::string f = expect_equal(fibre_integrate(x2), m.constant(1));
    return f.empty() ? expect_equal(fibre_integrate(x4), -m.var("a8")) : f;
  });
  check(report, "signature identity", [] {
    ModelRing sig(ParameterMode::Signature), free(ParameterMode::Free);
    std::string f = expect_equal(kappa_L(sig, 2), sig.constant(1));
    return f.empty() ? expect_equal(kappa_L(free, 2), parse_polynomial("7/45*P2 - 1/45*P1^2", free.ring())) : f;
  });
  check(report, "groebner cross-check", [] {
    auto ring = make_ring({"x", "y", "z"}, {1, 1, 1});
    Ideal ideal(ring, {parse_polynomial("x^2 - y*z", ring), parse_polynomial("x*y - z^2", ring),
                       parse_polynomial("y^2 - x*z", ring)});
    auto gb = buchberger(ideal, MonomialOrder{});
    if (!gb.basis) return std::string("no basis");
    for (const auto* text : {"x^3 - z^3", "y^3 - z^3", "x*y*z - z^3", "x + y", "x^2*y - z^3"}) {
      auto p = parse_polynomial(text, ring);
      bool by_gb = normal_form(p, gb.basis->elements, MonomialOrder{}).is_zero();
      if (by_gb != membership_oracle(p, ideal, 4)) return "membership of " + std::string(text) + " disagrees";
    }
    if (krull_dimension(gb.basis->leading, 3) != 1) return std::string("twisted cubic cone should have dimension 1");
    return std::string();
  });
  check(report, "modular fiber dimension", [] {
    FiberRequest r;
    r.p1 = 2;
    r.k_max = 6;
    r.field = CoefficientField::modular(32003);
    auto d = specialize_and_dim(r).record.dimension;
    return d == 4 ? std::string() : "p1 = 2, kmax 6 over prime:32003 gave " + (d ? std::to_string(*d) : "timeout");
  });

  if (options.cache) {
    auto scan = options.cache->scan();
    report.warnings.insert(report.warnings.end(), scan.warnings.begin(), scan.warnings.end());
    check(report, "cache repair", [&] {
      for (const auto& request : scan.damaged) {
        auto out = compute_point(request, options.cache);
        if (out.timed_out) return "recomputation of p1=" + to_string(request.p1) + " timed out";
        report.warnings.push_back("recomputed cache entry for p1=" + to_string(request.p1) +
                                  (request.p2 ? ", p2=" + to_string(*request.p2) : std::string()));
      }
      return std::string();
    });
  }
  return report;
}

}  // namespace tautring
