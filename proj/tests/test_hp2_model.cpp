#include <gtest/gtest.h>

#include "tautring/hp2_model.hpp"
#include "test_util.hpp"

using namespace tautring;

namespace {

TotalSpaceElement X(const ModelRing& m, int power) {
  std::vector<Polynomial> c(std::size_t(power + 1), m.constant(0));
  c[std::size_t(power)] = m.constant(1);
  return reduce_total(m, c);
}

TotalSpaceElement T(const ModelRing& m, const char* c0, const char* c1, const char* c2) {
  return {{parse_polynomial(c0, m.ring()), parse_polynomial(c1, m.ring()), parse_polynomial(c2, m.ring())}};
}

Polynomial A(const char* text) { return parse_polynomial(text, abstract_class_ring()); }

TotalSpaceElement random_total(std::mt19937& rng, const ModelRing& m) {
  auto a = test::random_polynomial(rng, m.ring(), 3, 2);
  auto b = test::random_polynomial(rng, m.ring(), 3, 2);
  auto c = test::random_polynomial(rng, m.ring(), 3, 2);
  return {{a, b, c}};
}

}  // namespace

TEST(TotalSpace, ReduceExamples) {
  ModelRing m(ParameterMode::Free);
  EXPECT_EQ(X(m, 3), T(m, "-a12", "-a8", "0"));
  EXPECT_EQ(X(m, 4), T(m, "0", "-a12", "-a8"));
  EXPECT_EQ(X(m, 2), T(m, "0", "0", "1"));
  auto once = X(m, 7);
  EXPECT_EQ(reduce_total(m, {once.c[0], once.c[1], once.c[2]}), once);
}

TEST(TotalSpace, MulExamples) {
  ModelRing m(ParameterMode::Free);
  EXPECT_EQ(mul_total(m, X(m, 1), X(m, 2)), T(m, "-a12", "-a8", "0"));
  auto e = char_class(m, CharClass::Euler);
  EXPECT_EQ(mul_total(m, e, e), T(m, "a8^2", "-9*a12", "-3*a8"));
  auto t = T(m, "p1_0 + a8", "P1", "p3_2*P2");
  EXPECT_EQ(mul_total(m, total_from_base(m, m.constant(1)), t), t);
}

TEST(TotalSpace, RingLaws) {
  ModelRing m(ParameterMode::Free);
  std::mt19937 rng(3);
  for (int i = 0; i < 30; ++i) {
    auto a = random_total(rng, m), b = random_total(rng, m), c = random_total(rng, m);
    EXPECT_EQ(mul_total(m, a, b), mul_total(m, b, a));
    EXPECT_EQ(mul_total(m, mul_total(m, a, b), c), mul_total(m, a, mul_total(m, b, c)));
    EXPECT_EQ(mul_total(m, a, add_total(b, c)), add_total(mul_total(m, a, b), mul_total(m, a, c)));
  }
}

TEST(TotalSpace, ModeMismatchRejected) {
  ModelRing sig(ParameterMode::Signature), free(ParameterMode::Free);
  EXPECT_THROW(mul_total(sig, X(sig, 1), T(free, "a8", "0", "0")), UsageError);
}

TEST(FibreIntegration, Examples) {
  ModelRing m(ParameterMode::Signature);
  EXPECT_EQ(fibre_integrate(X(m, 2)), m.constant(1));
  EXPECT_EQ(fibre_integrate(X(m, 4)), -m.var("a8"));
  EXPECT_TRUE(fibre_integrate(X(m, 0)).is_zero());
  EXPECT_TRUE(fibre_integrate(X(m, 1)).is_zero());
  auto b = parse_polynomial("a8*p1_0 - 2/3*a12 + P1", m.ring());
  EXPECT_EQ(fibre_integrate(mul_total(m, total_from_base(m, b), X(m, 2))), b);
}

TEST(FibreIntegration, PushPull) {
  ModelRing m(ParameterMode::Free);
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto b = test::random_polynomial(rng, m.ring(), 3, 2);
    auto t = random_total(rng, m);
    EXPECT_EQ(fibre_integrate(mul_total(m, total_from_base(m, b), t)), b * fibre_integrate(t));
  }
}

TEST(CharClasses, Representatives) {
  ModelRing sig(ParameterMode::Signature), free(ParameterMode::Free);
  EXPECT_EQ(char_class(sig, CharClass::Euler), T(sig, "a8", "0", "3"));
  EXPECT_EQ(char_class(sig, CharClass::P1), T(sig, "p1_0", "P1", "0"));
  EXPECT_EQ(char_class(sig, CharClass::P2), T(sig, "p2_0", "p2_1", "45/7 + 1/7*P1^2"));
  EXPECT_EQ(char_class(free, CharClass::P2), T(free, "p2_0", "p2_1", "P2"));
  EXPECT_EQ(char_class(free, CharClass::P3), T(free, "p3_0", "p3_1", "p3_2"));
  EXPECT_EQ(char_class(sig, CharClass::P4), T(sig, "a8^2", "-9*a12", "-3*a8"));
  ModelRing zero(ParameterMode::Signature, P4Mode::Zero);
  EXPECT_EQ(char_class(zero, CharClass::P4), T(zero, "0", "0", "0"));
  EXPECT_EQ(pontryagin_class(sig, 5), T(sig, "0", "0", "0"));
  EXPECT_EQ(pontryagin_class(sig, 2), char_class(sig, CharClass::P2));
}

TEST(CharClasses, Homogeneous) {
  for (auto mode : {ParameterMode::Signature, ParameterMode::Free}) {
    ModelRing m(mode);
    for (int i = 1; i <= 4; ++i) {
      auto p = pontryagin_class(m, i);
      for (int j = 0; j < 3; ++j) {
        if (p.c[j].is_zero()) continue;
        auto d = weighted_degree(p.c[j]);
        ASSERT_TRUE(d.homogeneous());
        EXPECT_EQ(d.degree + 4 * j, 4 * i);
      }
    }
  }
}

TEST(Kappa, Examples) {
  ModelRing sig(ParameterMode::Signature), free(ParameterMode::Free);
  EXPECT_EQ(kappa(sig, A("e")), sig.constant(3));
  EXPECT_EQ(kappa(sig, A("e^2")), parse_polynomial("-3*a8", sig.ring()));
  EXPECT_EQ(kappa(sig, A("p4")), parse_polynomial("-3*a8", sig.ring()));
  EXPECT_EQ(kappa_L(sig, 2), sig.constant(1));
  EXPECT_EQ(kappa_L(free, 2), parse_polynomial("7/45*P2 - 1/45*P1^2", free.ring()));
  EXPECT_TRUE(kappa_L(sig, 1).is_zero());
  EXPECT_THROW(kappa(sig, A("e + p1")), UsageError);
}

TEST(Kappa, SignatureIdentityInP1) {
  ModelRing sig(ParameterMode::Signature);
  auto k2 = kappa_L(sig, 2);
  auto p1 = *sig.ring()->index_of("P1");
  EXPECT_FALSE(k2.uses_variable(p1));
  EXPECT_EQ(k2, sig.constant(1));
}

TEST(Kappa, RestrictionDropsHighClasses) {
  auto ring = pontryagin_ring(6);
  auto r = restrict_to_rank8(parse_polynomial("p1*p5 + p6 + 2*p4 - p2^2", ring));
  EXPECT_EQ(r, A("2*p4 - p2^2"));
}

TEST(HirzebruchGenerators, Shape) {
  for (auto mode : {ParameterMode::Signature, ParameterMode::Free}) {
    ModelRing m(mode);
    auto gens = hirzebruch_generators(m, 10);
    ASSERT_EQ(gens.size(), 8u);
    for (const auto& g : gens) {
      auto d = weighted_degree(g.value);
      ASSERT_TRUE(d.homogeneous()) << g.k;
      EXPECT_EQ(d.degree, 4 * g.k - 8);
    }
    EXPECT_EQ(m.ring()->index_of("P2").has_value(), mode == ParameterMode::Free);
    EXPECT_EQ(gens.front().k, 3);
  }
  EXPECT_THROW(hirzebruch_generators(ModelRing(ParameterMode::Free), 2), UsageError);
}

TEST(HirzebruchGenerators, KappaL3) {
  ModelRing free(ParameterMode::Free);
  auto k3 = kappa_L(free, 3);
  EXPECT_EQ(k3, parse_polynomial("2/315*p1_0*P1^2 - 13/945*p2_1*P1 - 13/945*p1_0*P2 + 62/945*p3_2", free.ring()));
  // Degree 4 leaves no room for a8 alone: the specialization vanishes.
  std::map<std::string, Rational> at{{"P1", 0}, {"P2", 0}};
  for (const auto* v : {"p1_0", "p2_0", "p2_1", "p3_0", "p3_1", "p3_2", "a12"}) at[v] = 0;
  EXPECT_TRUE(substitute(k3, at).is_zero());
}

TEST(HirzebruchGenerators, ModeCoherence) {
  ModelRing sig(ParameterMode::Signature), free(ParameterMode::Free);
  auto fg = hirzebruch_generators(free, 10);
  auto sg = hirzebruch_generators(sig, 10);
  auto p2 = (free.constant(45) + free.var("P1").pow(2)) * Rational(1, 7);
  std::map<std::string, Polynomial> drop_p2{{"P2", Polynomial(sig.ring())}};
  for (std::size_t i = 0; i < fg.size(); ++i) {
    auto specialized = substitute(fg[i].value, std::map<std::string, Polynomial>{{"P2", p2}});
    EXPECT_EQ(map_to_ring(specialized, sig.ring(), drop_p2), sg[i].value) << fg[i].k;
  }
}

TEST(HirzebruchGenerators, P4ModesDifferOnlyThroughP4) {
  ModelRing a(ParameterMode::Free, P4Mode::EulerSquared), b(ParameterMode::Free, P4Mode::Zero);
  EXPECT_EQ(kappa_L(a, 3), kappa_L(b, 3));
  EXPECT_NE(kappa_L(a, 4), kappa_L(b, 4));
  EXPECT_EQ(parse_p4_mode("zero"), P4Mode::Zero);
  EXPECT_EQ(to_string(P4Mode::EulerSquared), "euler-squared");
  EXPECT_THROW(parse_parameter_mode("loose"), UsageError);
}
