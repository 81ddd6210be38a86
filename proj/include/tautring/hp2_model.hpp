#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "tautring/genera.hpp"
#include "tautring/polynomial.hpp"

namespace tautring {

/// How the x^2-coefficient of p2(T_pi E) is chosen.
enum class ParameterMode {
  Signature,  ///< (45 + P1^2)/7, the value forced by the signature theorem
  Free,       ///< an independent parameter P2
};

/// What p4 restricts to for the rank-8 vertical tangent bundle.
enum class P4Mode {
  EulerSquared,  ///< p4 = e^2
  Zero,          ///< p4 dropped
};

ParameterMode parse_parameter_mode(std::string_view text);
P4Mode parse_p4_mode(std::string_view text);
std::string_view to_string(ParameterMode mode);
std::string_view to_string(P4Mode mode);

/// Base ring B = Q[a8, a12, p1_0, p2_0, p2_1, p3_0, p3_1, p3_2] (weights
/// 8,12,4,8,4,12,8,4) extended by the weight-0 parameter P1, and in free
/// mode also P2.
class ModelRing {
 public:
  explicit ModelRing(ParameterMode mode, P4Mode p4_mode = P4Mode::EulerSquared);

  ParameterMode mode() const { return mode_; }
  P4Mode p4_mode() const { return p4_mode_; }
  const RingPtr& ring() const { return ring_; }
  Polynomial var(std::string_view name) const { return Polynomial::variable(ring_, name); }
  Polynomial constant(const Rational& c) const { return Polynomial::constant(ring_, c); }

  /// The eight base variables, in canonical order.
  static const std::vector<std::string>& base_variables();
  /// Weights of base_variables().
  static const std::vector<int>& base_weights();

 private:
  ParameterMode mode_;
  P4Mode p4_mode_;
  RingPtr ring_;
};

/// c0 + c1 x + c2 x^2 in B[x]/(x^3 + a8 x + a12), weight(x) = 4.
struct TotalSpaceElement {
  std::array<Polynomial, 3> c;

  bool operator==(const TotalSpaceElement&) const = default;
};

/// Reduces an arbitrary x-adic coefficient list (index i = coefficient of
/// x^i) using x^3 = -a8 x - a12. Requires at least one entry to fix the ring.
TotalSpaceElement reduce_total(const ModelRing& model, std::vector<Polynomial> coeffs);
TotalSpaceElement mul_total(const ModelRing& model, const TotalSpaceElement& s, const TotalSpaceElement& t);
TotalSpaceElement total_from_base(const ModelRing& model, const Polynomial& b);
TotalSpaceElement add_total(const TotalSpaceElement& s, const TotalSpaceElement& t);

/// Push-forward to the base: the x^2-coefficient of the reduced form.
Polynomial fibre_integrate(const TotalSpaceElement& t);

enum class CharClass { Euler, P1, P2, P3, P4 };

/// Representatives of e, p1..p4 of the vertical tangent bundle. p4 is e^2 or
/// zero according to the model's P4Mode.
TotalSpaceElement char_class(const ModelRing& model, CharClass which);
/// p_i for i >= 1 (zero for i >= 5).
TotalSpaceElement pontryagin_class(const ModelRing& model, int i);

/// Ring of abstract classes e, p1, p2, p3, p4 with weights 8, 4, 8, 12, 16.
RingPtr abstract_class_ring();

/// Rewrites a genus polynomial in p1..pN into the abstract class ring,
/// dropping p_j for j >= 5 (rank-8 restriction).
Polynomial restrict_to_rank8(const Polynomial& genus_poly);

/// Fibre integral of c(T_pi E) for a homogeneous c in abstract_class_ring().
/// Result is homogeneous of weighted degree |c| - 8 in the model ring.
Polynomial kappa(const ModelRing& model, const Polynomial& c);

struct KappaClass {
  int k;
  Polynomial value;
};

/// kappa_{L_3}, ..., kappa_{L_kmax}.
std::vector<KappaClass> hirzebruch_generators(const ModelRing& model, int k_max);

/// kappa_{L_k} for a single k >= 1.
Polynomial kappa_L(const ModelRing& model, int k);

}  // namespace tautring
