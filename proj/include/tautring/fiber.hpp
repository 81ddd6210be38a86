#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "tautring/groebner.hpp"
#include "tautring/hp2_model.hpp"

namespace tautring {

/// One point of the parameter plane together with every knob that affects
/// the fiber dimension. `p2` absent selects signature mode.
struct FiberRequest {
  Rational p1;
  std::optional<Rational> p2;
  int k_max = 10;
  P4Mode p4_mode = P4Mode::EulerSquared;
  CoefficientField field;
  /// Weighted degrevlex by default; all-ones grading is much slower here.
  MonomialOrder order{MonomialOrder::Grading::Weights, {}};
  std::optional<std::chrono::milliseconds> timeout;

  ParameterMode mode() const { return p2 ? ParameterMode::Free : ParameterMode::Signature; }
  /// p2, or (45 + p1^2)/7 in signature mode.
  Rational effective_p2() const;
};

struct FiberDimensionRecord {
  Rational p1;
  Rational p2;
  ParameterMode mode = ParameterMode::Signature;
  int k_max = 10;
  P4Mode p4_mode = P4Mode::EulerSquared;
  CoefficientField field;
  /// Krull dimension of the fiber; -1 for the unit ideal, nullopt on timeout.
  std::optional<int> dimension;
  long runtime_ms = 0;

  bool operator==(const FiberDimensionRecord&) const = default;
};

/// The eight-variable base ring Q[a8, ..., p3_2] (weights 8,12,4,8,4,12,8,4).
RingPtr base_ring();

/// kappa_{L_3..L_kmax} with the parameters specialized, moved into
/// base_ring(). Generators depend only on (mode, p4_mode, k_max) before
/// specialization, and those are memoized process-wide.
std::vector<Polynomial> specialized_generators(const FiberRequest& request);

struct FiberResult {
  FiberDimensionRecord record;
  std::optional<GroebnerBasis> basis;  // absent on timeout
};

/// Groebner basis of the specialized Hirzebruch ideal and the Krull
/// dimension of the quotient of the base ring by it.
FiberResult specialize_and_dim(const FiberRequest& request);

}  // namespace tautring
