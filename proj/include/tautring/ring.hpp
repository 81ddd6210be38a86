#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tautring {

inline constexpr std::size_t kMaxVars = 16;

/// Degree-reverse-lexicographic order. The grading is either the all-ones
/// vector or the ring's own weights; `permutation[i]` names the ring variable
/// that plays the role of the i-th variable of the order (an empty vector is
/// the identity).
struct MonomialOrder {
  enum class Grading { AllOnes, Weights };
  Grading grading = Grading::AllOnes;
  std::vector<std::size_t> permutation;

  bool operator==(const MonomialOrder&) const = default;
};

std::string describe(const MonomialOrder& order);

/// Exponent vector. Entries past the ring's variable count stay zero.
struct Monomial {
  std::array<std::int16_t, kMaxVars> exp{};

  bool operator==(const Monomial&) const = default;
  /// Exponent-wise sum; throws std::overflow_error past 2^15 - 1.
  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  bool is_one() const;
};

/// Ordered, weighted variable list. Immutable once built; shared by every
/// polynomial that lives in it.
class RingSpec {
 public:
  RingSpec(std::vector<std::string> names, std::vector<int> weights, MonomialOrder order = {});

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  int weight(std::size_t i) const { return weights_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  const MonomialOrder& order() const { return order_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Weighted (topological) degree.
  long weighted_degree(const Monomial& m) const;
  /// Degree under the order's grading.
  long order_degree(const Monomial& m) const;
  /// Three-way comparison in the ring's monomial order: <0, 0, >0.
  int compare(const Monomial& a, const Monomial& b) const;

  /// Same names, weights and order.
  bool same_as(const RingSpec& other) const;

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
  MonomialOrder order_;
  std::vector<std::size_t> perm_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

RingPtr make_ring(std::vector<std::string> names, std::vector<int> weights, MonomialOrder order = {});

/// Ring variables p1..pN with weight(p_j) = j.
RingPtr pontryagin_ring(int n);

}  // namespace tautring
