#pragma once

#include <string_view>
#include <vector>

#include "tautring/polynomial.hpp"
#include "tautring/power_series.hpp"

namespace tautring {

/// Q(z) with Q(0) = 1, where z stands for the square of a formal root.
class CharacteristicSeries {
 public:
  explicit CharacteristicSeries(PowerSeries q);
  const PowerSeries& series() const { return q_; }
  Rational operator[](int i) const { return q_[i]; }

 private:
  PowerSeries q_;
};

/// sqrt(z)/tanh(sqrt(z)) through z^N (Hirzebruch L-genus).
CharacteristicSeries char_series_L(int n);
/// (sqrt(z)/2)/sinh(sqrt(z)/2) through z^N (A-hat genus).
CharacteristicSeries char_series_Ahat(int n);

enum class GenusKind { L, Ahat };
GenusKind parse_genus_kind(std::string_view text);
CharacteristicSeries char_series(GenusKind kind, int n);

/// K_0..K_N over Q[p1..pN], weight(p_j) = j. K[n] is homogeneous of degree n
/// in p1..pn.
struct MultiplicativeSequence {
  RingPtr ring;
  std::vector<Polynomial> K;

  /// K_0 + K_1 + ... + K_N.
  Polynomial total() const;
};

/// Power sums s_1..s_N of the formal roots written in the elementary
/// symmetric functions p_j (Newton's identities). Index 0 is unused.
std::vector<Polynomial> power_sums(const RingPtr& ring, int n);

/// K_n from log Q = sum c_j z^j: exponentiate sum c_j s_j in the graded ring
/// truncated above degree N and split by degree.
MultiplicativeSequence multiplicative_sequence(const CharacteristicSeries& q, int n);

}  // namespace tautring
