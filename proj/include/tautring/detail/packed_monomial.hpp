#pragma once

#include <cstdint>
#include <stdexcept>

namespace tautring::detail {

/// Up to 16 exponents of at most 127, one byte each, variable i in byte i.
/// The layout makes degree-reverse-lexicographic tie-breaks a plain integer
/// comparison: the highest-index differing variable sits in the most
/// significant differing byte, and the monomial with the smaller exponent
/// there is the larger one.
struct PackedMonomial {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::int32_t deg = 0;  // degree under the engine's grading

  static constexpr std::uint64_t kHigh = 0x8080808080808080ull;
  static constexpr std::uint64_t kLow = 0x7f7f7f7f7f7f7f7full;
  static constexpr int kMaxExponent = 127;

  int exponent(int var) const {
    const std::uint64_t w = var < 8 ? lo : hi;
    return int((w >> (8 * (var & 7))) & 0xff);
  }
  void set_exponent(int var, int e) {
    if (e < 0 || e > kMaxExponent) throw std::overflow_error("packed monomial exponent out of range");
    std::uint64_t& w = var < 8 ? lo : hi;
    const int shift = 8 * (var & 7);
    w = (w & ~(std::uint64_t{0xff} << shift)) | (std::uint64_t(e) << shift);
  }

  bool is_one() const { return lo == 0 && hi == 0; }
  bool operator==(const PackedMonomial& o) const { return lo == o.lo && hi == o.hi; }
};

inline PackedMonomial operator*(const PackedMonomial& a, const PackedMonomial& b) {
  PackedMonomial r{a.lo + b.lo, a.hi + b.hi, a.deg + b.deg};
  if ((r.lo | r.hi) & PackedMonomial::kHigh) throw std::overflow_error("packed monomial exponent overflow");
  return r;
}

/// a | b
inline bool divides(const PackedMonomial& a, const PackedMonomial& b) {
  constexpr auto H = PackedMonomial::kHigh;
  return (((b.lo | H) - a.lo) & H) == H && (((b.hi | H) - a.hi) & H) == H;
}

/// b / a, assuming a | b.
inline PackedMonomial quotient(const PackedMonomial& b, const PackedMonomial& a) {
  return {b.lo - a.lo, b.hi - a.hi, b.deg - a.deg};
}

namespace packed_detail {
inline std::uint64_t nonzero_bytes(std::uint64_t x) {
  return (x | ((x & PackedMonomial::kLow) + PackedMonomial::kLow)) & PackedMonomial::kHigh;
}
inline std::uint64_t byte_max(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  for (int s = 0; s < 64; s += 8) {
    std::uint64_t x = (a >> s) & 0xff, y = (b >> s) & 0xff;
    r |= (x > y ? x : y) << s;
  }
  return r;
}
}  // namespace packed_detail

inline bool coprime(const PackedMonomial& a, const PackedMonomial& b) {
  using packed_detail::nonzero_bytes;
  return (nonzero_bytes(a.lo) & nonzero_bytes(b.lo)) == 0 && (nonzero_bytes(a.hi) & nonzero_bytes(b.hi)) == 0;
}

/// lcm; the degree must be supplied by the caller's grading.
inline PackedMonomial lcm_exponents(const PackedMonomial& a, const PackedMonomial& b) {
  return {packed_detail::byte_max(a.lo, b.lo), packed_detail::byte_max(a.hi, b.hi), 0};
}

/// Three-way degrevlex comparison given consistent degrees.
inline int compare(const PackedMonomial& a, const PackedMonomial& b) {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  if (a.hi != b.hi) return a.hi < b.hi ? 1 : -1;
  if (a.lo != b.lo) return a.lo < b.lo ? 1 : -1;
  return 0;
}

}  // namespace tautring::detail
