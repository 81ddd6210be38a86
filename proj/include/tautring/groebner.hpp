#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tautring/polynomial.hpp"

namespace tautring {

/// Coefficient field for a Groebner computation: the rationals, or Z/p for a
/// word-sized prime used as a fast predictor.
struct CoefficientField {
  enum class Kind { Rational, Prime };
  Kind kind = Kind::Rational;
  std::uint32_t prime = 32003;

  static CoefficientField rational() { return {}; }
  static CoefficientField modular(std::uint32_t p) { return {Kind::Prime, p}; }
  bool operator==(const CoefficientField&) const = default;
};

/// "rational" or "prime:N".
CoefficientField parse_field(std::string_view text);
std::string to_string(const CoefficientField& field);

/// Generators with zeros and duplicates removed, order of first appearance kept.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);
  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

struct GroebnerOptions {
  CoefficientField field;
  /// Wall-clock budget; nullopt means unlimited.
  std::optional<std::chrono::milliseconds> timeout;
};

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_size_peak = 0;
};

/// Reduced Groebner basis. Elements are monic, sorted ascending by leading
/// monomial, and live in a copy of the ideal's ring that carries `order`.
/// Over a prime field the coefficients are the canonical representatives
/// in [0, p) read as integers.
struct GroebnerBasis {
  RingPtr ring;
  MonomialOrder order;
  CoefficientField field;
  std::vector<Polynomial> elements;
  /// Leading monomials of `elements`: the minimal generators of the
  /// leading-term ideal.
  std::vector<Monomial> leading;
  GroebnerStats stats;

  bool is_unit() const;
};

struct GroebnerResult {
  enum class Status { Complete, Timeout };
  Status status = Status::Complete;
  std::optional<GroebnerBasis> basis;  // set when Complete
  GroebnerStats stats;
  std::chrono::milliseconds elapsed{0};
};

/// The ring with the same variables and weights but a different order.
RingPtr with_order(const RingPtr& ring, const MonomialOrder& order);

/// Buchberger's algorithm with Gebauer-Moeller pair elimination and sugar
/// pair selection. Never returns a wrong basis: if the budget runs out the
/// result is Status::Timeout with no basis.
GroebnerResult buchberger(const Ideal& ideal, const MonomialOrder& order, const GroebnerOptions& options = {});

/// Remainder of multivariate division over Q in the given order. No term of
/// the result is divisible by a leading monomial of `basis`.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis, const MonomialOrder& order);

/// S-polynomial of two nonzero polynomials in the given order.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Canonical text of a basis: one element per line plus a header naming
/// the ring, order and field.
std::string render_basis(const GroebnerBasis& basis);

/// Krull dimension of k[v_1..v_n]/(leading): the size of the largest set of
/// variables containing the support of no generator. -1 when a generator is 1.
int krull_dimension(const std::vector<Monomial>& leading, std::size_t nvars);

/// Ideal membership by exact linear algebra on the Macaulay matrix of all
/// monomial multiples of the generators with total degree <= degree_bound.
/// Refuses (UsageError) instances with more than 4 variables or a bound
/// above 8.
bool membership_oracle(const Polynomial& p, const Ideal& ideal, int degree_bound);

}  // namespace tautring
