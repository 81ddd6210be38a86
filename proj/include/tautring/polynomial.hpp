#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tautring/rational.hpp"
#include "tautring/ring.hpp"

namespace tautring {

struct Term {
  Monomial mono;
  Rational coeff;

  bool operator==(const Term&) const = default;
};

/// Sparse multivariate polynomial with rational coefficients. Terms are kept
/// sorted descending in the ring's monomial order with no zero coefficients,
/// so structural equality is mathematical equality. Values are immutable
/// through the public interface and safe to share across threads.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  /// Sorts, merges equal monomials and drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial variable(RingPtr ring, std::size_t index);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the constant monomial (zero if absent).
  Rational constant_term() const;
  const Term& leading() const { return terms_.front(); }
  std::size_t size() const { return terms_.size(); }
  bool uses_variable(std::size_t index) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& q) const;
  Polynomial operator-(const Polynomial& q) const;
  Polynomial operator*(const Polynomial& q) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial pow(unsigned n) const;

  bool operator==(const Polynomial& q) const;

 private:
  void check_same_ring(const Polynomial& q) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Product with every term of weighted degree above `max_degree` dropped.
Polynomial truncated_mul(const Polynomial& p, const Polynomial& q, long max_degree);

/// Terms of weighted degree exactly `degree`.
Polynomial homogeneous_part(const Polynomial& p, long degree);

struct DegreeInfo {
  enum class Kind { Zero, Homogeneous, Inhomogeneous };
  Kind kind = Kind::Zero;
  long degree = 0;            // valid when Homogeneous
  std::set<long> degrees;     // every weighted degree present

  bool homogeneous() const { return kind == Kind::Homogeneous; }
};

/// Weighted degree; the zero polynomial reports Kind::Zero (degree -inf).
DegreeInfo weighted_degree(const Polynomial& p);

/// Simultaneous substitution. Values must live in p's ring; variables not in
/// the map pass through unchanged.
Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& assignments);
Polynomial substitute(const Polynomial& p, const std::map<std::string, Rational>& assignments);

/// Moves p into `target`: each source variable goes to its assignment if it
/// has one, otherwise to the target variable of the same name.
Polynomial map_to_ring(const Polynomial& p, const RingPtr& target,
                       const std::map<std::string, Polynomial>& assignments = {});

/// Canonical text, e.g. "-1/45*p1^2 + 7/45*p2".
std::string render(const Polynomial& p);

/// Parses the text grammar
///   poly  := ['+'|'-'] term (('+'|'-') term)*
///   term  := coef | [coef '*'] factor ('*' factor)*
///   factor:= var ['^' exp]
/// Whitespace is ignored between tokens. Throws UsageError with a position.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace tautring
