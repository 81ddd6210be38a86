#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace tautring {

/// Exact rational number. GMP keeps every arithmetic result in lowest terms
/// with a positive denominator; values built from raw parts must go through
/// make_rational() or parse_rational() so the same holds for them.
using Rational = mpq_class;
using Integer = mpz_class;

/// Raised for caller mistakes: mismatched rings, malformed text, unknown
/// variables, violated preconditions. The CLI maps it to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computation detects a broken internal invariant (exit 4).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Rational make_rational(const Integer& num, const Integer& den);

/// Accepts "n" or "n/d" (d > 0) with optional sign on n and surrounding
/// whitespace.
Rational parse_rational(std::string_view text);

/// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& q);

}  // namespace tautring
