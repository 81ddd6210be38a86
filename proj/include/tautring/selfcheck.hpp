#pragma once

#include <string>
#include <vector>

#include "tautring/cache.hpp"

namespace tautring {

struct SelfcheckOptions {
  /// Cache to scan and repair; may be null.
  ResultCache* cache = nullptr;
  /// Test fixture: shifts the z^2 coefficient of the L series before the
  /// genus check so that the check must fail.
  bool perturb_l2 = false;
};

struct SelfcheckReport {
  struct Check {
    std::string name;
    bool passed;
    std::string detail;
  };
  std::vector<Check> checks;
  std::vector<std::string> warnings;

  bool ok() const;
};

/// Fast invariant suite: genus formulas, fibre integrals, the signature
/// identity, multiplicativity, a small Groebner cross-check and one
/// modular fiber dimension. With a cache, damaged entries are reported as
/// warnings and recomputed.
SelfcheckReport run_selfcheck(const SelfcheckOptions& options);

}  // namespace tautring
