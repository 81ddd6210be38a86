#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tautring/cache.hpp"
#include "tautring/fiber.hpp"

namespace tautring {

struct PointOutcome {
  FiberDimensionRecord record;
  std::string basis_text;  // empty when nothing finished
  bool from_cache = false;
  /// The requested computation ran out of time. A rational request then
  /// carries the prime-field prediction, flagged by record.field.
  bool timed_out = false;
  std::vector<std::string> warnings;
};

/// Fiber dimension for one request, served from `cache` when possible.
/// Only complete results in the requested field are stored.
PointOutcome compute_point(const FiberRequest& request, ResultCache* cache);

struct SweepPoint {
  Rational p1;
  std::optional<Rational> p2;  // absent: signature mode
};

struct SweepRequest {
  std::vector<SweepPoint> points;
  int k_max = 10;
  P4Mode p4_mode = P4Mode::EulerSquared;
  CoefficientField field;
  MonomialOrder order{MonomialOrder::Grading::Weights, {}};
  int jobs = 1;
  std::optional<std::chrono::milliseconds> timeout;
  std::optional<std::string> csv_path;
  std::optional<std::string> svg_path;

  FiberRequest point_request(const SweepPoint& point) const;
};

/// JSON request:
///   {"points": [{"p1": "2"}, {"p1": 1, "p2": "7/4"}], "kmax": 10,
///    "p4_mode": "euler-squared", "field": "rational", "grading": "weights",
///    "permutation": ["a12", "a8", ...],
///    "jobs": 2, "timeout_seconds": 600, "csv": "out.csv", "svg": "out.svg"}
/// Only "points" is required. Rationals may be JSON integers or strings.
SweepRequest parse_sweep_request(std::string_view json_text);

/// Runs every point on a pool of `jobs` workers. Outcomes come back in the
/// order of request.points.
std::vector<PointOutcome> run_sweep(const SweepRequest& request, ResultCache* cache);

}  // namespace tautring
