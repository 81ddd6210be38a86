#pragma once

#include <string>
#include <vector>

#include "tautring/fiber.hpp"

namespace tautring {

/// SVG scatter plot of fiber dimensions over the (P1, P2) plane, viewport
/// P1 in [-4, 4], P2 in [-3, 30]. Draws the curves P2 = 7 P1^2 / 4
/// (A-hat_2 = 0), P2 = (45 + P1^2)/7 (L2 = 1) and P2 = P1^2/7 (L2 = 0), then
/// one marker per record: a square for dimension 3, a circle for dimension
/// 1 and a diamond for anything else. Output depends only on the records.
std::string render_figure(const std::vector<FiberDimensionRecord>& records);

}  // namespace tautring
