#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tautring/fiber.hpp"

namespace tautring {

/// `p1,p2,mode,kmax,p4_mode,field,dimension,runtime_ms`
std::string_view csv_header();

/// One CSV line without the trailing newline. A timed-out record has an
/// empty dimension column.
std::string to_csv_row(const FiberDimensionRecord& record);

/// Header plus one line per record, each terminated by '\n'.
std::string to_csv(const std::vector<FiberDimensionRecord>& records);

/// Parses text produced by to_csv. Blank lines are skipped and an empty
/// text has no records; anything else that does not fit the schema throws
/// UsageError naming the line number.
std::vector<FiberDimensionRecord> parse_csv(std::string_view text);

}  // namespace tautring
