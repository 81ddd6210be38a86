#include "tautring/records.hpp"

#include <charconv>

namespace tautring {

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class T>
bool parse_int(std::string_view s, T& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

std::string_view csv_header() { return "p1,p2,mode,kmax,p4_mode,field,dimension,runtime_ms"; }

std::string to_csv_row(const FiberDimensionRecord& r) {
  std::string out = to_string(r.p1);
  out += ',';
  out += to_string(r.p2);
  out += ',';
  out += to_string(r.mode);
  out += ',';
  out += std::to_string(r.k_max);
  out += ',';
  out += to_string(r.p4_mode);
  out += ',';
  out += to_string(r.field);
  out += ',';
  if (r.dimension) out += std::to_string(*r.dimension);
  out += ',';
  out += std::to_string(r.runtime_ms);
  return out;
}

std::string to_csv(const std::vector<FiberDimensionRecord>& records) {
  std::string out(csv_header());
  out += '\n';
  for (const auto& r : records) {
    out += to_csv_row(r);
    out += '\n';
  }
  return out;
}

std::vector<FiberDimensionRecord> parse_csv(std::string_view text) {
  std::vector<FiberDimensionRecord> out;
  std::size_t line_no = 0;
  bool seen_header = false;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    auto fail = [&](const std::string& what) -> UsageError {
      return UsageError("CSV line " + std::to_string(line_no) + ": " + what);
    };
    if (!seen_header) {
      if (line != csv_header()) throw fail("expected header '" + std::string(csv_header()) + "'");
      seen_header = true;
      continue;
    }
    auto cols = split(line, ',');
    if (cols.size() != 8) throw fail("expected 8 columns, found " + std::to_string(cols.size()));
    FiberDimensionRecord r;
    try {
      r.p1 = parse_rational(cols[0]);
      r.p2 = parse_rational(cols[1]);
      r.mode = parse_parameter_mode(cols[2]);
      r.p4_mode = parse_p4_mode(cols[4]);
      r.field = parse_field(cols[5]);
    } catch (const UsageError& e) {
      throw fail(e.what());
    }
    if (!parse_int(cols[3], r.k_max) || r.k_max < 0) throw fail("bad kmax '" + std::string(cols[3]) + "'");
    if (!cols[6].empty()) {
      int d = 0;
      if (!parse_int(cols[6], d) || d < -1 || d > 8) throw fail("bad dimension '" + std::string(cols[6]) + "'");
      r.dimension = d;
    }
    if (!parse_int(cols[7], r.runtime_ms) || r.runtime_ms < 0)
      throw fail("bad runtime_ms '" + std::string(cols[7]) + "'");
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace tautring
