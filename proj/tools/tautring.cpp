#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tautring/figure.hpp"
#include "tautring/genera.hpp"
#include "tautring/records.hpp"
#include "tautring/selfcheck.hpp"
#include "tautring/sweep.hpp"

using namespace tautring;

namespace {

constexpr int kExitOk = 0, kExitUsage = 2, kExitTimeout = 3, kExitInvariant = 4;

struct Flags {
  std::string mode;
  std::string p4_mode = "euler-squared";
  std::string field = "rational";
  int kmax = 10;
  int jobs = 0;
  std::string cache_dir;
  bool no_cache = false;
  int timeout_seconds = 0;
  std::string p1, p2;
  std::string grading = "weights";
  std::string permutation;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw UsageError("cannot write " + path);
}

std::optional<std::filesystem::path> cache_dir(const Flags& f) {
  if (f.no_cache) return std::nullopt;
  if (!f.cache_dir.empty()) return f.cache_dir;
  if (const char* env = std::getenv("TAUTRING_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "tautring";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "tautring";
  return ".tautring-cache";
}

MonomialOrder order_from(const Flags& f) {
  MonomialOrder order;
  if (f.grading == "weights")
    order.grading = MonomialOrder::Grading::Weights;
  else if (f.grading != "ones")
    throw UsageError("--grading must be 'ones' or 'weights'");
  if (!f.permutation.empty()) {
    auto ring = base_ring();
    std::vector<bool> seen(ring->size(), false);
    std::stringstream in(f.permutation);
    for (std::string name; std::getline(in, name, ',');) {
      auto i = ring->index_of(name);
      if (!i || seen[*i]) throw UsageError("--permutation: bad or repeated variable '" + name + "'");
      seen[*i] = true;
      order.permutation.push_back(*i);
    }
    if (order.permutation.size() != ring->size()) throw UsageError("--permutation must list all 8 base variables");
  }
  return order;
}

void add_model_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--mode", f.mode, "signature or free");
  cmd->add_option("--p4-mode", f.p4_mode, "euler-squared or zero");
}

void add_run_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--field", f.field, "rational or prime:N");
  cmd->add_option("--cache-dir", f.cache_dir, "result cache directory (overrides TAUTRING_CACHE)");
  cmd->add_flag("--no-cache", f.no_cache, "neither read nor write the cache");
  cmd->add_option("--timeout-seconds", f.timeout_seconds, "wall-clock budget per point");
  cmd->add_option("--grading", f.grading, "degrevlex grading: weights or ones");
  cmd->add_option("--permutation", f.permutation, "comma-separated variable order");
}

FiberRequest fiber_request(const Flags& f) {
  FiberRequest r;
  if (f.p1.empty()) throw UsageError("--p1 is required");
  r.p1 = parse_rational(f.p1);
  if (!f.p2.empty()) r.p2 = parse_rational(f.p2);
  if (!f.mode.empty()) {
    auto mode = parse_parameter_mode(f.mode);
    if (mode == ParameterMode::Free && !r.p2) throw UsageError("free mode needs --p2");
    if (mode == ParameterMode::Signature && r.p2) throw UsageError("signature mode takes no --p2");
  }
  if (f.kmax < 3) throw UsageError("--kmax must be at least 3");
  r.k_max = f.kmax;
  r.p4_mode = parse_p4_mode(f.p4_mode);
  r.field = parse_field(f.field);
  r.order = order_from(f);
  if (f.timeout_seconds < 0) throw UsageError("--timeout-seconds must be positive");
  if (f.timeout_seconds > 0) r.timeout = std::chrono::seconds(f.timeout_seconds);
  return r;
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Hirzebruch ideals of the tautological ring of HP^2 fibrations"};
  app.require_subcommand(1);
  Flags f;

  auto* genus = app.add_subcommand("genus", "print K_1..K_n of the L or Ahat genus");
  std::string genus_kind;
  int genus_n = 0;
  genus->add_option("kind", genus_kind, "L or Ahat")->required();
  genus->add_option("n", genus_n, "highest degree")->required()->check(CLI::Range(0, 64));

  auto* kappa = app.add_subcommand("kappa", "print kappa_{L_k}");
  int kappa_k = 0;
  kappa->add_option("k", kappa_k, "genus degree")->required()->check(CLI::Range(1, 64));
  add_model_flags(kappa, f);

  auto* gens = app.add_subcommand("gens", "print the Hirzebruch generators kappa_{L_3}..kappa_{L_kmax}");
  add_model_flags(gens, f);
  gens->add_option("--kmax", f.kmax, "largest k");
  gens->add_option("--p1", f.p1, "specialize P1");
  gens->add_option("--p2", f.p2, "specialize P2");

  auto* dim = app.add_subcommand("dim", "Krull dimension of one fiber, as CSV");
  add_model_flags(dim, f);
  add_run_flags(dim, f);
  dim->add_option("--kmax", f.kmax, "largest k");
  dim->add_option("--p1", f.p1, "value of P1")->required();
  dim->add_option("--p2", f.p2, "value of P2 (free mode)");
  bool no_header = false;
  std::string basis_out;
  dim->add_flag("--no-header", no_header, "omit the CSV header");
  dim->add_option("--basis-out", basis_out, "write the Groebner basis to this file");

  auto* sweep = app.add_subcommand("sweep", "run a JSON sweep request");
  std::string request_path, csv_out, svg_out;
  sweep->add_option("request", request_path, "JSON request file")->required();
  sweep->add_option("--jobs", f.jobs, "worker count (overrides the request)");
  sweep->add_option("--csv", csv_out, "CSV output path (default: request, else stdout)");
  sweep->add_option("--svg", svg_out, "SVG output path");
  sweep->add_option("--cache-dir", f.cache_dir, "result cache directory (overrides TAUTRING_CACHE)");
  sweep->add_flag("--no-cache", f.no_cache, "neither read nor write the cache");
  sweep->add_option("--timeout-seconds", f.timeout_seconds, "per point budget (overrides the request)");

  auto* figure = app.add_subcommand("figure", "SVG figure from a results CSV");
  std::string figure_in, figure_out;
  figure->add_option("results", figure_in, "CSV file")->required();
  figure->add_option("-o,--output", figure_out, "SVG path (default stdout)");

  auto* selfcheck = app.add_subcommand("selfcheck", "fast invariant suite and cache check");
  std::string inject;
  selfcheck->add_option("--cache-dir", f.cache_dir, "result cache directory (overrides TAUTRING_CACHE)");
  selfcheck->add_flag("--no-cache", f.no_cache, "skip the cache check");
  selfcheck->add_option("--inject-fault", inject, "")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (genus->parsed()) {
    auto seq = multiplicative_sequence(char_series(parse_genus_kind(genus_kind), genus_n), genus_n);
    for (int i = 1; i <= genus_n; ++i) std::cout << render(seq.K[i]) << "\n";
    return kExitOk;
  }
  if (kappa->parsed()) {
    ModelRing model(f.mode.empty() ? ParameterMode::Signature : parse_parameter_mode(f.mode), parse_p4_mode(f.p4_mode));
    std::cout << render(kappa_L(model, kappa_k)) << "\n";
    return kExitOk;
  }
  if (gens->parsed()) {
    if (f.kmax < 3) throw UsageError("--kmax must be at least 3");
    if (!f.p1.empty()) {
      for (const auto& g : specialized_generators(fiber_request(f))) std::cout << render(g) << "\n";
      return kExitOk;
    }
    if (!f.p2.empty()) throw UsageError("--p2 needs --p1");
    ModelRing model(f.mode.empty() ? ParameterMode::Signature : parse_parameter_mode(f.mode), parse_p4_mode(f.p4_mode));
    for (const auto& g : hirzebruch_generators(model, f.kmax)) std::cout << render(g.value) << "\n";
    return kExitOk;
  }
  if (dim->parsed()) {
    auto request = fiber_request(f);
    std::optional<ResultCache> cache;
    if (auto dir = cache_dir(f)) cache.emplace(*dir);
    auto out = compute_point(request, cache ? &*cache : nullptr);
    print_warnings(out.warnings);
    if (!no_header) std::cout << csv_header() << "\n";
    std::cout << to_csv_row(out.record) << "\n";
    if (!basis_out.empty() && !out.basis_text.empty()) write_text(basis_out, out.basis_text);
    return out.timed_out ? kExitTimeout : kExitOk;
  }
  if (sweep->parsed()) {
    auto request = parse_sweep_request(read_text(request_path));
    if (f.jobs > 0) request.jobs = f.jobs;
    if (f.timeout_seconds > 0) request.timeout = std::chrono::seconds(f.timeout_seconds);
    if (!csv_out.empty()) request.csv_path = csv_out;
    if (!svg_out.empty()) request.svg_path = svg_out;
    std::optional<ResultCache> cache;
    if (auto dir = cache_dir(f)) cache.emplace(*dir);
    auto outcomes = run_sweep(request, cache ? &*cache : nullptr);
    std::vector<FiberDimensionRecord> records;
    bool timed_out = false;
    for (const auto& o : outcomes) {
      print_warnings(o.warnings);
      records.push_back(o.record);
      timed_out = timed_out || o.timed_out;
    }
    std::string csv = to_csv(records);
    if (request.csv_path)
      write_text(*request.csv_path, csv);
    else
      std::cout << csv;
    if (request.svg_path) write_text(*request.svg_path, render_figure(records));
    return timed_out ? kExitTimeout : kExitOk;
  }
  if (figure->parsed()) {
    auto svg = render_figure(parse_csv(read_text(figure_in)));
    if (figure_out.empty())
      std::cout << svg;
    else
      write_text(figure_out, svg);
    return kExitOk;
  }
  if (selfcheck->parsed()) {
    if (!inject.empty() && inject != "l2") throw UsageError("unknown fault '" + inject + "'");
    std::optional<ResultCache> cache;
    if (auto dir = cache_dir(f)) cache.emplace(*dir);
    SelfcheckOptions options{cache ? &*cache : nullptr, inject == "l2"};
    auto report = run_selfcheck(options);
    print_warnings(report.warnings);
    for (const auto& c : report.checks)
      std::cout << (c.passed ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    return report.ok() ? kExitOk : kExitInvariant;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
}
