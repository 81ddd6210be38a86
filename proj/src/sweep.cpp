#include "tautring/sweep.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <thread>

namespace tautring {

namespace {

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

}  // namespace

PointOutcome compute_point(const FiberRequest& request, ResultCache* cache) {
  PointOutcome out;
  std::string key;
  std::unique_lock<std::mutex> guard;
  if (cache) {
    key = sha256_hex(request_descriptor(request, specialized_generators(request)));
    guard = cache->lock(key);
    std::string warning;
    auto hit = cache->load(key, &warning);
    if (!warning.empty()) out.warnings.push_back(warning);
    if (hit) {
      out.record = hit->record;
      out.basis_text = hit->basis_text;
      out.from_cache = true;
      return out;
    }
  }

  const auto start = Clock::now();
  auto result = specialize_and_dim(request);
  if (result.basis) {
    out.record = result.record;
    out.basis_text = render_basis(*result.basis);
    if (cache) cache->store({key, request, out.record, out.basis_text});
    return out;
  }

  out.timed_out = true;
  if (request.field.kind == CoefficientField::Kind::Rational) {
    FiberRequest fallback = request;
    fallback.field = CoefficientField::modular(CoefficientField{}.prime);
    auto predicted = specialize_and_dim(fallback);
    out.record = predicted.record;
    if (predicted.basis) out.basis_text = render_basis(*predicted.basis);
    out.warnings.push_back("rational computation at p1=" + to_string(request.p1) +
                           " timed out; reporting the " + to_string(fallback.field) + " prediction");
  } else {
    out.record = result.record;
  }
  out.record.runtime_ms = elapsed_ms(start);
  return out;
}

FiberRequest SweepRequest::point_request(const SweepPoint& point) const {
  FiberRequest r;
  r.p1 = point.p1;
  r.p2 = point.p2;
  r.k_max = k_max;
  r.p4_mode = p4_mode;
  r.field = field;
  r.order = order;
  r.timeout = timeout;
  return r;
}

namespace {

SweepRequest parse_request_json(std::string_view json_text) {
  using nlohmann::json;
  json doc = json::parse(json_text);
  if (!doc.is_object()) throw UsageError("sweep request: expected a JSON object");
  auto rational = [](const json& v, const char* what) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw UsageError(std::string("sweep request: ") + what + " must be an integer or a string");
  };
  auto integer = [&](const char* name, int lo) {
    const auto& v = doc.at(name);
    if (!v.is_number_integer() || v.get<long>() < lo || v.get<long>() > 1000000)
      throw UsageError(std::string("sweep request: bad ") + name);
    return v.get<int>();
  };

  SweepRequest req;
  for (const auto& [name, _] : doc.items()) {
    static const char* known[] = {"points", "kmax",  "p4_mode", "field",   "grading", "permutation",
                                  "jobs",   "timeout_seconds",  "csv",     "svg"};
    if (std::find_if(std::begin(known), std::end(known), [&](const char* k) { return name == k; }) ==
        std::end(known))
      throw UsageError("sweep request: unknown key '" + name + "'");
  }
  if (!doc.contains("points") || !doc["points"].is_array() || doc["points"].empty())
    throw UsageError("sweep request: 'points' must be a non-empty array");
  for (const auto& p : doc["points"]) {
    if (!p.is_object() || !p.contains("p1")) throw UsageError("sweep request: each point needs 'p1'");
    SweepPoint point{rational(p["p1"], "p1"), std::nullopt};
    if (p.contains("p2")) point.p2 = rational(p["p2"], "p2");
    req.points.push_back(point);
  }
  if (doc.contains("kmax")) req.k_max = integer("kmax", 3);
  if (doc.contains("p4_mode")) req.p4_mode = parse_p4_mode(doc["p4_mode"].get<std::string>());
  if (doc.contains("field")) req.field = parse_field(doc["field"].get<std::string>());
  if (doc.contains("grading")) {
    auto g = doc["grading"].get<std::string>();
    if (g == "ones")
      req.order.grading = MonomialOrder::Grading::AllOnes;
    else if (g != "weights")
      throw UsageError("sweep request: grading must be 'ones' or 'weights'");
  }
  if (doc.contains("permutation")) {
    auto ring = base_ring();
    std::vector<bool> seen(ring->size(), false);
    for (const auto& v : doc["permutation"]) {
      auto i = ring->index_of(v.get<std::string>());
      if (!i || seen[*i]) throw UsageError("sweep request: bad permutation");
      seen[*i] = true;
      req.order.permutation.push_back(*i);
    }
    if (req.order.permutation.size() != ring->size()) throw UsageError("sweep request: permutation is incomplete");
  }
  if (doc.contains("jobs")) req.jobs = integer("jobs", 1);
  if (doc.contains("timeout_seconds")) req.timeout = std::chrono::seconds(integer("timeout_seconds", 1));
  if (doc.contains("csv")) req.csv_path = doc["csv"].get<std::string>();
  if (doc.contains("svg")) req.svg_path = doc["svg"].get<std::string>();
  return req;
}

}  // namespace

SweepRequest parse_sweep_request(std::string_view json_text) {
  try {
    return parse_request_json(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("sweep request: ") + e.what());
  }
}

std::vector<PointOutcome> run_sweep(const SweepRequest& request, ResultCache* cache) {
  std::vector<PointOutcome> out(request.points.size());
  std::vector<std::exception_ptr> errors(request.points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < request.points.size();) {
      try {
        out[i] = compute_point(request.point_request(request.points[i]), cache);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t jobs = std::min<std::size_t>(std::max(1, request.jobs), request.points.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace tautring
