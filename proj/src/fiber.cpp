#include "tautring/fiber.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace tautring {

Rational FiberRequest::effective_p2() const { return p2 ? *p2 : (Rational(45) + p1 * p1) / 7; }

RingPtr base_ring() {
  static const RingPtr ring = make_ring(ModelRing::base_variables(), ModelRing::base_weights());
  return ring;
}

namespace {

const std::vector<KappaClass>& memoized_generators(ParameterMode mode, P4Mode p4_mode, int k_max) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, std::vector<KappaClass>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_tuple(int(mode), int(p4_mode), k_max);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, hirzebruch_generators(ModelRing(mode, p4_mode), k_max)).first;
  return it->second;
}

}  // namespace

std::vector<Polynomial> specialized_generators(const FiberRequest& request) {
  const auto& gens = memoized_generators(request.mode(), request.p4_mode, request.k_max);
  std::map<std::string, Rational> values{{"P1", request.p1}};
  if (request.p2) values.emplace("P2", *request.p2);
  const auto& target = base_ring();
  std::map<std::string, Polynomial> drop;
  for (const auto& [name, _] : values) drop.emplace(name, Polynomial(target));
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    Polynomial s = substitute(g.value, values);
    for (const auto& [name, _] : values)
      if (s.uses_variable(*s.ring()->index_of(name))) throw InvariantError("parameter survived specialization");
    out.push_back(map_to_ring(s, target, drop));
  }
  return out;
}

FiberResult specialize_and_dim(const FiberRequest& request) {
  if (request.k_max < 3) throw UsageError("k_max must be >= 3");
  const auto start = std::chrono::steady_clock::now();
  Ideal ideal(base_ring(), specialized_generators(request));
  GroebnerOptions options{request.field, request.timeout};
  if (request.timeout) {
    auto spent = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    options.timeout = std::max(std::chrono::milliseconds(1), *request.timeout - spent);
  }
  auto gb = buchberger(ideal, request.order, options);

  FiberResult result;
  auto& rec = result.record;
  rec.p1 = request.p1;
  rec.p2 = request.effective_p2();
  rec.mode = request.mode();
  rec.k_max = request.k_max;
  rec.p4_mode = request.p4_mode;
  rec.field = request.field;
  if (gb.status == GroebnerResult::Status::Complete) {
    rec.dimension = krull_dimension(gb.basis->leading, base_ring()->size());
    result.basis = std::move(gb.basis);
  }
  rec.runtime_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace tautring
