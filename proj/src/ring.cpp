#include "tautring/ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tautring/rational.hpp"

namespace tautring {

std::string describe(const MonomialOrder& order) {
  std::string s = order.grading == MonomialOrder::Grading::AllOnes ? "grevlex(ones)" : "grevlex(weights)";
  if (!order.permutation.empty()) {
    s += "[";
    for (std::size_t i = 0; i < order.permutation.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(order.permutation[i]);
    }
    s += "]";
  }
  return s;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    int v = int(exp[i]) + int(other.exp[i]);
    if (v > INT16_MAX) throw std::overflow_error("monomial exponent overflow");
    r.exp[i] = static_cast<std::int16_t>(v);
  }
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

bool Monomial::is_one() const {
  return std::all_of(exp.begin(), exp.end(), [](auto e) { return e == 0; });
}

RingSpec::RingSpec(std::vector<std::string> names, std::vector<int> weights, MonomialOrder order)
    : names_(std::move(names)), weights_(std::move(weights)), order_(std::move(order)) {
  if (names_.size() != weights_.size()) throw UsageError("ring: names and weights differ in length");
  if (names_.size() > kMaxVars) throw UsageError("ring: too many variables");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || !seen.insert(n).second) throw UsageError("ring: duplicate or empty variable name '" + n + "'");
  }
  for (int w : weights_)
    if (w < 0) throw UsageError("ring: negative weight");
  if (order_.permutation.empty()) {
    perm_.resize(names_.size());
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  } else {
    perm_ = order_.permutation;
    auto sorted = perm_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != i || sorted.size() != names_.size()) throw UsageError("ring: order permutation is not a permutation");
  }
}

std::optional<std::size_t> RingSpec::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

long RingSpec::weighted_degree(const Monomial& m) const {
  long d = 0;
  for (std::size_t i = 0; i < names_.size(); ++i) d += long(m.exp[i]) * weights_[i];
  return d;
}

long RingSpec::order_degree(const Monomial& m) const {
  if (order_.grading == MonomialOrder::Grading::Weights) return weighted_degree(m);
  long d = 0;
  for (std::size_t i = 0; i < names_.size(); ++i) d += m.exp[i];
  return d;
}

int RingSpec::compare(const Monomial& a, const Monomial& b) const {
  long da = order_degree(a), db = order_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t k = perm_.size(); k-- > 0;) {
    auto v = perm_[k];
    if (a.exp[v] != b.exp[v]) return a.exp[v] < b.exp[v] ? 1 : -1;
  }
  return 0;
}

bool RingSpec::same_as(const RingSpec& other) const {
  return this == &other || (names_ == other.names_ && weights_ == other.weights_ && order_ == other.order_);
}

RingPtr make_ring(std::vector<std::string> names, std::vector<int> weights, MonomialOrder order) {
  return std::make_shared<const RingSpec>(std::move(names), std::move(weights), std::move(order));
}

RingPtr pontryagin_ring(int n) {
  std::vector<std::string> names;
  std::vector<int> weights;
  for (int j = 1; j <= n; ++j) {
    names.push_back("p" + std::to_string(j));
    weights.push_back(j);
  }
  return make_ring(std::move(names), std::move(weights));
}

}  // namespace tautring
