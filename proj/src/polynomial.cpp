#include "tautring/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace tautring {

namespace {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto e : m.exp) h = (h ^ std::size_t(std::uint16_t(e))) * 1099511628211ull;
    return h;
  }
};

std::vector<Term> canonicalize(const RingSpec& ring, std::vector<Term> terms) {
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(terms.size());
  for (auto& t : terms) {
    auto [it, inserted] = acc.try_emplace(t.mono, t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, c});
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return ring.compare(a.mono, b.mono) > 0; });
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(canonicalize(*ring_, std::move(terms))) {}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  auto idx = ring->index_of(name);
  if (!idx) throw UsageError("unknown variable '" + std::string(name) + "'");
  return variable(std::move(ring), *idx);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw UsageError("variable index out of range");
  Polynomial p(std::move(ring));
  Monomial m;
  m.exp[index] = 1;
  p.terms_.push_back({m, Rational(1)});
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

Rational Polynomial::constant_term() const {
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    if (it->mono.is_one()) return it->coeff;
  return Rational(0);
}

bool Polynomial::uses_variable(std::size_t index) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono.exp[index] != 0; });
}

void Polynomial::check_same_ring(const Polynomial& q) const {
  if (!ring_->same_as(*q.ring_)) throw UsageError("polynomials live in different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& q) const {
  check_same_ring(q);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + q.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < q.terms_.size()) {
    int c = ring_->compare(terms_[i].mono, q.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(q.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + q.terms_[j].coeff;
      if (s != 0) r.terms_.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  r.terms_.insert(r.terms_.end(), terms_.begin() + long(i), terms_.end());
  r.terms_.insert(r.terms_.end(), q.terms_.begin() + long(j), q.terms_.end());
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& q) const { return *this + (-q); }

Polynomial Polynomial::operator*(const Polynomial& q) const {
  check_same_ring(q);
  return truncated_mul(*this, q, -1);
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& q) const {
  return ring_->same_as(*q.ring_) && terms_ == q.terms_;
}

Polynomial truncated_mul(const Polynomial& p, const Polynomial& q, long max_degree) {
  if (!p.ring()->same_as(*q.ring())) throw UsageError("polynomials live in different rings");
  const auto& ring = *p.ring();
  std::vector<Term> prod;
  prod.reserve(p.size() * q.size());
  for (const auto& a : p.terms()) {
    for (const auto& b : q.terms()) {
      Monomial m = a.mono * b.mono;
      if (max_degree >= 0 && ring.weighted_degree(m) > max_degree) continue;
      prod.push_back({m, a.coeff * b.coeff});
    }
  }
  return Polynomial(p.ring(), std::move(prod));
}

Polynomial homogeneous_part(const Polynomial& p, long degree) {
  std::vector<Term> kept;
  for (const auto& t : p.terms())
    if (p.ring()->weighted_degree(t.mono) == degree) kept.push_back(t);
  return Polynomial(p.ring(), std::move(kept));
}

DegreeInfo weighted_degree(const Polynomial& p) {
  DegreeInfo info;
  for (const auto& t : p.terms()) info.degrees.insert(p.ring()->weighted_degree(t.mono));
  if (info.degrees.empty()) return info;
  if (info.degrees.size() == 1) {
    info.kind = DegreeInfo::Kind::Homogeneous;
    info.degree = *info.degrees.begin();
  } else {
    info.kind = DegreeInfo::Kind::Inhomogeneous;
  }
  return info;
}

namespace {

// Evaluates every monomial of p with variable i replaced by images[i],
// caching powers as they are needed.
Polynomial evaluate_monomials(const Polynomial& p, const RingPtr& target, const std::vector<Polynomial>& images) {
  const std::size_t n = p.ring()->size();
  std::vector<std::vector<Polynomial>> powers(n);
  for (std::size_t i = 0; i < n; ++i) powers[i].push_back(Polynomial::constant(target, 1));
  auto power = [&](std::size_t i, int e) -> const Polynomial& {
    auto& cache = powers[i];
    while (int(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[std::size_t(e)];
  };
  std::vector<Term> acc;
  for (const auto& t : p.terms()) {
    Polynomial value = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < n && !value.is_zero(); ++i)
      if (t.mono.exp[i]) value = value * power(i, t.mono.exp[i]);
    acc.insert(acc.end(), value.terms().begin(), value.terms().end());
  }
  return Polynomial(target, std::move(acc));
}

}  // namespace

Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& assignments) {
  const auto& ring = p.ring();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ring->size(); ++i) images.push_back(Polynomial::variable(ring, i));
  for (const auto& [name, value] : assignments) {
    auto idx = ring->index_of(name);
    if (!idx) throw UsageError("substitute: unknown variable '" + name + "'");
    if (!value.ring()->same_as(*ring)) throw UsageError("substitute: value for '" + name + "' lives in another ring");
    images[*idx] = value;
  }
  return evaluate_monomials(p, ring, images);
}

Polynomial substitute(const Polynomial& p, const std::map<std::string, Rational>& assignments) {
  std::map<std::string, Polynomial> values;
  for (const auto& [name, q] : assignments) values.emplace(name, Polynomial::constant(p.ring(), q));
  return substitute(p, values);
}

Polynomial map_to_ring(const Polynomial& p, const RingPtr& target, const std::map<std::string, Polynomial>& assignments) {
  const auto& src = *p.ring();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (auto it = assignments.find(src.name(i)); it != assignments.end()) {
      if (!it->second.ring()->same_as(*target)) throw UsageError("map_to_ring: assignment lives in another ring");
      images.push_back(it->second);
    } else if (target->index_of(src.name(i))) {
      images.push_back(Polynomial::variable(target, src.name(i)));
    } else {
      throw UsageError("map_to_ring: no image for variable '" + src.name(i) + "'");
    }
  }
  for (const auto& [name, value] : assignments)
    if (!src.index_of(name)) throw UsageError("map_to_ring: unknown variable '" + name + "'");
  return evaluate_monomials(p, target, images);
}

std::string render(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const auto& ring = *p.ring();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool negative = t.coeff < 0;
    Rational mag = abs(t.coeff);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    bool one = t.mono.is_one();
    bool need_coef = one || mag != 1;
    if (need_coef) out += to_string(mag);
    bool first_factor = true;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      int e = t.mono.exp[i];
      if (!e) continue;
      if (need_coef || !first_factor) out += "*";
      first_factor = false;
      out += ring.name(i);
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : s_(text), ring_(ring) {}

  Polynomial run() {
    std::vector<Term> terms;
    skip_ws();
    int sign = 1;
    if (peek() == '+' || peek() == '-') sign = take() == '-' ? -1 : 1;
    terms.push_back(term(sign));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      take();
      terms.push_back(term(c == '-' ? -1 : 1));
    }
    return Polynomial(ring_, std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw UsageError("parse error at position " + std::to_string(pos_) + ": " + what);
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char take() { return s_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  Rational coefficient() {
    Integer num(digits());
    Integer den = 1;
    skip_ws();
    if (peek() == '/') {
      take();
      std::size_t at = pos_;
      den = Integer(digits());
      if (den == 0) {
        pos_ = at;
        fail("zero denominator");
      }
    }
    return make_rational(num, den);
  }

  void factor(Monomial& m) {
    skip_ws();
    if (!ident_start(peek())) fail("expected variable name");
    std::size_t start = pos_;
    while (!at_end() && ident_char(peek())) ++pos_;
    std::string name(s_.substr(start, pos_ - start));
    auto idx = ring_->index_of(name);
    if (!idx) {
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    long e = 1;
    skip_ws();
    if (peek() == '^') {
      take();
      auto d = digits();
      if (d.size() > 5 || std::stol(d) > INT16_MAX) fail("exponent too large");
      e = std::stol(d);
    }
    long total = long(m.exp[*idx]) + e;
    if (total > INT16_MAX) fail("exponent too large");
    m.exp[*idx] = static_cast<std::int16_t>(total);
  }

  Term term(int sign) {
    skip_ws();
    Term t{Monomial{}, Rational(sign)};
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff *= coefficient();
      skip_ws();
      if (peek() != '*') return t;
      take();
    }
    factor(t.mono);
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      take();
      factor(t.mono);
    }
    return t;
  }

  std::string_view s_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) { return Parser(text, ring).run(); }

}  // namespace tautring
