#include "leafcut/algebra/poly.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace leafcut {

namespace {

bool storage_greater(const Term& a, const Term& b) { return a.mono > b.mono; }

std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back(b[j]);
      if (subtract) out.back().coef = -out.back().coef;
      ++j;
    } else {
      Rational c = a[i].coef;
      if (subtract) c -= b[j].coef;
      else c += b[j].coef;
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly::Poly(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("Poly requires a ring");
}

Poly Poly::constant(RingPtr ring, const Rational& c) {
  Poly p(std::move(ring));
  if (c != 0) p.terms_.push_back({Monomial(p.nvars()), c});
  return p;
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
  std::size_t n = ring->size();
  return monomial(std::move(ring), Monomial::variable(n, index), 1);
}

Poly Poly::variable(RingPtr ring, const std::string& name) {
  std::size_t i = ring->require_index(name);
  return variable(std::move(ring), i);
}

Poly Poly::monomial(RingPtr ring, Monomial m, const Rational& c) {
  Poly p(std::move(ring));
  if (m.size() != p.nvars()) throw std::invalid_argument("monomial arity mismatch");
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  Poly p(std::move(ring));
  for (const auto& t : terms)
    if (t.mono.size() != p.nvars()) throw std::invalid_argument("monomial arity mismatch");
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(), storage_greater);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  terms_ = std::move(out);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

std::optional<Rational> Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].mono.is_one()) return terms_[0].coef;
  return std::nullopt;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

int Poly::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

std::vector<bool> Poly::support_mask() const {
  std::vector<bool> mask(nvars(), false);
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < nvars(); ++i)
      if (t.mono[i] > 0) mask[i] = true;
  return mask;
}

const Term& Poly::leading_term(const MonomialOrder& ord) const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  if (ord.kind() == MonomialOrder::Kind::lex) return terms_.front();
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (ord.compare(t.mono, best->mono) > 0) best = &t;
  return *best;
}

Poly Poly::monic(const MonomialOrder& ord) const {
  if (is_zero()) return *this;
  Rational lc = leading_coefficient(ord);
  if (lc == 1) return *this;
  Poly p(*this);
  for (auto& t : p.terms_) t.coef /= lc;
  return p;
}

Poly Poly::operator-() const {
  Poly p(*this);
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_ring(a.ring_, b.ring_, "Poly::operator+");
  Poly p(a.ring_);
  p.terms_ = merge_add(a.terms_, b.terms_, false);
  return p;
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same_ring(a.ring_, b.ring_, "Poly::operator-");
  Poly p(a.ring_);
  p.terms_ = merge_add(a.terms_, b.terms_, true);
  return p;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_ring(a.ring_, b.ring_, "Poly::operator*");
  Poly p(a.ring_);
  if (a.is_zero() || b.is_zero()) return p;
  if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coef);
  if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coef);
  std::map<Monomial, Rational, std::greater<>> acc;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.mono * t.mono] += s.coef * t.coef;
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Poly operator*(const Rational& c, const Poly& a) {
  Poly p(a.ring_);
  if (c == 0) return p;
  p.terms_ = a.terms_;
  for (auto& t : p.terms_) t.coef *= c;
  return p;
}

Poly Poly::mul_term(const Monomial& m, const Rational& c) const {
  Poly p(ring_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the lexicographic storage order.
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coef * c});
  return p;
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(ring_, 1);
  Poly base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Poly Poly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({std::move(m), t.coef * e});
  }
  return from_terms(ring_, std::move(out));
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars()) throw std::invalid_argument("evaluate: point arity mismatch");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (std::size_t i = 0; i < nvars(); ++i) {
      for (int k = 0; k < t.mono[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Poly Poly::evaluate_partial(std::span<const std::optional<Rational>> values) const {
  if (values.size() != nvars()) throw std::invalid_argument("evaluate_partial: arity mismatch");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Rational c = t.coef;
    Monomial m = t.mono;
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (!values[i] || m[i] == 0) continue;
      Rational pw = 1;
      for (int k = 0; k < m[i]; ++k) pw *= *values[i];
      c *= pw;
      m.set(i, 0);
    }
    if (c != 0) out.push_back({std::move(m), std::move(c)});
  }
  return from_terms(ring_, std::move(out));
}

Poly Poly::substitute(std::size_t var, const Poly& value) const {
  require_same_ring(ring_, value.ring(), "Poly::substitute");
  int maxdeg = degree_in(var);
  if (maxdeg <= 0) return *this;
  std::vector<Poly> powers{constant(ring_, 1)};
  for (int k = 1; k <= maxdeg; ++k) powers.push_back(powers.back() * value);
  Poly out(ring_);
  std::map<int, std::vector<Term>> by_power;
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    int e = m[var];
    m.set(var, 0);
    by_power[e].push_back({std::move(m), t.coef});
  }
  for (auto& [e, ts] : by_power) out += from_terms(ring_, std::move(ts)) * powers[e];
  return out;
}

Poly Poly::in_ring(const RingPtr& target) const {
  if (same_ring(ring_, target)) {
    Poly p(*this);
    p.ring_ = target;
    return p;
  }
  std::vector<std::optional<std::size_t>> map(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) map[i] = target->index_of(ring_->var(i));
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->size());
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!map[i]) throw RingMismatch("variable '" + ring_->var(i) + "' not in target ring");
      m.set(*map[i], t.mono[i]);
    }
    out.push_back({std::move(m), t.coef});
  }
  return from_terms(target, std::move(out));
}

std::map<Monomial, Poly> Poly::split_by(const std::vector<bool>& mask) const {
  std::map<Monomial, std::vector<Term>> groups;
  for (const auto& t : terms_) {
    Monomial key(nvars()), rest(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) (mask[i] ? key : rest).set(i, t.mono[i]);
    groups[key].push_back({std::move(rest), t.coef});
  }
  std::map<Monomial, Poly> out;
  for (auto& [k, ts] : groups) out.emplace(k, from_terms(ring_, std::move(ts)));
  return out;
}

std::string Poly::to_string(const MonomialOrder& ord) const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> sorted;
  sorted.reserve(terms_.size());
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(),
            [&](const Term* a, const Term* b) { return ord.compare(a->mono, b->mono) > 0; });
  std::string out;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (k) out += " + ";
    out += rational_to_string(sorted[k]->coef);
    for (std::size_t i = 0; i < nvars(); ++i) {
      int e = sorted[k]->mono[i];
      if (e > 0) out += "*" + ring_->var(i) + "^" + std::to_string(e);
    }
  }
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
  }
  return true;
}

}  // namespace leafcut
