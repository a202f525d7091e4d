#include "leafcut/algebra/ring.hpp"

#include <algorithm>
#include <set>

namespace leafcut {

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

Ring::Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable: " + v);
  }
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

std::size_t Ring::require_index(const std::string& name) const {
  auto i = index_of(name);
  if (!i) throw RingMismatch("variable '" + name + "' not in ring");
  return *i;
}

RingPtr make_ring(std::vector<std::string> vars) {
  return std::make_shared<const Ring>(std::move(vars));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
  if (!same_ring(a, b)) throw RingMismatch(std::string("ring mismatch in ") + where);
}

RingPtr ring_union(const RingPtr& a, const RingPtr& b) {
  std::vector<std::string> vars = a->vars();
  for (const auto& v : b->vars())
    if (!a->index_of(v)) vars.push_back(v);
  if (vars.size() == a->size()) return a;
  return make_ring(std::move(vars));
}

}  // namespace leafcut
