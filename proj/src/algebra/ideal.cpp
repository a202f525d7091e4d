#include "leafcut/algebra/ideal.hpp"

#include <algorithm>

namespace leafcut {

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens) : ring_(std::move(ring)) {
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    require_same_ring(ring_, g.ring(), "Ideal");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  Poly one = Poly::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

bool Ideal::has_unit_generator() const {
  return std::any_of(gens_.begin(), gens_.end(), [](const Poly& g) { return g.is_constant(); });
}

int Ideal::max_degree() const {
  int d = -1;
  for (const auto& g : gens_) d = std::max(d, g.total_degree());
  return d;
}

Ideal Ideal::in_ring(const RingPtr& target) const {
  std::vector<Poly> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.in_ring(target));
  return Ideal(target, std::move(out));
}

std::vector<std::string> Ideal::serialize(const MonomialOrder& ord) const {
  std::vector<std::string> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.to_string(ord));
  std::sort(out.begin(), out.end());
  return out;
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal sum");
  std::vector<Poly> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_sum(const Ideal& a, const std::vector<Poly>& extra) {
  std::vector<Poly> gens = a.gens();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal product");
  std::vector<Poly> gens;
  for (const auto& f : a.gens())
    for (const auto& g : b.gens()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

}  // namespace leafcut
