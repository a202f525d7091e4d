#pragma once

#include <string>
#include <vector>

#include "leafcut/algebra/poly.hpp"

namespace leafcut {

/// Finite generator list. Zero generators are dropped on construction; the
/// empty list is the zero ideal. Reduced Gröbner bases of the unit ideal are
/// returned as [1].
class Ideal {
 public:
  explicit Ideal(RingPtr ring, std::vector<Poly> gens = {});

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring)); }
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }

  /// True when some generator is a nonzero constant (no Gröbner computation).
  bool has_unit_generator() const;
  int max_degree() const;

  Ideal in_ring(const RingPtr& target) const;

  /// Serialized generators in canonical form, sorted as strings.
  std::vector<std::string> serialize(const MonomialOrder& ord = MonomialOrder::grevlex()) const;

 private:
  RingPtr ring_;
  std::vector<Poly> gens_;
};

Ideal operator+(const Ideal& a, const Ideal& b);
Ideal ideal_sum(const Ideal& a, const std::vector<Poly>& extra);
/// Generated by pairwise products; V(a*b) = V(a) ∪ V(b).
Ideal ideal_product(const Ideal& a, const Ideal& b);

}  // namespace leafcut
