#pragma once

#include <string>
#include <vector>

#include "leafcut/connection/torsor.hpp"
#include "leafcut/geometry/constructible.hpp"

namespace leafcut {

/// Family of closed subvarieties 𝒵_y of a space with coordinates `space_vars`
/// (torsor coordinates, or base coordinates for families of base
/// subvarieties), parameterized by the chart's variables y.
struct FamilyOfSubvarieties {
  Ideal total_ideal;
  AffineChart parameter_chart;
  int fiber_degree_bound = 0;

  std::vector<std::string> params() const { return parameter_chart.ideal.ring()->vars(); }
};

/// Ring (space_vars..., params...). Throws RingMismatch when a parameter name
/// collides with a space variable or total_ideal uses a foreign variable.
RingPtr family_ring(const std::vector<std::string>& space_vars, const FamilyOfSubvarieties& f);

/// total_ideal + chart ideal (+ `extra`), in family_ring.
Ideal family_ideal(const std::vector<std::string>& space_vars, const FamilyOfSubvarieties& f,
                   const Ideal* extra = nullptr);

/// The single fibre V(ideal) with no parameters.
FamilyOfSubvarieties single_fibre(const Ideal& ideal);

/// The points of V(base) as a family with parameters `params` (one per base
/// coordinate): 𝒵_c = {s = c}.
FamilyOfSubvarieties point_family(const Ideal& base, const std::vector<std::string>& params);

/// Cylinder over `a` in a ring containing its variables.
ConstructibleSet lift(const ConstructibleSet& a, const RingPtr& target);

/// Polynomial with variables renamed by position: variable k of p's ring
/// becomes `names[k]`, then the result is moved into `target`.
Poly rename_vars(const Poly& p, const std::vector<std::string>& names, const RingPtr& target);
Ideal rename_vars(const Ideal& i, const std::vector<std::string>& names, const RingPtr& target);
ConstructibleSet rename_vars(const ConstructibleSet& a, const std::vector<std::string>& names,
                             const RingPtr& target);

}  // namespace leafcut
