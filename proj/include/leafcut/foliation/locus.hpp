#pragma once

#include <gmpxx.h>

#include "leafcut/foliation/family.hpp"
#include "leafcut/geometry/projection.hpp"

namespace leafcut {

struct LocusOptions {
  std::size_t depth_limit = kDefaultDepthLimit;
  std::size_t minor_limit = 100000;
  /// Report Zariski closures only (no exact constructible images).
  bool fast_closure = false;
};

/// 𝒵(f, e) and 𝒴(f, e) in the family ring (torsor coordinates, parameters).
/// Z_locus is a reduced grevlex basis of the closure; Y_locus is the exact
/// constructible set unless closure_only.
struct LocusResult {
  Ideal Z_locus;
  ConstructibleSet Y_locus;
  int e = 0;
  mpz_class degree_certificate;
  /// Descent stages taken (0 when 𝒵 itself qualifies).
  int stages = 0;
  bool closure_only = false;
};

/// Points of 𝒵 (off the singular locus) where T_x ℒ ∩ T_x 𝒵_y has dimension
/// ≥ e: 𝒵 plus the (m − e + 1)-minors of the matrix X_i(g), g running over
/// the generators of 𝒵, saturated by the leaf singular locus. e ≤ 0 gives 𝒵.
Ideal tangency_locus(const TorsorSpace& t, const LeafDistribution& l, const FamilyOfSubvarieties& f, int e,
                     const LocusOptions& opts = {});

/// {(x, y) : dim_x(ℒ_x ∩ 𝒵_y) ≥ e} by descent through tangency loci.
/// Throws GuardExceeded past opts.depth_limit stages and InvariantViolation
/// if a stage fails to shrink the locus.
LocusResult leaf_locus(const TorsorSpace& t, const LeafDistribution& l, const FamilyOfSubvarieties& f, int e,
                       const LocusOptions& opts = {});

/// 𝒴(f, e, h): leaf_locus of f ∩ h (fibres 𝒵_y ∩ π⁻¹(h_z)), projected back to
/// the coordinates of f. `h` lives over the base coordinates.
LocusResult family_leaf_locus(const TorsorSpace& t, const LeafDistribution& l, const FamilyOfSubvarieties& f,
                              int e, const FamilyOfSubvarieties& h, const LocusOptions& opts = {});

/// deg_V · κ^(r · steps), exact.
mpz_class degree_budget(long deg_V, long kappa, long r, long steps);

/// Best-effort radical: generators replaced by square-free parts until stable;
/// exact (Seidenberg) for zero-dimensional ideals. Returns a reduced grevlex basis.
Ideal radical_approx(const Ideal& ideal);

}  // namespace leafcut
