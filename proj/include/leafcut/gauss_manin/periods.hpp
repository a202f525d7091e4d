#pragma once

#include <vector>

#include "leafcut/gauss_manin/superelliptic.hpp"

namespace leafcut {

/// Periods of the eigenspace basis over the real segments between
/// consecutive finite branch points, at a real parameter point where all
/// finite points are real and distinct: ∫ g(u) ∏ |u − p_i|^{−⟨k a_i/N⟩} du by
/// Gauss–Jacobi quadrature. Returns one vector (indexed by form) per segment.
std::vector<std::vector<double>> segment_periods(const SuperellipticFamily& fam, const EigenspaceBasis& basis,
                                                 const std::vector<double>& params, int nodes = 64);

/// Largest relative residual |∂_i P − A_i P| / max(1, |P|) over segments,
/// directions, and `samples` random real parameter points (derivatives by a
/// five-point stencil).
double period_residual(const SuperellipticFamily& fam, const EigenspaceConnection& ec, int samples,
                       unsigned seed);

}  // namespace leafcut
