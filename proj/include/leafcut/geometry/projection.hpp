#pragma once

#include <string>
#include <vector>

#include "leafcut/geometry/constructible.hpp"

namespace leafcut {

inline constexpr std::size_t kDefaultDepthLimit = 64;

/// V(closed) \ V(avoid) in the kept coordinates, over which every fibre of
/// the projected variety is nonempty of dimension exactly fibre_dim.
struct FibreCell {
  Ideal closed;
  Poly avoid;
  int fibre_dim;
};

/// Chevalley cells of the projection of V(ideal) onto `keep`. The union of the
/// cells is the exact image. Built from a block-order basis (eliminated block
/// first): the cell is V(E) \ V(∏ lc) where E is the elimination ideal and lc
/// runs over the leading coefficients in the kept variables; the boundary
/// V(∏ lc) is handled by recursion on a strictly larger ideal.
/// Throws GuardExceeded beyond `depth_limit` nested boundaries.
std::vector<FibreCell> projection_cells(const Ideal& ideal, const std::vector<std::string>& keep,
                                        std::size_t depth_limit = kDefaultDepthLimit);

/// Exact image of the coordinate projection onto `keep`.
ConstructibleSet cs_project(const ConstructibleSet& a, const std::vector<std::string>& keep,
                            std::size_t depth_limit = kDefaultDepthLimit);

/// Base points whose fibre in V(z) has dimension exactly d; d = -1 is the
/// complement of the image.
ConstructibleSet fibre_dim_stratify(const Ideal& z, const std::vector<std::string>& base, int d,
                                    std::size_t depth_limit = kDefaultDepthLimit);

}  // namespace leafcut
