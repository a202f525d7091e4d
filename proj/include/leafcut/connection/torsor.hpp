#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leafcut/connection/connection.hpp"

namespace leafcut {

/// A tensor of type (a, b) given as a section τ(s) of H^{⊗a} ⊗ (H*)^{⊗b}
/// (row-major, length rank^(a+b)) that is meant to be flat.
struct InvariantTensor {
  std::size_t a = 0, b = 0;
  std::vector<RationalFunction> value;
};

/// Frames β : H_s → H_{s0} preserving the declared tensors. Coordinates are
/// (s, β entries "b<i><j>", dinv) with dinv · det β = 1.
struct TorsorSpace {
  AffineChart base_chart;
  RingPtr ring;
  std::vector<std::string> frame_vars;  // row-major rank x rank
  std::string dinv;
  std::vector<Rational> base_point;
  Ideal constraint_ideal;
  int group_dimension = 0;

  std::size_t rank() const;
  /// β as a matrix of ring variables.
  RFMatrix frame_matrix() const;
  std::vector<std::string> base_vars() const { return base_chart.ideal.ring()->vars(); }
};

/// Vector fields on the torsor total space, one per base direction. Field i is
/// (e_i, −β·A_i, dinv·tr A_i): parallel transport of frames.
struct LeafDistribution {
  RingPtr ring;
  std::vector<std::vector<RationalFunction>> fields;
  /// Lcm of field denominators; fields are regular off V(singular).
  Poly singular;

  RationalFunction apply(std::size_t i, const RationalFunction& f) const;
};

struct Torsor {
  TorsorSpace space;
  LeafDistribution leaves;
};

/// Builds the frame torsor of `c` at `base_point`. When `check_flat` is set
/// every tensor must pass flat_section_check (InvariantViolation otherwise).
/// group_dimension defaults to the dimension of the fibre over base_point.
Torsor frame_torsor(const ConnectionData& c, const std::vector<InvariantTensor>& tensors,
                    const std::vector<Rational>& base_point, std::optional<int> group_dimension = std::nullopt,
                    bool check_flat = true);

std::vector<RationalFunction> lie_bracket(const LeafDistribution& d, std::size_t i, std::size_t j);

/// Every X_i(g), g a generator of `ideal`, vanishes on V(ideal) \ V(singular).
bool fields_tangent(const LeafDistribution& d, const Ideal& ideal);

/// [X_i, X_j] lies in span(X_1..X_m) on V(ideal) \ V(singular), by the
/// (m+1)-minors of the stacked field matrix.
bool is_involutive(const LeafDistribution& d, const Ideal& ideal);

}  // namespace leafcut
