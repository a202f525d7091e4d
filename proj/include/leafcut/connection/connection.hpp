#pragma once

#include <optional>
#include <vector>

#include "json.hpp"
#include "leafcut/algebra/matrix.hpp"
#include "leafcut/algebra/rational_function.hpp"
#include "leafcut/geometry/variety.hpp"

namespace leafcut {

using RFMatrix = Matrix<RationalFunction>;

RFMatrix rf_zero(const RingPtr& ring, std::size_t n);
RFMatrix rf_identity(const RingPtr& ring, std::size_t n);
RFMatrix kronecker(const RFMatrix& a, const RFMatrix& b);
RFMatrix rf_scale(const RationalFunction& c, const RFMatrix& m);

/// ∇ = d − Σ A_i ds_i on the trivial bundle of rank r over a chart; flat
/// sections satisfy ∂_i σ = A_i σ.
class ConnectionData {
 public:
  ConnectionData(AffineChart base, std::size_t rank, std::vector<RFMatrix> matrices);

  const AffineChart& base() const { return base_; }
  const RingPtr& ring() const { return base_.ideal.ring(); }
  std::size_t rank() const { return rank_; }
  std::size_t directions() const { return matrices_.size(); }
  const std::vector<RFMatrix>& matrices() const { return matrices_; }
  const RFMatrix& matrix(std::size_t i) const { return matrices_.at(i); }
  /// Monic lcm of all entry denominators.
  const Poly& singular_denominator() const { return singular_; }

  /// Gröbner basis of base.ideal : D^∞, the ideal of the chart off the
  /// singular locus.
  const Ideal& regular_ideal() const { return regular_; }
  /// True when the rational function vanishes on V(base) \ V(D).
  bool vanishes(const RationalFunction& f) const;

 private:
  AffineChart base_;
  std::size_t rank_;
  std::vector<RFMatrix> matrices_;
  Poly singular_;
  Ideal regular_;
};

struct CurvatureEntry {
  std::size_t i, j, row, col;
  RationalFunction value;
};

struct Curvature {
  /// F_ij for i < j, in lexicographic (i, j) order.
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, RFMatrix>> components;
  std::vector<CurvatureEntry> nonzero;
  bool is_flat = true;
};

/// F_ij = ∂_i A_j − ∂_j A_i − [A_i, A_j]: the obstruction to integrating
/// ∂σ = Aσ, zero exactly when ∇ is flat.
Curvature curvature(const ConnectionData& c);

/// Connection on H^{⊗a} ⊗ (H*)^{⊗b} by the Leibniz rule; dual factors act by
/// −Aᵀ. Coordinates are row-major in the tensor factors.
ConnectionData tensor_connection(const ConnectionData& c, std::size_t a, std::size_t b);

/// ∂_i σ = A_i σ on the regular part of the base, for every i.
bool flat_section_check(const ConnectionData& c, const std::vector<RationalFunction>& sigma);

/// σ ⊗ τ in row-major coordinates.
std::vector<RationalFunction> tensor_product(const std::vector<RationalFunction>& a,
                                             const std::vector<RationalFunction>& b);

/// ["num", "den"]; a bare polynomial string is also accepted on input.
nlohmann::json entry_to_json(const RationalFunction& e);
RationalFunction entry_from_json(const nlohmann::json& e, const RingPtr& ring);

nlohmann::json to_json(const ConnectionData& c);
/// {"rank": r, "base": {"vars": [...], "ideal": [...]}, "matrices": [A_1, ...]}
/// where each A_i is a row-major list of r*r entries, each either ["num",
/// "den"] or a polynomial string.
ConnectionData connection_from_json(const nlohmann::json& j);

}  // namespace leafcut
