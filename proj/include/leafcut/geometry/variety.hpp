#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "leafcut/algebra/ideal.hpp"

namespace leafcut {

struct AffineChart {
  std::size_t ambient_dim = 0;
  Ideal ideal;

  /// Throws SchemaError unless the ideal's ring has ambient_dim variables.
  AffineChart(std::size_t ambient_dim, Ideal ideal);
};

/// Charts glued along diagonal ideals. The ideal for the pair (i, j) lives in
/// the product ring whose variables are chart i's names suffixed "_1" followed
/// by chart j's names suffixed "_2".
class ChartedVariety {
 public:
  explicit ChartedVariety(std::vector<AffineChart> charts,
                          std::map<std::pair<std::size_t, std::size_t>, Ideal> diagonals = {});

  const std::vector<AffineChart>& charts() const { return charts_; }
  const std::map<std::pair<std::size_t, std::size_t>, Ideal>& diagonals() const { return diagonals_; }

  RingPtr product_ring(std::size_t i, std::size_t j) const;

  /// Gluing consistency: (j, i) is (i, j) with the factors swapped, and the
  /// (i, i) ideal vanishes on the diagonal of V(ideal_i). Returns one message
  /// per violation; empty when consistent.
  std::vector<std::string> validate() const;

 private:
  std::vector<AffineChart> charts_;
  std::map<std::pair<std::size_t, std::size_t>, Ideal> diagonals_;
};

}  // namespace leafcut
