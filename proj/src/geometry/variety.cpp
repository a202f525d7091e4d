#include "leafcut/geometry/variety.hpp"

#include "leafcut/algebra/ideal_ops.hpp"
#include "leafcut/errors.hpp"

namespace leafcut {

AffineChart::AffineChart(std::size_t dim, Ideal i) : ambient_dim(dim), ideal(std::move(i)) {
  if (ideal.ring()->size() != ambient_dim)
    throw SchemaError("AffineChart: ring has " + std::to_string(ideal.ring()->size()) +
                      " variables, ambient_dim is " + std::to_string(ambient_dim));
}

ChartedVariety::ChartedVariety(std::vector<AffineChart> charts,
                               std::map<std::pair<std::size_t, std::size_t>, Ideal> diagonals)
    : charts_(std::move(charts)), diagonals_(std::move(diagonals)) {
  if (charts_.empty()) throw SchemaError("ChartedVariety: no charts");
  for (const auto& [key, ideal] : diagonals_) {
    if (key.first >= charts_.size() || key.second >= charts_.size())
      throw SchemaError("ChartedVariety: diagonal index out of range");
    if (!same_ring(ideal.ring(), product_ring(key.first, key.second)))
      throw SchemaError("ChartedVariety: diagonal ideal for (" + std::to_string(key.first) + "," +
                        std::to_string(key.second) + ") is not over the product ring");
  }
}

RingPtr ChartedVariety::product_ring(std::size_t i, std::size_t j) const {
  std::vector<std::string> vars;
  for (const auto& v : charts_.at(i).ideal.ring()->vars()) vars.push_back(v + "_1");
  for (const auto& v : charts_.at(j).ideal.ring()->vars()) vars.push_back(v + "_2");
  return make_ring(vars);
}

namespace {

Ideal rename(const Ideal& ideal, const RingPtr& target) {
  std::vector<Poly> gens;
  for (const auto& g : ideal.gens()) gens.push_back(Poly::from_terms(target, g.terms()));
  return Ideal(target, std::move(gens));
}

// Re-expresses an ideal over product_ring(j, i), whose first block has nj
// variables, over product_ring(i, j).
Ideal swap_factors(const Ideal& ideal, std::size_t nj, const RingPtr& target) {
  std::size_t n = ideal.ring()->size();
  std::size_t ni = n - nj;
  std::vector<Poly> gens;
  for (const auto& g : ideal.gens()) {
    std::vector<Term> ts;
    for (const auto& t : g.terms()) {
      std::vector<int> e(n, 0);
      for (std::size_t k = 0; k < nj; ++k) e[ni + k] = t.mono[k];
      for (std::size_t k = nj; k < n; ++k) e[k - nj] = t.mono[k];
      ts.push_back({Monomial(std::move(e)), t.coef});
    }
    gens.push_back(Poly::from_terms(target, std::move(ts)));
  }
  return Ideal(target, std::move(gens));
}

}  // namespace

std::vector<std::string> ChartedVariety::validate() const {
  std::vector<std::string> issues;
  auto tag = [](std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  for (const auto& [key, ideal] : diagonals_) {
    auto [i, j] = key;
    if (i < j) {
      auto other = diagonals_.find({j, i});
      if (other != diagonals_.end()) {
        Ideal swapped = swap_factors(other->second, charts_[j].ambient_dim, product_ring(i, j));
        if (!varieties_equal(ideal, swapped))
          issues.push_back("diagonal " + tag(i, j) + " is not the swap of " + tag(j, i));
      }
    }
    if (i == j) {
      // Ideal of the diagonal of V(I_i): I_i(x_1) + (x_1 - x_2).
      RingPtr pr = product_ring(i, i);
      std::size_t n = charts_[i].ambient_dim;
      std::vector<std::string> first(pr->vars().begin(), pr->vars().begin() + static_cast<std::ptrdiff_t>(n));
      Ideal delta = rename(charts_[i].ideal, make_ring(first)).in_ring(pr);
      std::vector<Poly> lin;
      for (std::size_t k = 0; k < n; ++k) lin.push_back(Poly::variable(pr, k) - Poly::variable(pr, n + k));
      delta = ideal_sum(delta, lin);
      if (!variety_contained(delta, ideal))
        issues.push_back("diagonal " + tag(i, i) + " does not contain the diagonal of chart " +
                         std::to_string(i));
    }
  }
  return issues;
}

}  // namespace leafcut
