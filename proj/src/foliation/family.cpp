#include "leafcut/foliation/family.hpp"

#include <set>

namespace leafcut {

RingPtr family_ring(const std::vector<std::string>& space_vars, const FamilyOfSubvarieties& f) {
  std::vector<std::string> vars = space_vars;
  std::set<std::string> seen(vars.begin(), vars.end());
  for (const auto& p : f.params()) {
    if (!seen.insert(p).second) throw RingMismatch("family parameter '" + p + "' collides with a coordinate");
    vars.push_back(p);
  }
  return make_ring(vars);
}

Ideal family_ideal(const std::vector<std::string>& space_vars, const FamilyOfSubvarieties& f, const Ideal* extra) {
  RingPtr ring = family_ring(space_vars, f);
  Ideal out = f.total_ideal.in_ring(ring) + f.parameter_chart.ideal.in_ring(ring);
  if (extra) out = out + extra->in_ring(ring);
  return out;
}

FamilyOfSubvarieties single_fibre(const Ideal& ideal) {
  return {ideal, AffineChart(0, Ideal(make_ring({}))), ideal.max_degree()};
}

FamilyOfSubvarieties point_family(const Ideal& base, const std::vector<std::string>& params) {
  const auto& svars = base.ring()->vars();
  if (params.size() != svars.size()) throw std::invalid_argument("point_family: one parameter per coordinate");
  std::vector<std::string> vars = svars;
  vars.insert(vars.end(), params.begin(), params.end());
  RingPtr ring = make_ring(vars);
  RingPtr pring = make_ring(params);
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < svars.size(); ++i)
    gens.push_back(Poly::variable(ring, i) - Poly::variable(ring, svars.size() + i));
  Ideal total = ideal_sum(base.in_ring(ring), gens);
  return {total, AffineChart(params.size(), rename_vars(base, params, pring)), 1};
}

ConstructibleSet lift(const ConstructibleSet& a, const RingPtr& target) {
  std::vector<Piece> pieces;
  for (const auto& p : a.pieces()) pieces.emplace_back(p.closed.in_ring(target), p.open_complement.in_ring(target));
  return ConstructibleSet(target, std::move(pieces));
}

Poly rename_vars(const Poly& p, const std::vector<std::string>& names, const RingPtr& target) {
  if (names.size() != p.nvars()) throw std::invalid_argument("rename_vars: arity mismatch");
  return Poly::from_terms(make_ring(names), p.terms()).in_ring(target);
}

Ideal rename_vars(const Ideal& i, const std::vector<std::string>& names, const RingPtr& target) {
  std::vector<Poly> gens;
  for (const auto& g : i.gens()) gens.push_back(rename_vars(g, names, target));
  return Ideal(target, std::move(gens));
}

ConstructibleSet rename_vars(const ConstructibleSet& a, const std::vector<std::string>& names,
                             const RingPtr& target) {
  std::vector<Piece> pieces;
  for (const auto& p : a.pieces())
    pieces.emplace_back(rename_vars(p.closed, names, target), rename_vars(p.open_complement, names, target));
  return ConstructibleSet(target, std::move(pieces));
}

}  // namespace leafcut
