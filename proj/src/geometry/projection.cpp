#include "leafcut/geometry/projection.hpp"

#include <algorithm>
#include <set>

#include "leafcut/algebra/ideal_ops.hpp"
#include "leafcut/errors.hpp"

namespace leafcut {

namespace {

void require_keep(const RingPtr& ring, const std::vector<std::string>& keep) {
  for (const auto& v : keep)
    if (!ring->index_of(v)) throw RingMismatch("keep variable '" + v + "' not in ring");
}

}  // namespace

std::vector<FibreCell> projection_cells(const Ideal& ideal, const std::vector<std::string>& keep,
                                        std::size_t depth_limit) {
  require_keep(ideal.ring(), keep);
  RingPtr kept = subring(ideal.ring(), keep);
  std::set<std::string> wanted(keep.begin(), keep.end());
  std::vector<std::string> order;
  for (const auto& v : ideal.ring()->vars())
    if (!wanted.count(v)) order.push_back(v);
  const std::size_t ne = order.size();
  for (const auto& v : kept->vars()) order.push_back(v);
  RingPtr work = make_ring(order);
  const MonomialOrder ord = MonomialOrder::block(ne);

  std::vector<FibreCell> cells;
  std::vector<std::pair<Ideal, std::size_t>> todo{{ideal.in_ring(work), 0}};
  while (!todo.empty()) {
    auto [j, depth] = std::move(todo.back());
    todo.pop_back();
    if (depth > depth_limit) throw GuardExceeded("cs_project: boundary recursion depth exceeded");
    Ideal g = groebner_basis(j, ord);
    if (g.has_unit_generator()) continue;

    std::vector<Poly> elim, lcs;
    std::vector<Monomial> heads;
    for (const auto& p : g.gens()) {
      const Monomial& lm = p.leading_term(ord).mono;
      std::vector<int> xpart(lm.exponents().begin(), lm.exponents().begin() + static_cast<std::ptrdiff_t>(ne));
      Monomial head(xpart);
      if (head.is_one()) {
        elim.push_back(p.in_ring(kept));
        continue;
      }
      // Coefficient of the leading x-monomial, a polynomial in the kept block.
      std::vector<Term> lc;
      for (const auto& t : p.terms()) {
        if (!std::equal(xpart.begin(), xpart.end(), t.mono.exponents().begin())) continue;
        std::vector<int> e = t.mono.exponents();
        std::fill(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(ne), 0);
        lc.push_back({Monomial(std::move(e)), t.coef});
      }
      lcs.push_back(Poly::from_terms(work, std::move(lc)));
      heads.push_back(std::move(head));
    }
    Poly h = Poly::constant(work, 1);
    for (const auto& c : lcs) h *= c;
    int dim = monomial_ideal_dimension(heads, ne);
    Ideal e(kept, elim);
    cells.push_back({e, h.in_ring(kept), dim});
    if (h.is_constant()) continue;
    if (!normal_form(h, g, ord).is_zero()) {
      todo.emplace_back(ideal_sum(g, {h}), depth + 1);
      continue;
    }
    // h already vanishes on V(j): split along each leading coefficient. None of
    // them lies in j because the basis is reduced.
    std::set<std::string> seen;
    for (const auto& c : lcs) {
      if (c.is_constant() || !seen.insert(c.monic().to_string()).second) continue;
      todo.emplace_back(ideal_sum(g, {c}), depth + 1);
    }
  }
  return cells;
}

ConstructibleSet cs_project(const ConstructibleSet& a, const std::vector<std::string>& keep,
                            std::size_t depth_limit) {
  require_keep(a.ring(), keep);
  RingPtr kept = subring(a.ring(), keep);
  std::vector<Piece> out;
  auto add_cells = [&](const Ideal& closed) {
    for (auto& c : projection_cells(closed, keep, depth_limit))
      out.emplace_back(c.closed, Ideal(kept, {c.avoid}));
  };
  for (const auto& p : a.pieces()) {
    if (p.open_complement.has_unit_generator()) {
      add_cells(p.closed);
      continue;
    }
    // V(C) \ V(O) = ∪_g V(C) \ V(g), and V(C) \ V(g) ≅ V(C, 1 - t g).
    std::string t = fresh_name(a.ring(), "_t");
    std::vector<std::string> vars = a.ring()->vars();
    vars.insert(vars.begin(), t);
    RingPtr big = make_ring(vars);
    Ideal c = p.closed.in_ring(big);
    Poly tp = Poly::variable(big, 0);
    for (const auto& g : p.open_complement.gens())
      add_cells(ideal_sum(c, {Poly::constant(big, 1) - tp * g.in_ring(big)}));
  }
  return ConstructibleSet(kept, std::move(out)).pruned();
}

ConstructibleSet fibre_dim_stratify(const Ideal& z, const std::vector<std::string>& base, int d,
                                    std::size_t depth_limit) {
  require_keep(z.ring(), base);
  RingPtr kept = subring(z.ring(), base);
  auto cells = projection_cells(z, base, depth_limit);
  auto at_least = [&](int k) {
    std::vector<Piece> ps;
    for (const auto& c : cells)
      if (c.fibre_dim >= k) ps.emplace_back(c.closed, Ideal(kept, {c.avoid}));
    return ConstructibleSet(kept, std::move(ps));
  };
  if (d < -1) return ConstructibleSet::empty(kept);
  if (d == -1) return cs_complement(at_least(0)).pruned();
  return cs_difference(at_least(d), at_least(d + 1)).pruned();
}

}  // namespace leafcut
