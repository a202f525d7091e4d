#include "leafcut/foliation/zilber_pink.hpp"

#include <algorithm>
#include <set>

#include "leafcut/algebra/ideal_ops.hpp"
#include "leafcut/errors.hpp"
#include "leafcut/parallel.hpp"

namespace leafcut {

AtypicalityReport atypicality_check(int dim_U, int dim_V, int dim_P, int dim_L, int dim_H) {
  for (int d : {dim_U, dim_V, dim_P, dim_L, dim_H})
    if (d < 0) throw SchemaError("atypicality_check: dimensions must be nonnegative");
  for (int d : {dim_U, dim_V, dim_L, dim_H})
    if (d > dim_P) throw SchemaError("atypicality_check: dimensions must not exceed dim_P");
  AtypicalityReport r{dim_U, dim_V, dim_P, dim_L, dim_H, false, false};
  r.atypical = (dim_P - dim_U) < (dim_P - dim_V) + (dim_P - dim_L);
  r.atypical_dim_form = dim_V < dim_U + dim_H;
  if (r.atypical != r.atypical_dim_form)
    throw SchemaError("atypicality_check: codimension and dimension forms disagree (dim_H = " +
                      std::to_string(dim_H) + ", dim_P - dim_L = " + std::to_string(dim_P - dim_L) + ")");
  return r;
}

AtypicalRange atypical_range(int e, const ZPConfig& cfg) {
  if (cfg.dim_flag < 0 || cfg.dim_S < 0) throw SchemaError("atypical_range: negative dimension");
  if (e < 0 || e > cfg.dim_S) throw SchemaError("atypical_range: e must lie in [0, dim_S]");
  return {e + cfg.dim_flag - cfg.dim_S};
}

namespace {

struct ParamElement {
  Poly g;
  Monomial head;  // space-variable part of the leading monomial
  Poly lc;        // its coefficient, a polynomial in the parameters
};

struct ParamBasis {
  std::vector<Poly> elim;
  std::vector<ParamElement> elements;
};

// Block basis with the space variables first; validates that no leading
// coefficient vanishes where the fibre is nonempty.
ParamBasis parametric_basis(const Ideal& total, std::size_t nx) {
  const MonomialOrder ord = MonomialOrder::block(nx);
  Ideal g = groebner_basis(total, ord);
  ParamBasis out;
  for (const auto& p : g.gens()) {
    const auto& lm = p.leading_term(ord).mono.exponents();
    std::vector<int> head(lm.size(), 0);
    std::copy(lm.begin(), lm.begin() + static_cast<std::ptrdiff_t>(nx), head.begin());
    Monomial hm(head);
    if (hm.is_one()) {
      out.elim.push_back(p);
      continue;
    }
    std::vector<Term> lc;
    for (const auto& t : p.terms()) {
      if (!std::equal(head.begin(), head.begin() + static_cast<std::ptrdiff_t>(nx), t.mono.exponents().begin()))
        continue;
      std::vector<int> e = t.mono.exponents();
      std::fill(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(nx), 0);
      lc.push_back({Monomial(std::move(e)), t.coef});
    }
    Poly c = Poly::from_terms(total.ring(), std::move(lc));
    if (!c.is_constant() && !is_unit_ideal(ideal_sum(total, {c})))
      throw SchemaError("family leading coefficient " + c.to_string() +
                        " vanishes on nonempty fibres; fibre inclusion needs parameter-independent leading terms");
    out.elements.push_back({p, std::move(hm), std::move(c)});
  }
  return out;
}

// lc-multiplied remainder of p modulo the elements; no space monomial of the
// result is divisible by a head.
Poly pseudo_reduce(Poly p, const std::vector<ParamElement>& elems, const std::vector<bool>& xmask) {
  const MonomialOrder grevlex = MonomialOrder::grevlex();
  for (;;) {
    auto parts = p.split_by(xmask);
    const Monomial* best = nullptr;
    const ParamElement* by = nullptr;
    for (const auto& [key, coef] : parts) {
      if (best && grevlex.compare(key, *best) <= 0) continue;
      for (const auto& el : elems)
        if (el.head.divides(key)) {
          best = &key;
          by = &el;
          break;
        }
    }
    if (!best) return p;
    const Poly& coef = parts.at(*best);
    p = p * by->lc - coef * by->g.mul_term(by->head.quotient_of(*best), 1);
  }
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Monomial widen(const Monomial& head, std::size_t nx, std::size_t n) {
  std::vector<int> e(n, 0);
  for (std::size_t i = 0; i < nx; ++i) e[i] = head[i];
  return Monomial(std::move(e));
}

}  // namespace

Ideal fibre_inclusion(const std::vector<std::string>& space_vars, const FamilyOfSubvarieties& a,
                      const std::vector<std::string>& a_names, const FamilyOfSubvarieties& b,
                      const std::vector<std::string>& b_names, const RingPtr& pair_ring, const Ideal* extra) {
  const std::size_t nx = space_vars.size();
  RingPtr w = make_ring(concat(concat(space_vars, a_names), b_names));
  std::vector<bool> xmask(w->size(), false);
  std::fill(xmask.begin(), xmask.begin() + static_cast<std::ptrdiff_t>(nx), true);

  ParamBasis pa = parametric_basis(family_ideal(space_vars, a, extra), nx);
  ParamBasis pb = parametric_basis(family_ideal(space_vars, b, extra), nx);
  const auto a_all = concat(space_vars, a_names), b_all = concat(space_vars, b_names);
  auto move_a = [&](const Poly& p) { return rename_vars(p, a_all, w); };
  auto move_b = [&](const Poly& p) { return rename_vars(p, b_all, w); };

  std::vector<ParamElement> elems;
  for (const auto& el : pa.elements)
    elems.push_back({move_a(el.g), widen(el.head, nx, w->size()), move_a(el.lc)});
  std::vector<Poly> cond;
  for (const auto& p : pa.elim) cond.push_back(move_a(p));
  for (const auto& p : pb.elim) cond.push_back(move_b(p));
  for (const auto& el : pb.elements) {
    Poly r = pseudo_reduce(move_b(el.g), elems, xmask);
    for (auto& [key, coef] : r.split_by(xmask)) cond.push_back(coef);
  }
  std::vector<Poly> out;
  for (const auto& c : cond) out.push_back(c.in_ring(pair_ring));
  return groebner_basis(Ideal(pair_ring, std::move(out)));
}

namespace {

// Points of the family ring whose fibre has frame-coordinate image of
// dimension < bound (closure of the image, fibrewise).
ConstructibleSet image_dim_below(const TorsorSpace& t, const FamilyOfSubvarieties& f, int bound,
                                 const LocusOptions& opts) {
  RingPtr ring = family_ring(t.ring->vars(), f);
  if (bound <= 0) return ConstructibleSet::empty(ring);
  Ideal z = family_ideal(t.ring->vars(), f, &t.constraint_ideal);
  std::vector<std::string> frame = t.frame_vars;
  frame.push_back(t.dinv);
  auto params = f.params();
  Ideal w = eliminate(z, concat(frame, params));
  if (params.empty()) {
    auto d = ideal_dimension(w);
    return d && *d < bound ? ConstructibleSet::whole(ring) : ConstructibleSet::empty(ring);
  }
  RingPtr pring = subring(w.ring(), params);
  auto cells = projection_cells(w, params, opts.depth_limit);
  auto at_least = [&](int k) {
    std::vector<Piece> ps;
    for (const auto& c : cells)
      if (c.fibre_dim >= k) ps.emplace_back(c.closed, Ideal(pring, {c.avoid}));
    return ConstructibleSet(pring, std::move(ps));
  };
  return lift(cs_difference(at_least(0), at_least(bound)).pruned(), ring);
}

std::vector<std::string> primed_names(const std::vector<std::string>& names, std::vector<std::string> taken) {
  std::vector<std::string> out;
  for (const auto& n : names) {
    std::string p = fresh_name(make_ring(taken), n + "_p");
    taken.push_back(p);
    out.push_back(p);
  }
  return out;
}

ConstructibleSet project_to(const ConstructibleSet& a, const std::vector<std::string>& keep, const RingPtr& target,
                            const LocusOptions& opts) {
  if (a.is_empty()) return ConstructibleSet::empty(target);
  if (opts.fast_closure) {
    std::vector<Piece> ps;
    for (const auto& p : a.pieces())
      if (!p.is_empty()) ps.emplace_back(eliminate(p.closed, keep).in_ring(target), Ideal::unit(target));
    return ConstructibleSet(target, std::move(ps)).pruned();
  }
  return lift(cs_project(a, keep, opts.depth_limit), target);
}

}  // namespace

ZPResult zp_candidate_loci(const TorsorSpace& t, const LeafDistribution& l, const ZPConfig& cfg, int e,
                           const LocusOptions& opts) {
  if (cfg.members.empty()) throw SchemaError("zp_candidate_loci: the family has no members");
  ZPResult res;
  res.e = e;
  res.rho = atypical_range(e, cfg).rho;
  res.closure_only = opts.fast_closure;
  const int m = static_cast<int>(l.fields.size());
  const int top = std::max(e, m);
  const std::size_t n = cfg.members.size();
  const auto xvars = t.ring->vars();
  const auto base = t.base_vars();
  RingPtr base_ring = make_ring(base);

  std::vector<RingPtr> rings;
  for (const auto& f : cfg.members) rings.push_back(family_ring(xvars, f));

  // Y_i(e') for e' in [e, top], restricted to dim r(𝒵_y) < ρ(e').
  const std::size_t levels = static_cast<std::size_t>(top - e + 1);
  auto ys = parallel_map(n * levels, [&](std::size_t k) {
    std::size_t i = k / levels;
    int lev = e + static_cast<int>(k % levels);
    auto loc = leaf_locus(t, l, cfg.members[i], lev, opts);
    int rho = lev + cfg.dim_flag - cfg.dim_S;
    return cs_intersect(loc.Y_locus, image_dim_below(t, cfg.members[i], rho, opts)).pruned();
  });
  auto Y = [&](std::size_t i, int lev) -> const ConstructibleSet& {
    return ys[i * levels + static_cast<std::size_t>(lev - e)];
  };

  res.members = parallel_map(n, [&](std::size_t i) {
    const auto& fi = cfg.members[i];
    const auto pi = fi.params();
    const auto keep = concat(xvars, pi);
    MemberLoci ml{rings[i], Y(i, e), ConstructibleSet::empty(rings[i]), ConstructibleSet::empty(rings[i])};
    if (ml.Y.is_empty()) return ml;
    ConstructibleSet second = ConstructibleSet::empty(rings[i]);
    for (std::size_t j = 0; j < n; ++j) {
      const auto& fj = cfg.members[j];
      if (pi.empty() && fj.params().empty()) continue;  // single fibres: no strict inclusions
      auto pj = primed_names(fj.params(), keep);
      RingPtr pair = make_ring(concat(pi, pj));
      RingPtr big = make_ring(concat(keep, pj));
      const auto j_names = concat(xvars, pj);
      Ideal fwd = fibre_inclusion(xvars, fi, pi, fj, pj, pair, &t.constraint_ideal);
      Ideal bwd = fibre_inclusion(xvars, fj, pj, fi, pi, pair, &t.constraint_ideal);
      ConstructibleSet yi = lift(ml.Y, big);

      ConstructibleSet higher = ConstructibleSet::empty(big);
      for (int lev = e + 1; lev <= top; ++lev) higher = cs_union(higher, rename_vars(Y(j, lev), j_names, big));
      if (!higher.is_empty()) {
        auto up = lift(ConstructibleSet::locally_closed(fwd, bwd), big);
        ml.Kprime = cs_union(ml.Kprime, project_to(cs_intersect(cs_intersect(yi, higher), up), keep, rings[i], opts));
      }
      auto same = rename_vars(Y(j, e), j_names, big);
      if (!same.is_empty()) {
        auto down = lift(ConstructibleSet::locally_closed(bwd, fwd), big);
        second = cs_union(second, project_to(cs_intersect(cs_intersect(yi, same), down), keep, rings[i], opts));
      }
    }
    ml.Kprime = ml.Kprime.pruned();
    ml.K = cs_union(ml.Kprime, second).pruned();
    return ml;
  });

  std::set<std::size_t> cover;
  bool covered = !cfg.h.empty();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ml = res.members[i];
    ConstructibleSet rest = cs_difference(ml.Y, ml.K).pruned();
    for (const auto& piece : rest.pieces()) {
      ConstructibleSet img = project_to(ConstructibleSet(ml.ring, {piece}), base, base_ring, opts);
      if (img.is_empty()) continue;
      bool dup = std::any_of(res.candidates.begin(), res.candidates.end(),
                             [&](const ConstructibleSet& c) { return cs_equal(c, img); });
      if (!dup) res.candidates.push_back(std::move(img));
    }
    if (!covered || rest.is_empty()) continue;
    int rho = e + cfg.dim_flag - cfg.dim_S;
    ConstructibleSet allowed = image_dim_below(t, cfg.members[i], rho, opts);
    std::vector<ConstructibleSet> loci;
    for (const auto& h : cfg.h)
      loci.push_back(cs_intersect(family_leaf_locus(t, l, cfg.members[i], e, h, opts).Y_locus, allowed));
    UnionCover uc = contained_in_union(rest, loci);
    if (!uc.contained) {
      covered = false;
      continue;
    }
    cover.insert(uc.indices.begin(), uc.indices.end());
  }
  if (covered) res.covering_families = std::vector<std::size_t>(cover.begin(), cover.end());
  return res;
}

nlohmann::json to_json(const LocusResult& r) {
  return {{"e", r.e},
          {"ring", r.Z_locus.ring()->vars()},
          {"Z_locus", r.Z_locus.serialize()},
          {"Y_locus", to_json(r.Y_locus)},
          {"degree_certificate", r.degree_certificate.get_str()},
          {"stages", r.stages},
          {"closure_only", r.closure_only}};
}

nlohmann::json to_json(const AtypicalityReport& r) {
  return {{"dim_U", r.dim_U}, {"dim_V", r.dim_V}, {"dim_P", r.dim_P},
          {"dim_L", r.dim_L}, {"dim_H", r.dim_H}, {"atypical", r.atypical},
          {"atypical_dim_form", r.atypical_dim_form}};
}

nlohmann::json to_json(const ZPResult& r) {
  nlohmann::json members = nlohmann::json::array();
  for (const auto& m : r.members)
    members.push_back({{"ring", m.ring->vars()}, {"Y", to_json(m.Y)}, {"Kprime", to_json(m.Kprime)}, {"K", to_json(m.K)}});
  nlohmann::json cands = nlohmann::json::array();
  for (const auto& c : r.candidates) cands.push_back(to_json(c));
  nlohmann::json out = {{"e", r.e},
                        {"rho", r.rho},
                        {"members", members},
                        {"candidates", cands},
                        {"closure_only", r.closure_only},
                        {"fiber_inclusion", "ideal-containment"}};
  out["covering_families"] = r.covering_families ? nlohmann::json(*r.covering_families) : nlohmann::json(nullptr);
  return out;
}

}  // namespace leafcut
