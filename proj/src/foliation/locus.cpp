#include "leafcut/foliation/locus.hpp"

#include <algorithm>

#include "leafcut/algebra/gcd.hpp"
#include "leafcut/algebra/ideal_ops.hpp"
#include "leafcut/algebra/rational_function.hpp"
#include "leafcut/errors.hpp"

namespace leafcut {

namespace {

Poly squarefree_part(const Poly& p) {
  if (p.is_constant()) return p;
  Poly g = p;
  for (std::size_t v = 0; v < p.nvars() && !g.is_constant(); ++v)
    if (p.degree_in(v) > 0) g = poly_gcd(g, p.derivative(v));
  if (g.is_constant()) return p;
  auto q = exact_divide(p, g);
  if (!q) throw InvariantViolation("squarefree_part: gcd does not divide");
  return q->monic();
}

// The family as seen by the descent: its ring, the leaf fields lifted into it
// with denominators cleared by `den`, and the torsor coordinate count.
struct Setting {
  RingPtr ring;
  std::size_t nx = 0;
  std::vector<std::vector<Poly>> fields;  // den · X_i, torsor components only
  Poly den;
};

Setting make_setting(const TorsorSpace& t, const LeafDistribution& l, const FamilyOfSubvarieties& f) {
  if (!same_ring(t.ring, l.ring)) throw RingMismatch("leaf distribution and torsor rings differ");
  RingPtr ring = family_ring(t.ring->vars(), f);
  Setting s{ring, t.ring->size(), {}, l.singular.in_ring(ring)};
  RationalFunction scale(s.den);
  for (const auto& field : l.fields) {
    std::vector<Poly> row;
    for (const auto& c : field) {
      RationalFunction v = c.in_ring(s.ring) * scale;
      if (!v.is_polynomial()) throw InvariantViolation("leaf field denominator not covered by the singular locus");
      row.push_back(v.num());
    }
    s.fields.push_back(std::move(row));
  }
  return s;
}

Poly apply_field(const Setting& s, std::size_t i, const Poly& g) {
  Poly out(s.ring);
  for (std::size_t k = 0; k < s.nx; ++k)
    if (!s.fields[i][k].is_zero() && g.degree_in(k) > 0) out += s.fields[i][k] * g.derivative(k);
  return out;
}

Ideal off_singular(const Ideal& i, const Poly& den) {
  if (den.is_constant()) return groebner_basis(i);
  return saturate(i, den);
}

struct Tangency {
  Ideal ideal;
  int entry_degree = 0;
};

Tangency tangency_on(const Setting& s, const Ideal& z, int e, const LocusOptions& opts) {
  const std::size_t m = s.fields.size();
  if (e <= 0) return {z, 0};
  if (static_cast<std::size_t>(e) > m || z.empty()) {
    // Nothing is tangent beyond the leaf dimension; the zero ideal has no
    // fibre equations and every leaf direction is tangent.
    if (static_cast<std::size_t>(e) > m) return {Ideal::unit(s.ring), 0};
    return {z, 0};
  }
  Matrix<Poly> jx(z.size(), m, Poly(s.ring));
  int deg = 0;
  for (std::size_t r = 0; r < z.size(); ++r)
    for (std::size_t i = 0; i < m; ++i) {
      jx(r, i) = apply_field(s, i, z.gens()[r]);
      deg = std::max(deg, jx(r, i).total_degree());
    }
  Ideal minors = rank_locus(jx, m - static_cast<std::size_t>(e), opts.minor_limit);
  return {off_singular(z + minors, s.den), deg};
}

}  // namespace

Ideal radical_approx(const Ideal& ideal) {
  Ideal g = groebner_basis(ideal);
  for (int round = 0; round < 16; ++round) {
    if (g.has_unit_generator() || g.empty()) return g;
    std::vector<Poly> gens;
    for (const auto& p : g.gens()) gens.push_back(squarefree_part(p));
    if (ideal_dimension(g) == std::optional<int>(0)) {
      for (const auto& v : g.ring()->vars()) {
        Ideal u = eliminate(g, {v});
        for (const auto& p : u.gens()) gens.push_back(squarefree_part(p).in_ring(g.ring()));
      }
    }
    Ideal next = groebner_basis(Ideal(g.ring(), std::move(gens)));
    if (ideals_equal(next, g)) return next;
    g = next;
  }
  return g;
}

mpz_class degree_budget(long deg_V, long kappa, long r, long steps) {
  if (deg_V < 0 || kappa < 0 || r < 0 || steps < 0) throw std::invalid_argument("degree_budget: negative input");
  mpz_class out = deg_V;
  mpz_class k = kappa;
  for (long s = 0; s < steps; ++s) {
    mpz_class factor;
    mpz_pow_ui(factor.get_mpz_t(), k.get_mpz_t(), static_cast<unsigned long>(r));
    out *= factor;
  }
  return out;
}

Ideal tangency_locus(const TorsorSpace& t, const LeafDistribution& l, const FamilyOfSubvarieties& f, int e,
                     const LocusOptions& opts) {
  Setting s = make_setting(t, l, f);
  Ideal z = family_ideal(t.ring->vars(), f, &t.constraint_ideal);
  if (e <= 0) return groebner_basis(z);
  z = radical_approx(off_singular(z, s.den));
  return radical_approx(tangency_on(s, z, e, opts).ideal);
}

LocusResult leaf_locus(const TorsorSpace& t, const LeafDistribution& l, const FamilyOfSubvarieties& f, int e,
                       const LocusOptions& opts) {
  Setting s = make_setting(t, l, f);
  Ideal z0 = groebner_basis(family_ideal(t.ring->vars(), f, &t.constraint_ideal));
  long deg_v = std::max({1, f.fiber_degree_bound, z0.max_degree()});
  long kappa = std::max(2, s.den.total_degree());
  const long nvars = static_cast<long>(s.ring->size());

  LocusResult out{z0, ConstructibleSet::closed(z0), e, 0, 0, opts.fast_closure};
  if (e <= 0) {
    out.degree_certificate = degree_budget(deg_v, kappa, nvars, 1);
    return out;
  }

  Ideal z = radical_approx(off_singular(z0, s.den));
  int stages = 0;
  while (!z.has_unit_generator()) {
    int k = 1;
    Tangency fail{z, 0};
    for (; k <= e; ++k) {
      Tangency tk = tangency_on(s, z, k, opts);
      kappa = std::max<long>(kappa, tk.entry_degree);
      if (!variety_contained(z, tk.ideal)) {
        fail = std::move(tk);
        break;
      }
    }
    if (k > e) break;
    if (static_cast<std::size_t>(stages) >= opts.depth_limit)
      throw GuardExceeded("leaf_locus: descent exceeded " + std::to_string(opts.depth_limit) + " stages");
    Ideal next = radical_approx(fail.ideal);
    if (variety_contained(z, next)) throw InvariantViolation("leaf_locus: descent stage did not shrink the locus");
    z = std::move(next);
    ++stages;
  }

  out.Z_locus = z;
  out.stages = stages;
  out.degree_certificate = degree_budget(deg_v, kappa, nvars, stages + 1);
  if (mpz_class(z.max_degree()) > out.degree_certificate)
    throw InvariantViolation("leaf_locus: generator degree exceeds the certificate");
  if (z.has_unit_generator()) {
    out.Y_locus = ConstructibleSet::empty(s.ring);
  } else if (opts.fast_closure || s.den.is_constant()) {
    out.Y_locus = ConstructibleSet::closed(z);
  } else {
    out.Y_locus = ConstructibleSet::locally_closed(z, Ideal(s.ring, {s.den}));
  }
  return out;
}

LocusResult family_leaf_locus(const TorsorSpace& t, const LeafDistribution& l, const FamilyOfSubvarieties& f,
                              int e, const FamilyOfSubvarieties& h, const LocusOptions& opts) {
  const auto base = t.base_vars();
  for (const auto& v : h.total_ideal.ring()->vars()) {
    auto params = h.params();
    if (std::find(base.begin(), base.end(), v) == base.end() &&
        std::find(params.begin(), params.end(), v) == params.end())
      throw RingMismatch("family_leaf_locus: h uses '" + v + "', which is neither a base coordinate nor a parameter");
  }
  std::vector<std::string> pvars = f.params();
  for (const auto& p : h.params()) pvars.push_back(p);
  RingPtr pring = make_ring(pvars);
  FamilyOfSubvarieties g{Ideal(pring), AffineChart(pvars.size(), f.parameter_chart.ideal.in_ring(pring) +
                                                                     h.parameter_chart.ideal.in_ring(pring)),
                         std::max(f.fiber_degree_bound, h.fiber_degree_bound)};
  RingPtr gring = family_ring(t.ring->vars(), g);
  g.total_ideal = f.total_ideal.in_ring(gring) + h.total_ideal.in_ring(gring);

  LocusResult r = leaf_locus(t, l, g, e, opts);
  std::vector<std::string> keep = t.ring->vars();
  for (const auto& p : f.params()) keep.push_back(p);
  if (h.params().empty()) return r;
  LocusResult out = r;
  out.Z_locus = eliminate(r.Z_locus, keep);
  out.Y_locus = opts.fast_closure ? ConstructibleSet::closed(out.Z_locus) : cs_project(r.Y_locus, keep, opts.depth_limit);
  return out;
}

}  // namespace leafcut
