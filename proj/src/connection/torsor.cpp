#include "leafcut/connection/torsor.hpp"

#include "leafcut/algebra/gcd.hpp"
#include "leafcut/algebra/ideal_ops.hpp"
#include "leafcut/errors.hpp"

namespace leafcut {

std::size_t TorsorSpace::rank() const {
  std::size_t r = 0;
  while (r * r < frame_vars.size()) ++r;
  return r;
}

RFMatrix TorsorSpace::frame_matrix() const {
  std::size_t r = rank();
  RFMatrix m = rf_zero(ring, r);
  for (std::size_t k = 0; k < r * r; ++k) m(k / r, k % r) = Poly::variable(ring, frame_vars[k]);
  return m;
}

RationalFunction LeafDistribution::apply(std::size_t i, const RationalFunction& f) const {
  RationalFunction out(ring);
  for (std::size_t k = 0; k < ring->size(); ++k)
    if (!fields[i][k].is_zero()) out += fields[i][k] * f.derivative(k);
  return out;
}

namespace {

RFMatrix lift(const RFMatrix& m, const RingPtr& ring) {
  RFMatrix out = rf_zero(ring, m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).in_ring(ring);
  return out;
}

RFMatrix kron_power(const RFMatrix& m, std::size_t k, const RingPtr& ring) {
  RFMatrix out = rf_identity(ring, 1);
  for (std::size_t t = 0; t < k; ++t) out = kronecker(out, m);
  return out;
}

std::vector<RationalFunction> apply_matrix(const RFMatrix& m, const std::vector<RationalFunction>& v) {
  std::vector<RationalFunction> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    RationalFunction acc = v[0] - v[0];
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) acc += m(i, j) * v[j];
    out.push_back(std::move(acc));
  }
  return out;
}

Poly clear_denominator(const RationalFunction& f) { return f.num(); }

// Ideal of the regular part V(ideal) \ V(singular).
Ideal regular_part(const Ideal& ideal, const Poly& singular) {
  if (singular.is_constant()) return groebner_basis(ideal);
  return saturate(ideal, singular);
}

bool vanishes_on(const Poly& p, const Ideal& regular) {
  if (p.is_zero()) return true;
  if (regular.empty()) return false;
  return normal_form(p, regular).is_zero() || in_radical(regular, p);
}

}  // namespace

Torsor frame_torsor(const ConnectionData& c, const std::vector<InvariantTensor>& tensors,
                    const std::vector<Rational>& base_point, std::optional<int> group_dimension,
                    bool check_flat) {
  const std::size_t r = c.rank(), m = c.directions();
  if (base_point.size() != m) throw std::invalid_argument("frame_torsor: base point arity");
  for (const auto& g : c.base().ideal.gens())
    if (g.evaluate(base_point) != 0) throw std::invalid_argument("frame_torsor: base point off the base");
  if (c.singular_denominator().evaluate(base_point) == 0)
    throw std::invalid_argument("frame_torsor: base point on the singular locus");

  TorsorSpace space{c.base(), nullptr, {}, {}, base_point, Ideal(c.ring()), 0};
  std::vector<std::string> vars = c.ring()->vars();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      std::string name = fresh_name(c.ring(), "b" + std::to_string(i + 1) + std::to_string(j + 1));
      space.frame_vars.push_back(name);
      vars.push_back(name);
    }
  space.dinv = fresh_name(c.ring(), "dinv");
  vars.push_back(space.dinv);
  space.ring = make_ring(vars);
  const RingPtr& ring = space.ring;

  RFMatrix beta = space.frame_matrix();
  Matrix<Poly> beta_poly(r, r, Poly(ring));
  for (std::size_t k = 0; k < r * r; ++k) beta_poly(k / r, k % r) = beta(k / r, k % r).num();
  Poly dinv = Poly::variable(ring, space.dinv);
  std::vector<Poly> gens;
  for (const auto& g : c.base().ideal.gens()) gens.push_back(g.in_ring(ring));
  gens.push_back(dinv * determinant(beta_poly) - Poly::constant(ring, 1));

  for (const auto& t : tensors) {
    std::size_t len = 1;
    for (std::size_t k = 0; k < t.a + t.b; ++k) len *= r;
    if (t.value.size() != len) throw std::invalid_argument("frame_torsor: tensor length mismatch");
    if (check_flat && !flat_section_check(tensor_connection(c, t.a, t.b), t.value))
      throw InvariantViolation("frame_torsor: declared invariant tensor is not flat");
    // β^{⊗a} ⊗ I τ(s) = I ⊗ (βᵀ)^{⊗b} τ(s0), denominators cleared.
    std::vector<RationalFunction> at_s, at_s0;
    for (const auto& v : t.value) {
      at_s.push_back(v.in_ring(ring));
      at_s0.push_back(RationalFunction::constant(ring, v.evaluate(base_point)));
    }
    RFMatrix lhs = kronecker(kron_power(beta, t.a, ring), kron_power(rf_identity(ring, r), t.b, ring));
    RFMatrix rhs = kronecker(kron_power(rf_identity(ring, r), t.a, ring), kron_power(transpose(beta), t.b, ring));
    auto l = apply_matrix(lhs, at_s);
    auto rr = apply_matrix(rhs, at_s0);
    for (std::size_t k = 0; k < len; ++k) {
      Poly eq = clear_denominator(l[k] - rr[k]);
      if (!eq.is_zero()) gens.push_back(eq);
    }
  }
  space.constraint_ideal = Ideal(ring, std::move(gens));

  if (group_dimension) {
    space.group_dimension = *group_dimension;
  } else {
    std::vector<std::optional<Rational>> at(ring->size());
    for (std::size_t i = 0; i < m; ++i) at[i] = base_point[i];
    std::vector<Poly> fibre;
    for (const auto& g : space.constraint_ideal.gens()) fibre.push_back(g.evaluate_partial(at));
    auto d = ideal_dimension(Ideal(ring, std::move(fibre)));
    if (!d) throw InvariantViolation("frame_torsor: empty fibre over the base point");
    space.group_dimension = *d - static_cast<int>(m);
  }

  LeafDistribution leaves{ring, {}, c.singular_denominator().in_ring(ring)};
  for (std::size_t i = 0; i < m; ++i) {
    RFMatrix a = lift(c.matrix(i), ring);
    RFMatrix flow = beta * a;
    std::vector<RationalFunction> field(ring->size(), RationalFunction(ring));
    field[i] = RationalFunction::constant(ring, 1);
    for (std::size_t k = 0; k < r * r; ++k) field[m + k] = -flow(k / r, k % r);
    RationalFunction trace(ring);
    for (std::size_t k = 0; k < r; ++k) trace += a(k, k);
    field[m + r * r] = RationalFunction(dinv) * trace;
    leaves.fields.push_back(std::move(field));
  }
  return {std::move(space), std::move(leaves)};
}

std::vector<RationalFunction> lie_bracket(const LeafDistribution& d, std::size_t i, std::size_t j) {
  std::vector<RationalFunction> out;
  for (std::size_t k = 0; k < d.ring->size(); ++k)
    out.push_back(d.apply(i, d.fields[j][k]) - d.apply(j, d.fields[i][k]));
  return out;
}

bool fields_tangent(const LeafDistribution& d, const Ideal& ideal) {
  Ideal regular = regular_part(ideal, d.singular);
  for (std::size_t i = 0; i < d.fields.size(); ++i)
    for (const auto& g : ideal.gens())
      if (!vanishes_on(d.apply(i, RationalFunction(g)).num(), regular)) return false;
  return true;
}

bool is_involutive(const LeafDistribution& d, const Ideal& ideal) {
  Ideal regular = regular_part(ideal, d.singular);
  const std::size_t m = d.fields.size(), n = d.ring->size();
  auto row_of = [&](const std::vector<RationalFunction>& v, Matrix<Poly>& mat, std::size_t row) {
    Poly den = Poly::constant(d.ring, 1);
    for (const auto& e : v) den = poly_lcm(den, e.den());
    for (std::size_t k = 0; k < n; ++k) {
      RationalFunction scaled = v[k] * RationalFunction(den);
      mat(row, k) = scaled.num();
    }
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      auto br = lie_bracket(d, i, j);
      Matrix<Poly> mat(m + 1, n, Poly(d.ring));
      for (std::size_t k = 0; k < m; ++k) row_of(d.fields[k], mat, k);
      row_of(br, mat, m);
      Ideal minors = rank_locus(mat, m);
      for (const auto& minor : minors.gens())
        if (!vanishes_on(minor, regular)) return false;
    }
  }
  return true;
}

}  // namespace leafcut
