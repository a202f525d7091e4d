#include "doctest.h"

#include <cmath>
#include <functional>

#include "leafcut/algebra/ideal_ops.hpp"
#include "leafcut/errors.hpp"
#include "leafcut/foliation/zilber_pink.hpp"
#include "support.hpp"

using namespace leafcut;
using namespace leafcut::testing;

namespace {

AffineChart affine(const RingPtr& r) { return AffineChart(r->size(), Ideal::zero(r)); }

// Rank-r connection over the s-line with matrix entries given as strings.
ConnectionData line_connection(std::size_t r, const std::vector<std::string>& entries) {
  auto ring = make_ring({"s"});
  RFMatrix a = rf_zero(ring, r);
  for (std::size_t k = 0; k < r * r; ++k) {
    auto slash = entries[k].find('/');
    if (slash == std::string::npos) {
      a(k / r, k % r) = RationalFunction(P(ring, entries[k]));
    } else {
      a(k / r, k % r) = RationalFunction(P(ring, entries[k].substr(0, slash)), P(ring, entries[k].substr(slash + 1)));
    }
  }
  return ConnectionData(affine(ring), r, {a});
}

// Family over the torsor with parameters `params`.
FamilyOfSubvarieties family(const Torsor& t, const std::vector<std::string>& params,
                            const std::vector<std::string>& gens) {
  auto vars = t.space.ring->vars();
  vars.insert(vars.end(), params.begin(), params.end());
  RingPtr ring = make_ring(vars);
  RingPtr pring = make_ring(params);
  Ideal total = I(ring, gens);
  return {total, AffineChart(params.size(), Ideal::zero(pring)), std::max(1, total.max_degree())};
}

Ideal z_of(const Torsor& t, const FamilyOfSubvarieties& f) {
  return groebner_basis(family_ideal(t.space.ring->vars(), f, &t.space.constraint_ideal));
}

double to_d(const Rational& q) { return q.get_d(); }

double eval_d(const Poly& p, const std::vector<double>& x) {
  double sum = 0;
  for (const auto& t : p.terms()) {
    double v = to_d(t.coef);
    for (std::size_t i = 0; i < x.size(); ++i) v *= std::pow(x[i], t.mono[i]);
    sum += v;
  }
  return sum;
}

double eval_d(const RationalFunction& f, const std::vector<double>& x) { return eval_d(f.num(), x) / eval_d(f.den(), x); }

// Integrates β' = −β A(s) from (s0, β0) to s1 with fixed-step RK4.
std::vector<double> transport(const ConnectionData& c, double s0, std::vector<double> beta, double s1) {
  const std::size_t r = c.rank();
  auto rhs = [&](double s, const std::vector<double>& b) {
    std::vector<double> a(r * r), out(r * r, 0.0);
    for (std::size_t k = 0; k < r * r; ++k) a[k] = eval_d(c.matrix(0)(k / r, k % r), {s});
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k) out[i * r + j] -= b[i * r + k] * a[k * r + j];
    return out;
  };
  const int steps = 200;
  double h = (s1 - s0) / steps, s = s0;
  auto axpy = [](const std::vector<double>& x, double k, const std::vector<double>& d) {
    std::vector<double> o(x);
    for (std::size_t i = 0; i < o.size(); ++i) o[i] += k * d[i];
    return o;
  };
  for (int n = 0; n < steps; ++n) {
    auto k1 = rhs(s, beta);
    auto k2 = rhs(s + h / 2, axpy(beta, h / 2, k1));
    auto k3 = rhs(s + h / 2, axpy(beta, h / 2, k2));
    auto k4 = rhs(s + h, axpy(beta, h, k3));
    for (std::size_t i = 0; i < beta.size(); ++i) beta[i] += h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    s += h;
  }
  return beta;
}

double det_d(const std::vector<double>& b, std::size_t r) {
  if (r == 1) return b[0];
  return b[0] * b[3] - b[1] * b[2];
}

// Local dimension of (leaf through x) ∩ 𝒵_y over a one-dimensional base:
// 1 when every family equation stays zero along the integrated leaf near x.
int oracle_dim(const ConnectionData& c, const Ideal& z, const std::vector<Rational>& point) {
  const std::size_t r = c.rank();
  double s0 = to_d(point[0]);
  std::vector<double> beta0;
  for (std::size_t k = 0; k < r * r; ++k) beta0.push_back(to_d(point[1 + k]));
  std::vector<double> ys;
  for (std::size_t k = 2 + r * r; k < point.size(); ++k) ys.push_back(to_d(point[k]));
  for (double ds : {-0.1, -0.05, 0.05, 0.1}) {
    auto beta = transport(c, s0, beta0, s0 + ds);
    std::vector<double> x{s0 + ds};
    x.insert(x.end(), beta.begin(), beta.end());
    x.push_back(1.0 / det_d(beta, r));
    x.insert(x.end(), ys.begin(), ys.end());
    for (const auto& g : z.gens())
      if (std::abs(eval_d(g, x)) > 1e-7) return 0;
  }
  return 1;
}

struct OracleCase {
  std::string name;
  ConnectionData conn;
  std::vector<std::string> params;
  std::vector<std::string> gens;
  // Completes (s, β) to a point of 𝒵 by choosing parameters.
  std::function<std::vector<Rational>(RationalSampler&, const std::vector<Rational>&)> solve;
};

std::vector<Rational> random_frame(RationalSampler& rs, std::size_t r, bool zero_b12) {
  for (;;) {
    std::vector<Rational> b = rs.point(r * r);
    if (zero_b12 && r == 2) b[1] = 0;
    Rational det = r == 1 ? b[0] : b[0] * b[3] - b[1] * b[2];
    if (det != 0) return b;
  }
}

}  // namespace

TEST_CASE("radical_approx") {
  auto r = make_ring({"x", "y"});
  CHECK(ideals_equal(radical_approx(I(r, {"x^2"})), I(r, {"x"})));
  CHECK(ideals_equal(radical_approx(I(r, {"x^2 - 2*x + 1", "y^2"})), I(r, {"x - 1", "y"})));
  CHECK(ideals_equal(radical_approx(I(r, {"x^2*y", "x*y^3"})), I(r, {"x*y"})));
}

TEST_CASE("degree_budget") {
  CHECK(degree_budget(7, 1, 5, 3) == 7);
  CHECK(degree_budget(3, 2, 2, 1) == 12);
  CHECK(degree_budget(1, 3, 0, 5) == 1);
  CHECK(degree_budget(2, 10, 5, 10) == mpz_class("2" + std::string(50, '0')));
  CHECK(degree_budget(5, 3, 2, 0) == 5);
}

TEST_CASE("atypicality_check and atypical_range") {
  auto rep = atypicality_check(1, 3, 5, 2, 3);
  CHECK(rep.atypical);
  CHECK(rep.atypical_dim_form);
  CHECK_FALSE(atypicality_check(1, 4, 5, 2, 3).atypical);  // dim V = dim U + dim H
  auto r0 = atypicality_check(0, 1, 4, 2, 2);
  CHECK(r0.atypical == (1 < 0 + 2));
  CHECK(r0.atypical_dim_form == r0.atypical);
  // Exhaustive agreement whenever dim_H = dim_P - dim_L.
  for (int p = 0; p <= 6; ++p)
    for (int u = 0; u <= p; ++u)
      for (int v = 0; v <= p; ++v)
        for (int l = 0; l <= p; ++l) {
          auto a = atypicality_check(u, v, p, l, p - l);
          CHECK(a.atypical == a.atypical_dim_form);
        }
  CHECK_THROWS_AS(atypicality_check(1, 3, 5, 2, 1), SchemaError);
  CHECK_THROWS_AS(atypicality_check(-1, 3, 5, 2, 3), SchemaError);

  ZPConfig cfg{2, 4, {}, {}};
  CHECK(atypical_range(1, cfg).rho == 3);
  CHECK(atypical_range(2, cfg).rho == 4);
  CHECK(atypical_range(1, cfg).contains(2));
  CHECK_FALSE(atypical_range(1, cfg).contains(3));
  ZPConfig flat{2, 2, {}, {}};
  for (int j = 0; j <= 2; ++j) CHECK_FALSE(atypical_range(0, flat).contains(j));
  CHECK_THROWS_AS(atypical_range(3, cfg), SchemaError);
}

TEST_CASE("tangency_locus worked examples") {
  Torsor zero = frame_torsor(line_connection(1, {"0"}), {}, {0});
  Torsor exp1 = frame_torsor(line_connection(1, {"1"}), {}, {0});
  auto f0 = family(zero, {"y"}, {"b11 - y"});
  auto f1 = family(exp1, {"y"}, {"b11 - y"});
  // Leaf field (1, 0, 0) is tangent to every fibre b11 = c.
  CHECK(varieties_equal(tangency_locus(zero.space, zero.leaves, f0, 1), z_of(zero, f0)));
  // Leaf field (1, -b11, dinv) is never tangent to b11 = c on the torsor.
  CHECK(is_unit_ideal(tangency_locus(exp1.space, exp1.leaves, f1, 1)));
  CHECK(ideals_equal(tangency_locus(exp1.space, exp1.leaves, f1, 0), z_of(exp1, f1)));
  CHECK(is_unit_ideal(tangency_locus(zero.space, zero.leaves, f0, 2)));
}

TEST_CASE("leaf_locus worked examples") {
  Torsor zero = frame_torsor(line_connection(1, {"0"}), {}, {0});
  Torsor exp1 = frame_torsor(line_connection(1, {"1"}), {}, {0});
  auto f0 = family(zero, {"y"}, {"b11 - y"});
  auto f1 = family(exp1, {"y"}, {"b11 - y"});

  auto r = leaf_locus(zero.space, zero.leaves, f0, 1);
  CHECK(varieties_equal(r.Z_locus, z_of(zero, f0)));
  CHECK(cs_equal(r.Y_locus, ConstructibleSet::closed(z_of(zero, f0))));
  CHECK(r.stages == 0);

  auto r1 = leaf_locus(exp1.space, exp1.leaves, f1, 1);
  CHECK(is_unit_ideal(r1.Z_locus));
  CHECK(r1.Y_locus.is_empty());

  for (const auto* t : {&zero, &exp1}) {
    auto f = family(*t, {"y"}, {"b11 - y"});
    auto r0 = leaf_locus(t->space, t->leaves, f, 0);
    CHECK(ideals_equal(r0.Z_locus, z_of(*t, f)));
    CHECK(cs_equal(r0.Y_locus, ConstructibleSet::closed(z_of(*t, f))));
  }

  // Fibres b11 = y1 union s = y2: only the horizontal component carries leaves.
  auto f2 = family(zero, {"y1", "y2"}, {"(b11 - y1)*(s - y2)"});
  auto r2 = leaf_locus(zero.space, zero.leaves, f2, 1);
  CHECK(r2.stages == 1);
  auto ring = r2.Z_locus.ring();
  CHECK(varieties_equal(r2.Z_locus, I(ring, {"b11 - y1", "b11*dinv - 1"})));
  for (const auto& g : r2.Z_locus.gens()) CHECK(mpz_class(g.total_degree()) <= r2.degree_certificate);
}

TEST_CASE("leaf_locus agrees with the integrated-leaf oracle") {
  std::vector<OracleCase> cases;
  auto put = [](std::vector<Rational> x, std::initializer_list<Rational> ys) {
    x.insert(x.end(), ys.begin(), ys.end());
    return x;
  };
  // Point layout: s, β (row-major), dinv.
  auto b = [](const std::vector<Rational>& x, std::size_t k) { return x[1 + k]; };
  for (const char* a : {"0", "1", "2*s - 1", "3*s^2 + 1", "-1/s"}) {
    auto conn = line_connection(1, {a});
    cases.push_back({std::string("b = y, A = ") + a, conn, {"y"}, {"b11 - y"},
                     [&](RationalSampler&, const std::vector<Rational>& x) { return put(x, {b(x, 0)}); }});
    cases.push_back({std::string("s = y, A = ") + a, conn, {"y"}, {"s - y"},
                     [&](RationalSampler&, const std::vector<Rational>& x) { return put(x, {x[0]}); }});
    cases.push_back({std::string("b s = y, A = ") + a, conn, {"y"}, {"b11*s - y"},
                     [&](RationalSampler&, const std::vector<Rational>& x) { return put(x, {b(x, 0) * x[0]}); }});
    cases.push_back({std::string("b^2 = y, A = ") + a, conn, {"y"}, {"b11^2 - y"},
                     [&](RationalSampler&, const std::vector<Rational>& x) { return put(x, {b(x, 0) * b(x, 0)}); }});
    cases.push_back({std::string("(b - y1)(s - y2), A = ") + a, conn, {"y1", "y2"}, {"(b11 - y1)*(s - y2)"},
                     [&](RationalSampler& rs, const std::vector<Rational>& x) {
                       if (rs() > 0) return put(x, {b(x, 0), rs()});
                       return put(x, {rs(), x[0]});
                     }});
    cases.push_back({std::string("whole torsor, A = ") + a, conn, {}, {},
                     [&](RationalSampler&, const std::vector<Rational>& x) { return x; }});
  }
  auto diag = line_connection(2, {"0", "0", "0", "1"});
  cases.push_back({"b11 = y, diag(0, 1)", diag, {"y"}, {"b11 - y"},
                   [&](RationalSampler&, const std::vector<Rational>& x) { return put(x, {b(x, 0)}); }});
  cases.push_back({"b12 = y, diag(0, 1)", diag, {"y"}, {"b12 - y"},
                   [&](RationalSampler&, const std::vector<Rational>& x) { return put(x, {b(x, 1)}); }});
  cases.push_back({"b12 = y b22, diag(0, 1)", diag, {"y"}, {"b12 - y*b22"},
                   [&](RationalSampler& rs, const std::vector<Rational>& x) {
                     if (b(x, 3) == 0) return put(x, {rs()});
                     return put(x, {b(x, 1) / b(x, 3)});
                   }});
  cases.push_back({"b21 = y s, diag(0, 1)", diag, {"y"}, {"b21 - y*s"},
                   [&](RationalSampler&, const std::vector<Rational>& x) {
                     return put(x, {x[0] == 0 ? Rational(0) : b(x, 2) / x[0]});
                   }});

  RationalSampler rs(11);
  int points = 0, nontrivial = 0;
  for (const auto& oc : cases) {
    CAPTURE(oc.name);
    const std::size_t r = oc.conn.rank();
    Torsor t = frame_torsor(oc.conn, {}, {1});
    auto f = family(t, oc.params, oc.gens);
    auto res = leaf_locus(t.space, t.leaves, f, 1);
    Ideal z = z_of(t, f);
    for (int k = 0; k < 8; ++k) {
      std::vector<Rational> x{rs()};
      if (x[0] == 0) x[0] = 1;
      auto beta = random_frame(rs, r, r == 2 && k % 2 == 0);
      x.insert(x.end(), beta.begin(), beta.end());
      Rational det = r == 1 ? beta[0] : beta[0] * beta[3] - beta[1] * beta[2];
      x.push_back(1 / det);
      auto pt = oc.solve(rs, x);
      bool on_z = std::all_of(z.gens().begin(), z.gens().end(), [&](const Poly& g) { return g.evaluate(pt) == 0; });
      if (!on_z) continue;  // a zero divisor in the solve step
      int expect = oracle_dim(oc.conn, z, pt);
      CAPTURE(pt.size());
      CHECK(cs_is_member(pt, res.Y_locus) == (expect >= 1));
      ++points;
      nontrivial += expect;
    }
  }
  CHECK(points >= 100);
  CHECK(nontrivial > 0);
  CHECK(nontrivial < points);
}

TEST_CASE("d - ds: fibres b = y meet leaves in points at 50 base points") {
  auto conn = line_connection(1, {"1"});
  Torsor t = frame_torsor(conn, {}, {0});
  auto f = family(t, {"y"}, {"b11 - y"});
  auto res = leaf_locus(t.space, t.leaves, f, 1);
  Ideal z = z_of(t, f);
  RationalSampler rs(5);
  for (int k = 0; k < 50; ++k) {
    Rational s = rs(), bv = rs();
    if (bv == 0) bv = 1;
    std::vector<Rational> pt{s, bv, 1 / bv, bv};
    CHECK(oracle_dim(conn, z, pt) == 0);
    CHECK_FALSE(cs_is_member(pt, res.Y_locus));
  }
}

TEST_CASE("leaf_locus properties") {
  Torsor zero = frame_torsor(line_connection(1, {"0"}), {}, {0});
  Torsor diag = frame_torsor(line_connection(2, {"0", "0", "0", "1"}), {}, {0});
  std::vector<std::pair<const Torsor*, FamilyOfSubvarieties>> inst{
      {&zero, family(zero, {"y1", "y2"}, {"(b11 - y1)*(s - y2)"})},
      {&zero, family(zero, {"y"}, {"b11^2 - y*s"})},
      {&diag, family(diag, {"y"}, {"b12 - y*b22"})},
      {&diag, family(diag, {"y"}, {"b12*b21 - y"})},
  };
  for (auto& [t, f] : inst) {
    std::vector<LocusResult> rs;
    for (int e = 0; e <= 2; ++e) rs.push_back(leaf_locus(t->space, t->leaves, f, e));
    CHECK(ideals_equal(rs[0].Z_locus, z_of(*t, f)));
    for (int e = 0; e < 2; ++e) {
      CHECK(variety_contained(rs[e + 1].Z_locus, rs[e].Z_locus));
      CHECK(ideal_contains(rs[e + 1].Z_locus, rs[e].Z_locus));
    }
    for (const auto& r : rs)
      for (const auto& g : r.Z_locus.gens()) CHECK(mpz_class(g.total_degree()) <= r.degree_certificate);

    // Replacing total_ideal by its basis changes nothing.
    FamilyOfSubvarieties fg = f;
    fg.total_ideal = groebner_basis(f.total_ideal);
    CHECK(cs_equal(leaf_locus(t->space, t->leaves, fg, 1).Y_locus, rs[1].Y_locus));

    // Relabelling parameters: rename p -> q_p and compare after renaming back.
    auto params = f.params();
    std::vector<std::string> renamed;
    for (const auto& p : params) renamed.push_back("q_" + p);
    auto vars = t->space.ring->vars();
    auto vars_new = vars;
    vars_new.insert(vars_new.end(), renamed.begin(), renamed.end());
    RingPtr rnew = make_ring(vars_new);
    FamilyOfSubvarieties fr{rename_vars(f.total_ideal, vars_new, rnew),
                            AffineChart(renamed.size(), Ideal::zero(make_ring(renamed))), f.fiber_degree_bound};
    auto rr = leaf_locus(t->space, t->leaves, fr, 1);
    auto vars_old = vars;
    vars_old.insert(vars_old.end(), params.begin(), params.end());
    CHECK(cs_equal(rename_vars(rr.Y_locus, vars_old, rs[1].Y_locus.ring()), rs[1].Y_locus));
  }
}

TEST_CASE("family_leaf_locus") {
  Torsor zero = frame_torsor(line_connection(1, {"0"}), {}, {0});
  auto f = family(zero, {"y"}, {"b11 - y"});
  auto base = make_ring({"s"});
  auto whole = single_fibre(Ideal::zero(base));
  auto plain = leaf_locus(zero.space, zero.leaves, f, 1);
  auto with_whole = family_leaf_locus(zero.space, zero.leaves, f, 1, whole);
  CHECK(cs_equal(plain.Y_locus, with_whole.Y_locus));

  auto points = point_family(Ideal::zero(base), {"c"});
  auto at0 = family_leaf_locus(zero.space, zero.leaves, f, 0, points);
  CHECK(cs_equal(at0.Y_locus, ConstructibleSet::closed(z_of(zero, f))));
  auto at1 = family_leaf_locus(zero.space, zero.leaves, f, 1, points);
  CHECK(at1.Y_locus.is_empty());
}

TEST_CASE("fibre_inclusion") {
  Torsor zero = frame_torsor(line_connection(1, {"0"}), {}, {0});
  auto line = family(zero, {"y"}, {"b11 - y"});
  auto point = family(zero, {"c1", "c2"}, {"s - c1", "b11 - c2"});
  const auto xv = zero.space.ring->vars();
  RingPtr pair = make_ring({"c1", "c2", "y"});
  // point(c) ⊆ line(y) iff c2 = y.
  Ideal in = fibre_inclusion(xv, point, {"c1", "c2"}, line, {"y"}, pair, &zero.space.constraint_ideal);
  CHECK(ideals_equal(in, I(pair, {"c2 - y"})));
  // line(y) ⊆ point(c) never holds.
  Ideal out = fibre_inclusion(xv, line, {"y"}, point, {"c1", "c2"}, pair, &zero.space.constraint_ideal);
  CHECK(is_unit_ideal(out));

  // At y = 0 the fibre is the whole torsor but the leading coefficient vanishes.
  auto bad = family(zero, {"y"}, {"y*s"});
  CHECK_THROWS_AS(fibre_inclusion(xv, bad, {"y"}, line, {"w"}, make_ring({"y", "w"}), &zero.space.constraint_ideal),
                  SchemaError);
}

TEST_CASE("zp_candidate_loci worked examples") {
  for (const char* a : {"0", "1"}) {
    CAPTURE(a);
    Torsor t = frame_torsor(line_connection(1, {a}), {}, {0});
    auto lines = family(t, {"y"}, {"b11 - y"});
    auto points = family(t, {"c1", "c2"}, {"s - c1", "b11 - c2"});
    ZPConfig cfg{1, 1, {lines, points}, {}};
    auto res = zp_candidate_loci(t.space, t.leaves, cfg, 1);
    CHECK(res.rho == 1);
    REQUIRE(res.members.size() == 2);
    CHECK(res.members[1].Y.is_empty());
    for (const auto& m : res.members) CHECK(m.K.is_empty());
    if (std::string(a) == "0") {
      REQUIRE(res.candidates.size() == 1);
      CHECK(cs_equal(res.candidates[0], ConstructibleSet::whole(make_ring({"s"}))));
      CHECK(cs_equal(res.members[0].Y, ConstructibleSet::closed(z_of(t, lines))));
    } else {
      CHECK(res.candidates.empty());
      CHECK(res.members[0].Y.is_empty());
    }
  }

  // Single fibre: K is empty and Y is the leaf locus.
  Torsor t = frame_torsor(line_connection(1, {"0"}), {}, {0});
  auto single = single_fibre(I(t.space.ring, {"b11 - 2"}));
  ZPConfig one{1, 1, {single}, {}};
  auto res = zp_candidate_loci(t.space, t.leaves, one, 1);
  CHECK(res.members[0].K.is_empty());
  CHECK(cs_equal(res.members[0].Y, leaf_locus(t.space, t.leaves, single, 1).Y_locus));

  // Outside the atypical range nothing survives.
  ZPConfig typical{1, 0, {single}, {}};
  CHECK(zp_candidate_loci(t.space, t.leaves, typical, 1).candidates.empty());
}

TEST_CASE("zp K-loci detect strict fibre inclusions") {
  // diag(0, 1): leaves keep b11 and b12 = 0 fixed, so {b11 = y} ⊋
  // {b11 = u, b12 = 0} and both carry whole leaves at e = 1.
  Torsor t = frame_torsor(line_connection(2, {"0", "0", "0", "1"}), {}, {0});
  auto big = family(t, {"y"}, {"b11 - y"});
  auto small = family(t, {"u"}, {"b11 - u", "b12"});
  ZPConfig cfg{1, 3, {big, small}, {}};
  auto res = zp_candidate_loci(t.space, t.leaves, cfg, 1);
  REQUIRE(res.members.size() == 2);
  CHECK_FALSE(res.members[1].Y.is_empty());
  // Every point of the big family with b12 = 0 has a strictly smaller fibre
  // through it carrying the same leaf: that is K(e) (second condition).
  auto ring0 = res.members[0].ring;
  CHECK(cs_equal(res.members[0].K,
                 cs_intersect(res.members[0].Y, ConstructibleSet::closed(I(ring0, {"b12"})))));
  CHECK(res.members[0].Kprime.is_empty());
  CHECK(res.members[1].K.is_empty());
  CHECK(res.candidates.size() >= 1);

  // Covering families: all base points.
  auto h = point_family(Ideal::zero(make_ring({"s"})), {"c"});
  cfg.h = {single_fibre(Ideal::zero(make_ring({"s"}))), h};
  auto cov = zp_candidate_loci(t.space, t.leaves, cfg, 1);
  REQUIRE(cov.covering_families.has_value());
  CHECK(*cov.covering_families == std::vector<std::size_t>{0});
}
