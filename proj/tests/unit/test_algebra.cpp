#include "doctest.h"

#include "leafcut/algebra/gcd.hpp"
#include "leafcut/algebra/ideal_ops.hpp"
#include "leafcut/algebra/rational_function.hpp"
#include "leafcut/errors.hpp"
#include "support.hpp"

using namespace leafcut;
using namespace leafcut::testing;

namespace {

// Sylvester resultant in variable v, computed as a determinant. Independent of
// the Gröbner engine.
Poly resultant(const Poly& f, const Poly& g, std::size_t v) {
  auto coeffs = [&](const Poly& p) {
    std::vector<Poly> c(static_cast<std::size_t>(p.degree_in(v)) + 1, Poly(p.ring()));
    for (const auto& t : p.terms()) {
      Monomial m = t.mono;
      int e = m[v];
      m.set(v, 0);
      c[static_cast<std::size_t>(e)] += Poly::monomial(p.ring(), m, t.coef);
    }
    return c;
  };
  auto cf = coeffs(f), cg = coeffs(g);
  std::size_t m = cf.size() - 1, n = cg.size() - 1, size = m + n;
  Matrix<Poly> syl(size, size, Poly(f.ring()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) syl(i, i + k) = cf[m - k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) syl(n + i, i + k) = cg[n - k];
  return determinant(syl);
}

// Buchberger's criterion checked directly with Poly arithmetic.
bool spolys_reduce_to_zero(const Ideal& g, const MonomialOrder& ord) {
  const auto& gs = g.gens();
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      const Term& a = gs[i].leading_term(ord);
      const Term& b = gs[j].leading_term(ord);
      Monomial l = lcm(a.mono, b.mono);
      Poly s = gs[i].mul_term(a.mono.quotient_of(l), 1 / a.coef) -
               gs[j].mul_term(b.mono.quotient_of(l), 1 / b.coef);
      if (!normal_form(s, g, ord).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("rational serialization is num/den") {
  CHECK(rational_to_string(Rational(-3, 2)) == "-3/2");
  CHECK(rational_to_string(Rational(0)) == "0/1");
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("poly arithmetic and canonical text") {
  auto r = make_ring({"x", "y"});
  Poly p = P(r, "(x + y)^2 - x^2");
  CHECK(p == P(r, "2*x*y + y^2"));
  CHECK(p.to_string() == "2/1*x^1*y^1 + 1/1*y^2");
  CHECK(parse_poly(p.to_string(), r) == p);
  CHECK(P(r, "0").to_string() == "0");
  CHECK(P(r, "x^3*y").derivative(0) == P(r, "3*x^2*y"));
  CHECK(P(r, "x - y").substitute(0, P(r, "y^2")) == P(r, "y^2 - y"));
  CHECK_THROWS_AS(P(r, "z"), RingMismatch);
  CHECK_THROWS_AS(parse_poly("x/y", r), ParseError);
}

TEST_CASE("serialization round-trips bit-exactly") {
  auto r = make_ring({"a", "b", "c"});
  RationalSampler s(7);
  for (int k = 0; k < 50; ++k) {
    Poly p = random_poly(r, s.engine(), 4, 6);
    for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block(1)}) {
      std::string text = p.to_string(ord);
      Poly q = parse_poly(text, r);
      CHECK(q == p);
      CHECK(q.to_string(ord) == text);
    }
  }
}

TEST_CASE("groebner_basis worked examples") {
  auto r = make_ring({"x", "y"});
  CHECK(ser(groebner_basis(I(r, {"x"}), MonomialOrder::lex())) == ser(I(r, {"x"})));
  // Substituting x = y^2 into y^2 - x gives y^4 - y.
  Ideal g = groebner_basis(I(r, {"x^2 - y", "y^2 - x"}), MonomialOrder::lex());
  CHECK(ser(g) == ser(I(r, {"x - y^2", "y^4 - y"})));
  CHECK(ser(groebner_basis(I(r, {"x + y", "x - y"}))) == ser(I(r, {"x", "y"})));
  CHECK(ser(groebner_basis(I(r, {"x*y - 1", "x"}))) == std::vector<std::string>{"1/1"});
  CHECK(groebner_basis(Ideal::zero(r)).empty());
}

TEST_CASE("normal_form worked examples") {
  auto r = make_ring({"x", "y"});
  CHECK(normal_form(P(r, "x^2"), I(r, {"x"})).is_zero());
  Ideal g = groebner_basis(I(r, {"x - y^2", "y^4 - y"}), MonomialOrder::lex());
  CHECK(normal_form(P(r, "y^4"), g, MonomialOrder::lex()) == P(r, "y"));
  CHECK(normal_form(P(r, "1"), I(r, {"x"})) == P(r, "1"));
  auto other = make_ring({"x", "z"});
  CHECK_THROWS_AS(normal_form(P(other, "x"), I(r, {"x"})), RingMismatch);
}

TEST_CASE("eliminate worked examples") {
  auto r = make_ring({"x", "y"});
  CHECK(eliminate(I(r, {"y - x^2"}), {"y"}).empty());
  CHECK(eliminate(I(r, {"x - 1"}), {}).empty());

  auto rt = make_ring({"x", "y", "t"});
  Ideal e = eliminate(I(rt, {"x*t - 1", "y - t^2"}), {"x", "y"});
  Poly res = resultant(P(rt, "x*t - 1"), P(rt, "y - t^2"), 2).monic();
  REQUIRE(e.size() == 1);
  CHECK(e.gens()[0].in_ring(rt) == res);
  CHECK(ser(e) == ser(I(e.ring(), {"x^2*y - 1"})));
}

TEST_CASE("saturate worked examples") {
  auto r = make_ring({"x", "y"});
  CHECK(ser(saturate(I(r, {"x*y"}), P(r, "y"))) == ser(I(r, {"x"})));
  CHECK(ser(saturate(I(r, {"x"}), P(r, "x"))) == std::vector<std::string>{"1/1"});
  CHECK(ser(saturate(I(r, {"x^2"}), P(r, "y"))) == ser(I(r, {"x^2"})));
  auto r1 = make_ring({"x"});
  CHECK(ser(saturate(I(r1, {"x^2*(x-1)"}), P(r1, "x"))) == ser(I(r1, {"x - 1"})));
  CHECK_THROWS(saturate(I(r, {"x"}), P(r, "0")));
}

TEST_CASE("ideal_dimension worked examples") {
  auto r = make_ring({"x", "y"});
  CHECK(ideal_dimension(Ideal::zero(r)) == 2);
  CHECK(ideal_dimension(I(r, {"x", "y"})) == 0);
  CHECK(ideal_dimension(I(r, {"x^2 + y^2 - 1"})) == 1);
  CHECK_FALSE(ideal_dimension(I(r, {"x", "x - 1"})).has_value());
}

TEST_CASE("closure_of_image worked examples") {
  auto r1 = make_ring({"t"});
  Ideal c = closure_of_image(Ideal::zero(r1), {P(r1, "t"), P(r1, "t^2")}, {"x", "y"});
  CHECK(ser(c) == ser(I(c.ring(), {"x^2 - y"})));

  auto r = make_ring({"x", "y"});
  Ideal i = I(r, {"x^2 + y^2 - 1", "x*y"});
  Ideal id = closure_of_image(i, {P(r, "x"), P(r, "y")}, {"x", "y"});
  CHECK(ser(id) == ser(groebner_basis(i)));
  CHECK(ser(closure_of_image(I(r, {"x"}), {P(r, "x")}, {"x"})) == ser(I(make_ring({"x"}), {"x"})));
}

TEST_CASE("rank_locus worked examples") {
  auto r = make_ring({"x", "y"});
  Matrix<Poly> id(2, 2, Poly(r));
  id(0, 0) = P(r, "1");
  id(1, 1) = P(r, "1");
  CHECK(ser(rank_locus(id, 1)) == std::vector<std::string>{"1/1"});
  Matrix<Poly> d(2, 2, Poly(r));
  d(0, 0) = P(r, "x");
  d(1, 1) = P(r, "y");
  CHECK(ser(rank_locus(d, 1)) == ser(I(r, {"x*y"})));
  CHECK(ser(rank_locus(d, 0)) == ser(I(r, {"x", "y"})));
  CHECK(rank_locus(d, 2).empty());
  CHECK_THROWS_AS(rank_locus(d, 0, 3), GuardExceeded);
}

TEST_CASE("determinant matches the Leibniz formula on 3x3") {
  auto r = make_ring({"a", "b", "c", "d", "e", "f", "g", "h", "i"});
  Matrix<Poly> m(3, 3, Poly(r));
  for (std::size_t k = 0; k < 9; ++k) m(k / 3, k % 3) = Poly::variable(r, k);
  CHECK(determinant(m) == P(r, "a*e*i - a*f*h - b*d*i + b*f*g + c*d*h - c*e*g"));
}

TEST_CASE("multivariate gcd and rational functions") {
  auto r = make_ring({"x", "y"});
  Poly a = P(r, "(x - y)*(x + 2)*(y^2 + 1)");
  Poly b = P(r, "(x - y)^2*(y^2 + 1)*(x - 3)");
  CHECK(poly_gcd(a, b) == P(r, "(x - y)*(y^2 + 1)").monic());
  CHECK(poly_gcd(P(r, "x"), P(r, "y")) == P(r, "1"));
  CHECK(exact_divide(b, a) == std::nullopt);
  CHECK(*exact_divide(b, P(r, "x - y")) == P(r, "(x - y)*(y^2 + 1)*(x - 3)"));

  RationalFunction f(P(r, "x^2 - y^2"), P(r, "2*x + 2*y"));
  CHECK(f.is_polynomial());
  CHECK(f.num() == P(r, "1/2*x - 1/2*y"));
  RationalFunction g(P(r, "1"), P(r, "x"));
  RationalFunction h(P(r, "1"), P(r, "x - 1"));
  RationalFunction sum = g - h;
  CHECK(sum == RationalFunction(P(r, "-1"), P(r, "x^2 - x")));
  CHECK((sum * RationalFunction(P(r, "x^2 - x"))).num() == P(r, "-1"));
  CHECK(g.derivative(0) == RationalFunction(P(r, "-1"), P(r, "x^2")));
}

TEST_CASE("groebner_basis properties on random ideals") {
  auto r = make_ring({"x", "y", "z"});
  RationalSampler s(11);
  for (int k = 0; k < 40; ++k) {
    Ideal in(r, {random_poly(r, s.engine(), 3, 3), random_poly(r, s.engine(), 3, 3),
                 random_poly(r, s.engine(), 2, 3)});
    for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
      Ideal g = groebner_basis(in, ord);
      CHECK(ser(groebner_basis(g, ord)) == ser(g));
      CHECK(groebner_basis(in, ord).serialize(ord) == g.serialize(ord));
      for (const auto& f : in.gens()) CHECK(normal_form(f, g, ord).is_zero());
      CHECK(spolys_reduce_to_zero(g, ord));
    }
  }
}

TEST_CASE("lex and block bases generate the grevlex ideal") {
  auto r = make_ring({"a", "b", "c", "d"});
  RationalSampler s(2);
  for (int k = 0; k < 60; ++k) {
    Ideal in(r, {random_poly(r, s.engine(), 3, 3), random_poly(r, s.engine(), 3, 3),
                 random_poly(r, s.engine(), 2, 3)});
    Ideal ref = groebner_basis(in);
    for (auto ord : {MonomialOrder::lex(), MonomialOrder::block(1), MonomialOrder::block(2)}) {
      Ideal g = groebner_basis(in, ord);
      CHECK(ser(groebner_basis(g)) == ser(ref));
      for (const auto& f : in.gens()) CHECK(normal_form(f, g, ord).is_zero());
      CHECK(spolys_reduce_to_zero(g, ord));
    }
  }
}
