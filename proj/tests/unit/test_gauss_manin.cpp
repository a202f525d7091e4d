#include "doctest.h"

#include <cmath>

#include "leafcut/errors.hpp"
#include "leafcut/gauss_manin/periods.hpp"
#include "leafcut/gauss_manin/superelliptic.hpp"
#include "support.hpp"

using namespace leafcut;
using namespace leafcut::testing;

namespace {

SuperellipticFamily legendre() { return make_family(2, {1, 1, 1}, {"0", "1", "l"}); }
SuperellipticFamily deligne_mostow() { return make_family(12, {6, 4, 5, 4}, {"0", "1", "x2", "x3"}); }

std::vector<SuperellipticFamily> zoo() {
  return {legendre(),
          deligne_mostow(),
          make_family(2, {1, 1, 1, 1}, {"0", "1", "a", "b"}),
          make_family(2, {1, 1, 1, 1, 1, 1}, {"0", "1", "a", "b", "c", "-1"}),
          make_family(3, {1, 1, 1, 1}, {"0", "1", "a", "b"}),
          make_family(5, {1, 2, 3, 4}, {"0", "1", "a", "b"}),
          make_family(4, {1, 1, 2}, {"0", "1", "t"}),
          make_family(6, {1, 2, 3}, {"0", "1", "t^2+2"})};
}

double agm(double a, double b) {
  for (int i = 0; i < 60; ++i) {
    double m = (a + b) / 2, g = std::sqrt(a * b);
    a = m;
    b = g;
  }
  return a;
}

RationalFunction R(const RingPtr& r, const std::string& num, const std::string& den = "1") {
  return RationalFunction(P(r, num), P(r, den));
}

}  // namespace

TEST_CASE("genus by Riemann-Hurwitz") {
  CHECK(genus(legendre()) == 1);
  CHECK(genus(deligne_mostow()) == 11);
  CHECK(deligne_mostow().exponent_at_infinity() == 5);
  CHECK(genus(make_family(2, {1, 1}, {"0", "1"})) == 0);
  CHECK(genus(make_family(2, {1, 1, 1, 1, 1, 1}, {"0", "1", "2", "3", "4", "5"})) == 2);
  CHECK(genus(make_family(3, {1, 1, 1}, {"0", "1", "t"})) == 1);
  CHECK_THROWS_AS(make_family(4, {4, 1}, {"0", "1"}), SchemaError);
  CHECK_THROWS_AS(make_family(2, {1, 1}, {"t", "t"}), SchemaError);
  CHECK_THROWS_AS(make_family(2, {1, 1, 1}, {"0", "1"}), SchemaError);
  CHECK_NOTHROW(make_family(2, {1, 1, 0}, {"0", "1"}));
  }

TEST_CASE("eigenspace ranks sum to 2g and Hodge pieces to g") {
  for (const auto& fam : zoo()) {
    CAPTURE(to_json(fam).dump());
    auto gm = gauss_manin(fam);
    std::size_t rank = 0, hodge = 0;
    for (const auto& e : gm.eigenspaces) {
      rank += e.basis.rank();
      hodge += e.hodge_sub.size();
      CHECK(e.connection.has_value() == (e.basis.rank() > 0));
    }
    CHECK(rank == static_cast<std::size_t>(2 * gm.genus));
    CHECK(hodge == static_cast<std::size_t>(gm.genus));
  }
}

TEST_CASE("Gauss-Manin connections are flat") {
  for (const auto& fam : zoo()) {
    // Exact curvature with three parameters is slow; those families are checked numerically below.
    if (fam.n_params() != 2) continue;
    CAPTURE(to_json(fam).dump());
    for (const auto& e : gauss_manin(fam).eigenspaces)
      if (e.connection) CHECK(curvature(*e.connection).is_flat);
  }
}

TEST_CASE("Deligne-Mostow family v^12 = u^6 (u-1)^4 (u-x2)^5 (u-x3)^4, first character") {
  auto fam = deligne_mostow();
  auto e = gauss_manin_eigenspace(fam, 1);
  CHECK(e.basis.rank() == 3);
  REQUIRE(e.connection);
  CHECK(e.connection->directions() == 2);
  CHECK(curvature(*e.connection).is_flat);
  auto ode = cyclic_vector_ode(*e.connection, 0);
  CHECK(ode.size() == 3);
  CHECK(period_residual(fam, e, 10, 7) < 1e-8);
}

TEST_CASE("Legendre family: Picard-Fuchs equation and AGM periods") {
  auto fam = legendre();
  auto e = gauss_manin_eigenspace(fam, 1);
  REQUIRE(e.basis.rank() == 2);
  CHECK(e.hodge_sub == std::vector<std::size_t>{0});
  auto r = fam.params;
  std::vector<Rational> start;
  auto ode = cyclic_vector_ode(*e.connection, 0, &start);
  CHECK(start == std::vector<Rational>{1, 0});
  REQUIRE(ode.size() == 2);
  CHECK((ode[1] - R(r, "1-2*l", "l*(1-l)")).is_zero());
  CHECK((ode[0] - R(r, "-1", "4*l*(1-l)")).is_zero());
  // Griffiths transversality: F¹ is not preserved.
  CHECK(!e.connection->matrix(0)(0, 1).is_zero());

  for (int i = 1; i <= 20; ++i) {
    double l = i / 21.0;
    auto per = segment_periods(fam, e.basis, {l});
    REQUIRE(per.size() == 2);
    double expect = M_PI / agm(1, std::sqrt(1 - l));
    CHECK(std::abs(per[0][0] - expect) < 1e-8 * expect);
  }
  CHECK(period_residual(fam, e, 20, 1) < 1e-8);
}

TEST_CASE("period vectors are flat sections") {
  for (const auto& fam : zoo()) {
    if (fam.n_params() == 0) continue;
    CAPTURE(to_json(fam).dump());
    auto gm = gauss_manin(fam);
    for (const auto& e : gm.eigenspaces) {
      if (!e.connection) continue;
      CAPTURE(e.k);
      CHECK(period_residual(fam, e, 10, 11) < 1e-8);
    }
  }
}

TEST_CASE("degenerate characters and parameter-free families") {
  auto fam = make_family(4, {1, 1, 2}, {"0", "1", "t"});
  auto e = gauss_manin_eigenspace(fam, 2);
  CHECK(e.basis.rank() == 0);
  CHECK(!e.connection);

  auto rigid = make_family(2, {1, 1, 1}, {"0", "1", "2"});
  CHECK(rigid.n_params() == 0);
  auto re = gauss_manin_eigenspace(rigid, 1);
  CHECK(re.basis.rank() == 2);
  REQUIRE(re.connection);
  CHECK(re.connection->directions() == 0);

  CHECK(validate_family(nlohmann::json{{"N", 4}, {"exponents", {2, 2, 2, 2}}, {"points", {"0", "1", "2", "t"}}}).size() == 1);
  CHECK(validate_family(nlohmann::json{{"N", 2}, {"exponents", {1, 1, 1}}, {"points", {"0", "1", "t"}}}).empty());
  CHECK(!validate_family(nlohmann::json{{"N", 2}, {"exponents", {1, 1}}, {"points", {"0", "1"}}, {"extra", 1}}).empty());
  CHECK_THROWS_AS(gauss_manin_eigenspace(fam, 4), std::invalid_argument);
}

TEST_CASE("cyclic vector on a direct sum") {
  auto r = make_ring({"x"});
  RFMatrix a = rf_zero(r, 2);
  a(0, 0) = R(r, "1", "x");
  a(1, 1) = R(r, "2", "x");
  ConnectionData c(AffineChart(1, Ideal::zero(r)), 2, {a});
  std::vector<Rational> start;
  auto ode = cyclic_vector_ode(c, 0, &start);
  CHECK(start[0] != 0);
  CHECK(start[1] != 0);
  // Solutions x and x² of the factored operator (∂ − 2/x)(∂ − 1/x) + ...: x²y'' − 2xy' + 2y.
  CHECK((ode[1] - R(r, "-2", "x")).is_zero());
  CHECK((ode[0] - R(r, "2", "x^2")).is_zero());

  RFMatrix z = rf_zero(r, 2);
  CHECK_THROWS_AS(cyclic_vector_ode(ConnectionData(AffineChart(1, Ideal::zero(r)), 2, {z}), 0), SchemaError);
}

TEST_CASE("family JSON round trip") {
  auto fam = deligne_mostow();
  auto back = family_from_json(to_json(fam));
  CHECK(back.N == fam.N);
  CHECK(back.exponents == fam.exponents);
  CHECK(back.params->vars() == fam.params->vars());
  CHECK_THROWS_AS(family_from_json(nlohmann::json{{"N", 2}, {"points", {"0"}}}), SchemaError);
  auto j = to_json(gauss_manin(legendre()));
  CHECK(j["genus"] == 1);
  CHECK(j["total_rank"] == 2);
}
