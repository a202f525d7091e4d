#include "leafcut/connection/connection.hpp"

#include "leafcut/algebra/gcd.hpp"
#include "leafcut/algebra/ideal_ops.hpp"
#include "leafcut/algebra/parse.hpp"
#include "leafcut/errors.hpp"
#include "leafcut/json_schema.hpp"

namespace leafcut {

RFMatrix rf_zero(const RingPtr& ring, std::size_t n) { return RFMatrix(n, n, RationalFunction(ring)); }

RFMatrix rf_identity(const RingPtr& ring, std::size_t n) {
  RFMatrix m = rf_zero(ring, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RationalFunction::constant(ring, 1);
  return m;
}

RFMatrix kronecker(const RFMatrix& a, const RFMatrix& b) {
  RFMatrix out(a.rows() * b.rows(), a.cols() * b.cols(), a(0, 0) - a(0, 0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

RFMatrix rf_scale(const RationalFunction& c, const RFMatrix& m) {
  RFMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = c * m(i, j);
  return out;
}

ConnectionData::ConnectionData(AffineChart base, std::size_t rank, std::vector<RFMatrix> matrices)
    : base_(std::move(base)),
      rank_(rank),
      matrices_(std::move(matrices)),
      singular_(Poly::constant(base_.ideal.ring(), 1)),
      regular_(base_.ideal.ring()) {
  if (rank_ == 0) throw SchemaError("connection rank must be positive");
  if (matrices_.size() != base_.ambient_dim)
    throw SchemaError("connection needs one matrix per base variable");
  for (const auto& m : matrices_) {
    if (m.rows() != rank_ || m.cols() != rank_) throw SchemaError("connection matrix is not rank x rank");
    for (const auto& e : m.data()) {
      require_same_ring(e.ring(), ring(), "ConnectionData");
      singular_ = poly_lcm(singular_, e.den());
    }
  }
  singular_ = singular_.monic();
  regular_ = singular_.is_constant() ? groebner_basis(base_.ideal) : saturate(base_.ideal, singular_);
}

bool ConnectionData::vanishes(const RationalFunction& f) const {
  if (f.is_zero()) return true;
  if (regular_.empty()) return false;
  return normal_form(f.num(), regular_).is_zero();
}

Curvature curvature(const ConnectionData& c) {
  Curvature out;
  const std::size_t m = c.directions(), r = c.rank();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const RFMatrix& ai = c.matrix(i);
      const RFMatrix& aj = c.matrix(j);
      RFMatrix f = ai * aj - aj * ai;
      for (std::size_t p = 0; p < r; ++p)
        for (std::size_t q = 0; q < r; ++q) {
          f(p, q) = aj(p, q).derivative(i) - ai(p, q).derivative(j) - f(p, q);
          if (!c.vanishes(f(p, q))) {
            out.nonzero.push_back({i, j, p, q, f(p, q)});
            out.is_flat = false;
          }
        }
      out.components.push_back({{i, j}, std::move(f)});
    }
  }
  return out;
}

ConnectionData tensor_connection(const ConnectionData& c, std::size_t a, std::size_t b) {
  if (a + b == 0) throw std::invalid_argument("tensor_connection: a + b must be positive");
  const std::size_t r = c.rank(), k = a + b;
  std::size_t dim = 1;
  for (std::size_t t = 0; t < k; ++t) dim *= r;
  RFMatrix id = rf_identity(c.ring(), r);
  std::vector<RFMatrix> out;
  for (std::size_t i = 0; i < c.directions(); ++i) {
    RFMatrix dual = rf_scale(RationalFunction::constant(c.ring(), -1), transpose(c.matrix(i)));
    RFMatrix total = rf_zero(c.ring(), dim);
    for (std::size_t slot = 0; slot < k; ++slot) {
      RFMatrix term = slot == 0 ? (a > 0 ? c.matrix(i) : dual) : id;
      for (std::size_t t = 1; t < k; ++t) {
        const RFMatrix& factor = t == slot ? (t < a ? c.matrix(i) : dual) : id;
        term = kronecker(term, factor);
      }
      total = total + term;
    }
    out.push_back(std::move(total));
  }
  return ConnectionData(c.base(), dim, std::move(out));
}

bool flat_section_check(const ConnectionData& c, const std::vector<RationalFunction>& sigma) {
  if (sigma.size() != c.rank()) throw std::invalid_argument("flat_section_check: length != rank");
  for (std::size_t i = 0; i < c.directions(); ++i) {
    for (std::size_t p = 0; p < c.rank(); ++p) {
      RationalFunction lhs = sigma[p].derivative(i);
      for (std::size_t q = 0; q < c.rank(); ++q) lhs -= c.matrix(i)(p, q) * sigma[q];
      if (!c.vanishes(lhs)) return false;
    }
  }
  return true;
}

std::vector<RationalFunction> tensor_product(const std::vector<RationalFunction>& a,
                                             const std::vector<RationalFunction>& b) {
  std::vector<RationalFunction> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

nlohmann::json entry_to_json(const RationalFunction& e) { return {e.num().to_string(), e.den().to_string()}; }

nlohmann::json to_json(const ConnectionData& c) {
  nlohmann::json mats = nlohmann::json::array();
  for (const auto& m : c.matrices()) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : m.data()) entries.push_back(entry_to_json(e));
    mats.push_back(std::move(entries));
  }
  return {{"rank", c.rank()},
          {"base", {{"vars", c.ring()->vars()}, {"ideal", c.base().ideal.serialize()}}},
          {"matrices", std::move(mats)}};
}

RationalFunction entry_from_json(const nlohmann::json& e, const RingPtr& ring) {
  if (e.is_string()) return RationalFunction(parse_poly(e.get<std::string>(), ring));
  if (e.is_array() && e.size() == 2 && e[0].is_string() && e[1].is_string()) {
    Poly den = parse_poly(e[1].get<std::string>(), ring);
    if (den.is_zero()) throw SchemaError("connection entry has zero denominator");
    return RationalFunction(parse_poly(e[0].get<std::string>(), ring), den);
  }
  throw SchemaError("connection entry must be \"poly\" or [\"num\", \"den\"]");
}

ConnectionData connection_from_json(const nlohmann::json& j) {
  check_keys(j, {"rank", "base", "matrices"}, {}, "connection");
  const auto& base = j.at("base");
  check_keys(base, {"vars"}, {"ideal"}, "connection.base");
  RingPtr ring = make_ring(base.at("vars").get<std::vector<std::string>>());
  std::vector<std::string> gens;
  if (base.contains("ideal")) gens = base.at("ideal").get<std::vector<std::string>>();
  AffineChart chart(ring->size(), Ideal(ring, parse_polys(gens, ring)));
  auto rank = j.at("rank").get<std::size_t>();
  std::vector<RFMatrix> mats;
  for (const auto& mj : j.at("matrices")) {
    if (!mj.is_array() || mj.size() != rank * rank)
      throw SchemaError("connection matrix must list rank*rank entries");
    RFMatrix m = rf_zero(ring, rank);
    for (std::size_t k = 0; k < rank * rank; ++k) m(k / rank, k % rank) = entry_from_json(mj[k], ring);
    mats.push_back(std::move(m));
  }
  return ConnectionData(std::move(chart), rank, std::move(mats));
}

}  // namespace leafcut
