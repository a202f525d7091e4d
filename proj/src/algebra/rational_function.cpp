#include "leafcut/algebra/rational_function.hpp"

#include <stdexcept>

#include "leafcut/algebra/gcd.hpp"

namespace leafcut {

RationalFunction::RationalFunction(RingPtr ring)
    : num_(ring), den_(Poly::constant(ring, 1)) {}

RationalFunction::RationalFunction(Poly num)
    : num_(std::move(num)), den_(Poly::constant(num_.ring(), 1)) {}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  require_same_ring(num_.ring(), den_.ring(), "RationalFunction");
  if (den_.is_zero()) throw std::invalid_argument("RationalFunction with zero denominator");
  reduce();
}

RationalFunction RationalFunction::constant(RingPtr ring, const Rational& c) {
  return RationalFunction(Poly::constant(std::move(ring), c));
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.ring(), 1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *exact_divide(num_, g);
      den_ = *exact_divide(den_, g);
    }
  }
  Rational lc = den_.leading_coefficient(MonomialOrder::grevlex());
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r(*this);
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::coprime(Poly num, Poly den) {
  RationalFunction r(num.ring());
  r.num_ = std::move(num);
  if (r.num_.is_zero()) return r;
  r.den_ = std::move(den);
  Rational lc = r.den_.leading_coefficient(MonomialOrder::grevlex());
  if (lc != 1) {
    Rational inv = 1 / lc;
    r.num_ = inv * r.num_;
    r.den_ = inv * r.den_;
  }
  return r;
}

namespace {

// (a / g, b / g) for g = gcd(a, b).
std::pair<Poly, Poly> cancel(const Poly& a, const Poly& b) {
  if (a.is_constant() || b.is_constant()) return {a, b};
  Poly g = poly_gcd(a, b);
  if (g.is_constant()) return {a, b};
  return {*exact_divide(a, g), *exact_divide(b, g)};
}

}  // namespace

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ + b.num_);
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  // With g = gcd(da, db), any common factor of the sum and the lcm divides g.
  Poly g = poly_gcd(a.den_, b.den_);
  Poly da = *exact_divide(a.den_, g), db = *exact_divide(b.den_, g);
  Poly num = a.num_ * db + b.num_ * da;
  if (num.is_zero()) return RationalFunction(a.ring());
  Poly den = da * b.den_;
  if (g.is_constant()) return RationalFunction::coprime(std::move(num), std::move(den));
  auto [n2, g2] = cancel(num, g);
  if (g2 == g) return RationalFunction::coprime(std::move(num), std::move(den));
  return RationalFunction::coprime(std::move(n2), *exact_divide(den, *exact_divide(g, g2)));
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction(a.ring());
  if (a.is_polynomial() && b.is_polynomial()) {
    RationalFunction r(a.ring());
    r.num_ = a.num_ * b.num_;  // denominators are both 1
    return r;
  }
  auto [na, db] = cancel(a.num_, b.den_);
  auto [nb, da] = cancel(b.num_, a.den_);
  return RationalFunction::coprime(na * nb, da * db);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("RationalFunction division by zero");
  return a * RationalFunction::coprime(b.den_, b.num_);
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
  if (is_polynomial()) return RationalFunction(num_.derivative(var), den_);
  return RationalFunction(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
  Rational d = den_.evaluate(point);
  if (d == 0) throw std::domain_error("RationalFunction: denominator vanishes");
  return num_.evaluate(point) / d;
}

RationalFunction RationalFunction::in_ring(const RingPtr& target) const {
  return RationalFunction(num_.in_ring(target), den_.in_ring(target));
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace leafcut
