#pragma once

#include <span>
#include <string>

#include "leafcut/algebra/poly.hpp"

namespace leafcut {

/// num/den over Q, gcd-reduced, denominator monic in grevlex.
class RationalFunction {
 public:
  explicit RationalFunction(RingPtr ring);
  RationalFunction(Poly num);  // NOLINT: polynomials embed implicitly
  RationalFunction(Poly num, Poly den);

  static RationalFunction constant(RingPtr ring, const Rational& c);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const RingPtr& ring() const { return num_.ring(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }

  RationalFunction derivative(std::size_t var) const;
  /// Throws std::domain_error when the denominator vanishes at the point.
  Rational evaluate(std::span<const Rational> point) const;
  RationalFunction in_ring(const RingPtr& target) const;

  /// "(num)/(den)" or "num" for polynomials; canonical given the reduction.
  std::string to_string() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void reduce();
  // num/den already coprime; only normalizes the denominator.
  static RationalFunction coprime(Poly num, Poly den);
  Poly num_, den_;
};

}  // namespace leafcut
