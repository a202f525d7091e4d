#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leafcut/algebra/monomial.hpp"
#include "leafcut/algebra/order.hpp"
#include "leafcut/algebra/ring.hpp"

namespace leafcut {

struct Term {
  Monomial mono;
  Rational coef;
};

/// Sparse multivariate polynomial over Q. Terms are kept sorted descending in
/// the lexicographic storage order with no zero coefficients, so structural
/// equality is polynomial equality.
class Poly {
 public:
  explicit Poly(RingPtr ring);

  static Poly constant(RingPtr ring, const Rational& c);
  static Poly variable(RingPtr ring, std::size_t index);
  static Poly variable(RingPtr ring, const std::string& name);
  static Poly monomial(RingPtr ring, Monomial m, const Rational& c = 1);
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  std::size_t nvars() const { return ring_->size(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial (zero included), nullopt otherwise.
  std::optional<Rational> constant_value() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }
  std::vector<bool> support_mask() const;

  /// Requires !is_zero().
  const Term& leading_term(const MonomialOrder& ord) const;
  const Rational& leading_coefficient(const MonomialOrder& ord) const {
    return leading_term(ord).coef;
  }
  /// Leading coefficient 1 w.r.t. `ord`; zero stays zero.
  Poly monic(const MonomialOrder& ord = MonomialOrder::grevlex()) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& a);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  Poly mul_term(const Monomial& m, const Rational& c) const;
  Poly pow(unsigned k) const;
  Poly derivative(std::size_t var) const;

  Rational evaluate(std::span<const Rational> point) const;
  /// Substitutes values for the variables with an engaged optional.
  Poly evaluate_partial(std::span<const std::optional<Rational>> values) const;
  Poly substitute(std::size_t var, const Poly& value) const;
  /// Re-expresses the polynomial over `target`, matching variables by name.
  /// Throws RingMismatch if a used variable is missing from `target`.
  Poly in_ring(const RingPtr& target) const;

  /// Groups terms by their exponents on the variables selected in `mask`.
  /// Keys have zero exponents outside the mask; values have zero exponents
  /// inside it.
  std::map<Monomial, Poly> split_by(const std::vector<bool>& mask) const;

  /// Canonical text: terms in descending `ord`, "num/den*x^a*y^b", joined by
  /// " + "; the zero polynomial is "0".
  std::string to_string(const MonomialOrder& ord = MonomialOrder::grevlex()) const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void normalize();
  RingPtr ring_;
  std::vector<Term> terms_;
};

}  // namespace leafcut
