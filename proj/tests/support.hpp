#pragma once

#include <random>
#include <string>
#include <vector>

#include "leafcut/algebra/groebner.hpp"
#include "leafcut/algebra/parse.hpp"

namespace leafcut::testing {

inline Poly P(const RingPtr& r, const std::string& s) { return parse_poly(s, r); }

inline Ideal I(const RingPtr& r, const std::vector<std::string>& gens) {
  return Ideal(r, parse_polys(gens, r));
}

inline std::vector<std::string> ser(const Ideal& i) { return i.serialize(); }

/// Small random rationals p/q with |p| ≤ span, 1 ≤ q ≤ den.
class RationalSampler {
 public:
  explicit RationalSampler(unsigned seed, int span = 9, int den = 4)
      : rng_(seed), num_(-span, span), den_(1, den) {}

  Rational operator()() {
    Rational r(num_(rng_), den_(rng_));
    r.canonicalize();
    return r;
  }

  std::vector<Rational> point(std::size_t n) {
    std::vector<Rational> p(n);
    for (auto& x : p) x = (*this)();
    return p;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
  std::uniform_int_distribution<int> num_, den_;
};

/// Random polynomial with up to `terms` terms of total degree ≤ maxdeg.
inline Poly random_poly(const RingPtr& ring, std::mt19937& rng, int maxdeg, int terms) {
  std::uniform_int_distribution<int> coef(-5, 5), deg(0, maxdeg), var(0, static_cast<int>(ring->size()) - 1);
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) {
    Monomial m(ring->size());
    int d = deg(rng);
    for (int j = 0; j < d; ++j) {
      auto v = static_cast<std::size_t>(var(rng));
      m.set(v, m[v] + 1);
    }
    ts.push_back({m, Rational(coef(rng))});
  }
  return Poly::from_terms(ring, std::move(ts));
}

}  // namespace leafcut::testing
