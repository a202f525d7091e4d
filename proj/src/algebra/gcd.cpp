#include "leafcut/algebra/gcd.hpp"

#include <algorithm>

namespace leafcut {

std::optional<Poly> exact_divide(const Poly& a, const Poly& b) {
  require_same_ring(a.ring(), b.ring(), "exact_divide");
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (a.is_zero()) return a;
  if (auto c = b.constant_value()) return Rational(1 / *c) * a;
  // Long division in the lexicographic storage order: leading term = front().
  const Term& lb = b.terms().front();
  Poly rem = a;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    const Term& lr = rem.terms().front();
    if (!lb.mono.divides(lr.mono)) return std::nullopt;
    Monomial q = lb.mono.quotient_of(lr.mono);
    Rational c = lr.coef / lb.coef;
    rem -= b.mul_term(q, c);
    quot.push_back({std::move(q), std::move(c)});
  }
  return Poly::from_terms(a.ring(), std::move(quot));
}

namespace {

// Coefficients of p as a polynomial in variable v; entries do not involve v.
std::vector<Poly> coefficients_in(const Poly& p, std::size_t v) {
  int d = p.degree_in(v);
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(std::max(d, 0) + 1));
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    int e = m[v];
    m.set(v, 0);
    buckets[static_cast<std::size_t>(e)].push_back({std::move(m), t.coef});
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Poly::from_terms(p.ring(), std::move(b)));
  return out;
}

Poly content_in(const Poly& p, std::size_t v) {
  Poly g(p.ring());
  for (const auto& c : coefficients_in(p, v)) {
    if (c.is_zero()) continue;
    g = poly_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

// Pseudo-remainder of a by b w.r.t. variable v.
Poly pseudo_remainder(Poly a, const Poly& b, std::size_t v) {
  int db = b.degree_in(v);
  std::vector<Poly> bc = coefficients_in(b, v);
  const Poly& lb = bc.back();
  Poly xv = Poly::variable(a.ring(), v);
  while (!a.is_zero() && a.degree_in(v) >= db) {
    int da = a.degree_in(v);
    std::vector<Poly> ac = coefficients_in(a, v);
    Poly la = ac.back();
    Poly shift = xv.pow(static_cast<unsigned>(da - db));
    a = lb * a - la * shift * b;
  }
  return a;
}

Poly primitive_part(const Poly& p, std::size_t v) {
  Poly c = content_in(p, v);
  if (c.is_constant()) return p.monic();
  return exact_divide(p, c)->monic();
}

std::optional<std::size_t> main_variable(const Poly& a, const Poly& b) {
  std::vector<bool> ma = a.support_mask(), mb = b.support_mask();
  for (std::size_t i = a.nvars(); i-- > 0;)
    if (ma[i] || mb[i]) return i;
  return std::nullopt;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  require_same_ring(a.ring(), b.ring(), "poly_gcd");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly::constant(a.ring(), 1);
  if (a == b) return a.monic();
  auto vopt = main_variable(a, b);
  std::size_t v = *vopt;
  if (!a.involves(v)) return poly_gcd(a, content_in(b, v));
  if (!b.involves(v)) return poly_gcd(content_in(a, v), b);

  Poly ca = content_in(a, v), cb = content_in(b, v);
  Poly pa = ca.is_constant() ? a : *exact_divide(a, ca);
  Poly pb = cb.is_constant() ? b : *exact_divide(b, cb);
  Poly gc = poly_gcd(ca, cb);

  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  pa = pa.monic();
  pb = pb.monic();
  for (;;) {
    Poly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      pb = Poly::constant(a.ring(), 1);
      break;
    }
    pa = std::move(pb);
    pb = primitive_part(r, v);
  }
  return (gc * pb).monic();
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.ring());
  Poly g = poly_gcd(a, b);
  return (*exact_divide(a, g) * b).monic();
}

}  // namespace leafcut
