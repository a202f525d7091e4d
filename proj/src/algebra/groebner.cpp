#include "leafcut/algebra/groebner.hpp"
#include "leafcut/algebra/ideal_ops.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace leafcut {

namespace {

// Polynomial with terms sorted descending in the working order.
struct WorkPoly {
  std::vector<Term> terms;
  int sugar = 0;

  bool zero() const { return terms.empty(); }
  const Monomial& lm() const { return terms.front().mono; }
  const Rational& lc() const { return terms.front().coef; }
};

class Engine {
 public:
  Engine(const RingPtr& ring, const MonomialOrder& ord) : ring_(ring), ord_(ord) {}

  WorkPoly load(const Poly& p) const {
    WorkPoly w;
    w.terms = p.terms();
    std::sort(w.terms.begin(), w.terms.end(),
              [&](const Term& a, const Term& b) { return ord_.compare(a.mono, b.mono) > 0; });
    w.sugar = p.total_degree();
    return w;
  }

  Poly unload(const WorkPoly& w) const { return Poly::from_terms(ring_, w.terms); }

  void make_monic(WorkPoly& w) const {
    if (w.zero() || w.lc() == 1) return;
    Rational inv = 1 / w.lc();
    for (auto& t : w.terms) t.coef *= inv;
  }

  // a - c * m * b, all sorted descending in ord_.
  std::vector<Term> sub_mul(const std::vector<Term>& a, const Rational& c, const Monomial& m,
                            const std::vector<Term>& b, std::size_t b_from = 0) const {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = b_from;
    while (i < a.size() || j < b.size()) {
      if (j == b.size()) {
        out.push_back(a[i++]);
        continue;
      }
      Monomial bm = b[j].mono * m;
      int cmp = i == a.size() ? -1 : ord_.compare(a[i].mono, bm);
      if (cmp > 0) {
        out.push_back(a[i++]);
      } else if (cmp < 0) {
        out.push_back({std::move(bm), -c * b[j].coef});
        ++j;
      } else {
        Rational v = a[i].coef - c * b[j].coef;
        if (v != 0) out.push_back({a[i].mono, std::move(v)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  // Full reduction of p by the polynomials in `basis` (indices into polys_).
  WorkPoly reduce(WorkPoly p, const std::vector<std::size_t>& basis) const {
    WorkPoly rem;
    rem.sugar = p.sugar;
    while (!p.zero()) {
      const Term& lt = p.terms.front();
      const WorkPoly* div = nullptr;
      for (std::size_t idx : basis) {
        if (polys_[idx].lm().divides(lt.mono)) {
          div = &polys_[idx];
          break;
        }
      }
      if (!div) {
        rem.terms.push_back(lt);
        p.terms.erase(p.terms.begin());
        continue;
      }
      Monomial q = div->lm().quotient_of(lt.mono);
      Rational c = lt.coef / div->lc();
      p.sugar = std::max(p.sugar, div->sugar + q.degree());
      rem.sugar = std::max(rem.sugar, p.sugar);
      // Leading terms cancel exactly; skip them.
      std::vector<Term> tail(p.terms.begin() + 1, p.terms.end());
      p.terms = sub_mul(tail, c, q, div->terms, 1);
    }
    return rem;
  }

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int sugar;
  };

  Pair make_pair(std::size_t i, std::size_t j) const {
    Monomial l = lcm(polys_[i].lm(), polys_[j].lm());
    int si = polys_[i].sugar + (l.degree() - polys_[i].lm().degree());
    int sj = polys_[j].sugar + (l.degree() - polys_[j].lm().degree());
    return Pair{std::min(i, j), std::max(i, j), l, std::max(si, sj)};
  }

  // Gebauer–Möller update installing polys_[h].
  void update(std::size_t h) {
    const Monomial& lh = polys_[h].lm();
    std::vector<Pair> c;
    for (std::size_t g : basis_) c.push_back(make_pair(h, g));
    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      std::size_t g1 = c[k].i == h ? c[k].j : c[k].i;
      bool keep = coprime(lh, polys_[g1].lm());
      if (!keep) {
        keep = true;
        for (std::size_t q = k + 1; q < c.size() && keep; ++q)
          if (c[q].lcm.divides(c[k].lcm)) keep = false;
        for (const auto& p : d)
          if (keep && p.lcm.divides(c[k].lcm)) keep = false;
      }
      if (keep) d.push_back(c[k]);
    }
    std::vector<Pair> kept;
    for (auto& p : pairs_) {
      const Monomial& l1 = lcm(polys_[p.i].lm(), lh);
      const Monomial& l2 = lcm(polys_[p.j].lm(), lh);
      bool drop = lh.divides(p.lcm) && !(l1 == p.lcm) && !(l2 == p.lcm);
      if (!drop) kept.push_back(std::move(p));
    }
    for (auto& p : d) {
      std::size_t g = p.i == h ? p.j : p.i;
      if (!coprime(lh, polys_[g].lm())) kept.push_back(std::move(p));
    }
    pairs_ = std::move(kept);
    std::vector<std::size_t> nb;
    for (std::size_t g : basis_)
      if (!lh.divides(polys_[g].lm())) nb.push_back(g);
    nb.push_back(h);
    basis_ = std::move(nb);
  }

  // Reduce the tails of the other basis elements by the newest element h.
  // Leading monomials are unchanged, so pending pairs stay valid.
  void tail_reduce_by(std::size_t h) {
    const Monomial& lh = polys_[h].lm();
    std::vector<std::size_t> only{h};
    for (std::size_t g : basis_) {
      if (g == h) continue;
      WorkPoly& w = polys_[g];
      bool hit = false;
      for (std::size_t k = 1; k < w.terms.size() && !hit; ++k) hit = lh.divides(w.terms[k].mono);
      if (!hit) continue;
      WorkPoly tail;
      tail.terms.assign(w.terms.begin() + 1, w.terms.end());
      tail.sugar = w.sugar;
      WorkPoly r = reduce(std::move(tail), only);
      w.sugar = std::max(w.sugar, r.sugar);
      w.terms.resize(1);
      w.terms.insert(w.terms.end(), r.terms.begin(), r.terms.end());
    }
  }

  std::size_t select_pair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      int c = ord_.compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::tie(a.i, a.j) < std::tie(b.i, b.j))) best = k;
    }
    return best;
  }

  WorkPoly spoly(const Pair& p) const {
    const WorkPoly& f = polys_[p.i];
    const WorkPoly& g = polys_[p.j];
    Monomial mf = f.lm().quotient_of(p.lcm);
    Monomial mg = g.lm().quotient_of(p.lcm);
    // f, g monic: s = mf*f - mg*g
    std::vector<Term> fm;
    fm.reserve(f.terms.size());
    for (std::size_t k = 1; k < f.terms.size(); ++k)
      fm.push_back({f.terms[k].mono * mf, f.terms[k].coef});
    WorkPoly s;
    s.terms = sub_mul(fm, Rational(1), mg, g.terms, 1);
    s.sugar = p.sugar;
    return s;
  }

  Ideal run(const Ideal& input) {
    std::vector<WorkPoly> start;
    for (const auto& g : input.gens()) {
      WorkPoly w = load(g);
      make_monic(w);
      start.push_back(std::move(w));
    }
    // Lowest leading monomials first keeps intermediate bases small.
    std::stable_sort(start.begin(), start.end(), [&](const WorkPoly& a, const WorkPoly& b) {
      return ord_.compare(a.lm(), b.lm()) < 0;
    });
    for (auto& w : start) {
      WorkPoly r = reduce(std::move(w), basis_);
      if (r.zero()) continue;
      if (r.lm().is_one()) return Ideal::unit(ring_);
      make_monic(r);
      polys_.push_back(std::move(r));
      update(polys_.size() - 1);
    }
    while (!pairs_.empty()) {
      std::size_t k = select_pair();
      Pair p = pairs_[k];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(k));
      WorkPoly r = reduce(spoly(p), basis_);
      if (r.zero()) continue;
      if (r.lm().is_one()) return Ideal::unit(ring_);
      make_monic(r);
      polys_.push_back(std::move(r));
      update(polys_.size() - 1);
      tail_reduce_by(polys_.size() - 1);
    }
    return finish();
  }

  Ideal finish() {
    // basis_ is already minimal (no leading monomial divides another).
    std::vector<std::size_t> b = basis_;
    std::sort(b.begin(), b.end(), [&](std::size_t x, std::size_t y) {
      return ord_.compare(polys_[x].lm(), polys_[y].lm()) < 0;
    });
    std::vector<Poly> out;
    for (std::size_t k = 0; k < b.size(); ++k) {
      std::vector<std::size_t> others;
      for (std::size_t q = 0; q < b.size(); ++q)
        if (q != k) others.push_back(b[q]);
      WorkPoly w = polys_[b[k]];
      WorkPoly head;
      head.terms.push_back(w.terms.front());
      w.terms.erase(w.terms.begin());
      WorkPoly tail = reduce(std::move(w), others);
      head.terms.insert(head.terms.end(), tail.terms.begin(), tail.terms.end());
      make_monic(head);
      out.push_back(unload(head));
    }
    return Ideal(ring_, std::move(out));
  }

  void set_divisors(const Ideal& basis) {
    polys_.clear();
    basis_.clear();
    for (const auto& g : basis.gens()) {
      polys_.push_back(load(g));
      basis_.push_back(polys_.size() - 1);
    }
  }

  // Minimal, tail-reduced form of a set that is already a Gröbner basis.
  Ideal interreduce(const Ideal& basis) {
    polys_.clear();
    basis_.clear();
    for (const auto& g : basis.gens()) {
      WorkPoly w = load(g);
      make_monic(w);
      polys_.push_back(std::move(w));
    }
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < polys_.size() && !redundant; ++j) {
        if (i == j || !polys_[j].lm().divides(polys_[i].lm())) continue;
        redundant = !(polys_[j].lm() == polys_[i].lm()) || j < i;
      }
      if (!redundant) basis_.push_back(i);
    }
    return finish();
  }

  // Remainder modulo the divisors installed by set_divisors.
  Poly remainder(const Poly& p) const { return unload(reduce(load(p), basis_)); }

 private:
  RingPtr ring_;
  MonomialOrder ord_;
  std::vector<WorkPoly> polys_;
  std::vector<std::size_t> basis_;
  std::vector<Pair> pairs_;
};


bool is_zero_dimensional_basis(const Ideal& g) {
  std::vector<bool> pure(g.ring()->size(), false);
  for (const auto& p : g.gens()) {
    const Monomial& m = p.leading_term(MonomialOrder::grevlex()).mono;
    std::size_t hits = 0, var = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) ++hits, var = i;
    if (hits == 1) pure[var] = true;
  }
  return std::all_of(pure.begin(), pure.end(), [](bool b) { return b; });
}

// FGLM change of order for a reduced grevlex basis of a zero-dimensional ideal.
Ideal fglm(const Ideal& g, const MonomialOrder& ord) {
  const RingPtr& ring = g.ring();
  const std::size_t n = ring->size();
  Engine nf(ring, MonomialOrder::grevlex());
  nf.set_divisors(g);

  struct Row {
    std::map<Monomial, Rational> vec;
    std::vector<Rational> combo;
    Monomial pivot;
  };
  std::vector<Monomial> stair;
  std::vector<Poly> stair_nf;
  std::vector<Row> rows;
  std::vector<Monomial> leads;
  std::vector<Poly> out;

  auto cmp = [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) < 0; };
  std::map<Monomial, std::pair<std::size_t, std::size_t>, decltype(cmp)> todo(cmp);
  auto push_successors = [&](std::size_t idx) {
    for (std::size_t v = 0; v < n; ++v) {
      Monomial w = stair[idx] * Monomial::variable(n, v);
      todo.emplace(std::move(w), std::make_pair(idx, v));
    }
  };

  stair.push_back(Monomial(n));
  stair_nf.push_back(nf.remainder(Poly::constant(ring, 1)));
  {
    Row r;
    for (const auto& t : stair_nf[0].terms()) r.vec[t.mono] = t.coef;
    r.combo = {Rational(1)};
    r.pivot = r.vec.begin()->first;
    rows.push_back(std::move(r));
  }
  push_successors(0);

  while (!todo.empty()) {
    auto it = todo.begin();
    Monomial w = it->first;
    auto [parent, var] = it->second;
    todo.erase(it);
    bool reducible = false;
    for (const auto& l : leads)
      if (l.divides(w)) reducible = true;
    if (reducible) continue;

    Poly w_nf = nf.remainder(stair_nf[parent] * Poly::variable(ring, var));
    std::map<Monomial, Rational> vec;
    for (const auto& t : w_nf.terms()) vec[t.mono] = t.coef;
    std::vector<Rational> combo(stair.size(), Rational(0));
    for (const auto& r : rows) {
      auto hit = vec.find(r.pivot);
      if (hit == vec.end()) continue;
      Rational f = hit->second / r.vec.at(r.pivot);
      for (const auto& [m, c] : r.vec) {
        Rational& slot = vec[m];
        slot -= f * c;
        if (slot == 0) vec.erase(m);
      }
      for (std::size_t j = 0; j < r.combo.size(); ++j) combo[j] -= f * r.combo[j];
    }
    if (vec.empty()) {
      // w + sum combo_j stair_j lies in the ideal.
      std::vector<Term> terms{{w, Rational(1)}};
      for (std::size_t j = 0; j < stair.size(); ++j)
        if (combo[j] != 0) terms.push_back({stair[j], combo[j]});
      out.push_back(Poly::from_terms(ring, std::move(terms)));
      leads.push_back(std::move(w));
      continue;
    }
    stair.push_back(w);
    stair_nf.push_back(std::move(w_nf));
    for (auto& r : rows) r.combo.resize(stair.size(), Rational(0));
    combo.push_back(Rational(1));
    Row r;
    r.vec = std::move(vec);
    r.combo = std::move(combo);
    r.pivot = r.vec.begin()->first;
    rows.push_back(std::move(r));
    push_successors(stair.size() - 1);
  }
  std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
    return ord.compare(a.leading_term(ord).mono, b.leading_term(ord).mono) < 0;
  });
  return Ideal(ring, std::move(out));
}

// The homogenization of a grevlex basis generates the homogenized ideal. With
// the homogenizing variable last, lex and block orders dehomogenize to a
// Gröbner basis for the same order; homogeneous input keeps Buchberger
// degree-by-degree, which tames coefficient growth.
Ideal homogenized_basis(const Ideal& g, const MonomialOrder& ord) {
  const RingPtr& ring = g.ring();
  std::vector<std::string> vars = ring->vars();
  vars.push_back(fresh_name(ring, "_h"));
  RingPtr hring = make_ring(vars);
  std::vector<Poly> hom;
  for (const auto& p : g.gens()) {
    int d = p.total_degree();
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
      std::vector<int> e = t.mono.exponents();
      e.push_back(d - t.mono.degree());
      ts.push_back({Monomial(std::move(e)), t.coef});
    }
    hom.push_back(Poly::from_terms(hring, std::move(ts)));
  }
  Engine eh(hring, ord);
  Ideal gh = eh.run(Ideal(hring, std::move(hom)));
  std::vector<Poly> back;
  for (const auto& p : gh.gens()) {
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
      std::vector<int> e = t.mono.exponents();
      e.pop_back();
      ts.push_back({Monomial(std::move(e)), t.coef});
    }
    back.push_back(Poly::from_terms(ring, std::move(ts)));
  }
  Engine e(ring, ord);
  return e.interreduce(Ideal(ring, std::move(back)));
}

}  // namespace

Ideal groebner_basis(const Ideal& ideal, const MonomialOrder& ord) {
  if (ideal.empty()) return ideal;
  if (ord.kind() == MonomialOrder::Kind::grevlex) {
    Engine e(ideal.ring(), ord);
    return e.run(ideal);
  }
  // Non-graded orders go through grevlex first: FGLM when the ideal is
  // zero-dimensional, otherwise Buchberger on the homogenized grevlex basis.
  Ideal g = groebner_basis(ideal);
  if (g.has_unit_generator()) return g;
  if (is_zero_dimensional_basis(g)) return fglm(g, ord);
  return homogenized_basis(g, ord);
}

Poly normal_form(const Poly& p, const Ideal& basis, const MonomialOrder& ord) {
  require_same_ring(p.ring(), basis.ring(), "normal_form");
  if (basis.empty() || p.is_zero()) return p;
  Engine e(basis.ring(), ord);
  e.set_divisors(basis);
  return e.remainder(p);
}

bool is_unit_ideal(const Ideal& ideal) {
  if (ideal.has_unit_generator()) return true;
  Ideal g = groebner_basis(ideal);
  return g.has_unit_generator();
}

bool ideal_contains(const Ideal& ideal, const Poly& p) {
  if (p.is_zero()) return true;
  return normal_form(p, groebner_basis(ideal)).is_zero();
}

bool ideal_contains(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal_contains");
  if (b.empty()) return true;
  Ideal g = groebner_basis(a);
  for (const auto& p : b.gens())
    if (!normal_form(p, g).is_zero()) return false;
  return true;
}

bool ideals_equal(const Ideal& a, const Ideal& b) {
  return groebner_basis(a).serialize() == groebner_basis(b).serialize();
}

}  // namespace leafcut
