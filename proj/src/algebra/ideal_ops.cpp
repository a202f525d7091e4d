#include "leafcut/algebra/ideal_ops.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <unordered_map>

#include "leafcut/errors.hpp"

namespace leafcut {

std::string fresh_name(const RingPtr& ring, const std::string& stem) {
  if (!ring->index_of(stem)) return stem;
  for (int k = 1;; ++k) {
    std::string name = stem + std::to_string(k);
    if (!ring->index_of(name)) return name;
  }
}

RingPtr subring(const RingPtr& ring, const std::vector<std::string>& keep) {
  std::set<std::string> wanted(keep.begin(), keep.end());
  for (const auto& v : keep) ring->require_index(v);
  std::vector<std::string> vars;
  for (const auto& v : ring->vars())
    if (wanted.count(v)) vars.push_back(v);
  if (vars.size() == ring->size()) return ring;
  return make_ring(std::move(vars));
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& keep) {
  RingPtr kept = subring(ideal.ring(), keep);
  std::set<std::string> wanted(keep.begin(), keep.end());
  std::vector<std::string> order;
  for (const auto& v : ideal.ring()->vars())
    if (!wanted.count(v)) order.push_back(v);
  std::size_t nelim = order.size();
  for (const auto& v : kept->vars()) order.push_back(v);
  if (nelim == 0) return groebner_basis(ideal.in_ring(kept));
  RingPtr work = make_ring(order);
  Ideal g = groebner_basis(ideal.in_ring(work), MonomialOrder::block(nelim));
  std::vector<Poly> out;
  for (const auto& p : g.gens()) {
    bool free = true;
    for (std::size_t i = 0; i < nelim && free; ++i)
      if (p.involves(i)) free = false;
    if (free) out.push_back(p.in_ring(kept));
  }
  return Ideal(kept, std::move(out));
}

Ideal saturate(const Ideal& ideal, const Poly& g) {
  require_same_ring(ideal.ring(), g.ring(), "saturate");
  if (g.is_zero()) throw std::invalid_argument("saturate by zero");
  if (g.is_constant()) return groebner_basis(ideal);
  std::string t = fresh_name(ideal.ring(), "_t");
  std::vector<std::string> vars = ideal.ring()->vars();
  vars.insert(vars.begin(), t);
  RingPtr big = make_ring(vars);
  Ideal lifted = ideal.in_ring(big);
  Poly tp = Poly::variable(big, 0);
  Poly one = Poly::constant(big, 1);
  Ideal rab = ideal_sum(lifted, {one - tp * g.in_ring(big)});
  Ideal e = eliminate(rab, ideal.ring()->vars());
  return e.in_ring(ideal.ring());
}

Ideal saturate(const Ideal& ideal, const std::vector<Poly>& gs) {
  Ideal cur = ideal;
  for (const auto& g : gs) cur = saturate(cur, g);
  return cur;
}

int monomial_ideal_dimension(const std::vector<Monomial>& gens, std::size_t nvars) {
  std::vector<std::uint64_t> supports;
  if (nvars > 64) throw GuardExceeded("ideal_dimension supports at most 64 variables");
  for (const auto& m : gens) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (m[i] > 0) s |= std::uint64_t{1} << i;
    if (s == 0) return -1;
    supports.push_back(s);
  }
  int best = 0;
  // Depth-first search over independent sets S: every support must meet the
  // complement of S.
  std::uint64_t all = nvars == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << nvars) - 1);
  auto independent = [&](std::uint64_t s) {
    for (auto sup : supports)
      if ((sup & ~s & all) == 0) return false;
    return true;
  };
  std::vector<std::pair<std::size_t, std::uint64_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [i, s] = stack.back();
    stack.pop_back();
    int size = std::popcount(s);
    if (size + static_cast<int>(nvars - i) <= best) continue;
    if (i == nvars) {
      best = std::max(best, size);
      continue;
    }
    stack.push_back({i + 1, s});
    std::uint64_t with = s | (std::uint64_t{1} << i);
    if (independent(with)) stack.push_back({i + 1, with});
  }
  return best;
}

std::optional<int> ideal_dimension(const Ideal& ideal) {
  Ideal g = groebner_basis(ideal);
  if (g.has_unit_generator()) return std::nullopt;
  std::vector<Monomial> lms;
  for (const auto& p : g.gens()) lms.push_back(p.leading_term(MonomialOrder::grevlex()).mono);
  return monomial_ideal_dimension(lms, ideal.ring()->size());
}

Ideal closure_of_image(const Ideal& ideal, const std::vector<Poly>& map,
                       const std::vector<std::string>& target_vars) {
  if (map.size() != target_vars.size())
    throw std::invalid_argument("closure_of_image: map/target arity mismatch");
  for (const auto& p : map) require_same_ring(ideal.ring(), p.ring(), "closure_of_image");
  RingPtr target = make_ring(target_vars);
  // Source variables are renamed so that source and target names may overlap.
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < ideal.ring()->size(); ++i) vars.push_back("_src" + std::to_string(i));
  std::vector<std::string> source_names = vars;
  for (const auto& v : target_vars) vars.push_back(v);
  RingPtr big = make_ring(vars);
  RingPtr renamed = make_ring(source_names);
  auto lift = [&](const Poly& p) {
    Poly q = Poly::from_terms(renamed, p.terms());
    return q.in_ring(big);
  };
  std::vector<Poly> gens;
  for (const auto& g : ideal.gens()) gens.push_back(lift(g));
  for (std::size_t j = 0; j < map.size(); ++j)
    gens.push_back(Poly::variable(big, source_names.size() + j) - lift(map[j]));
  Ideal e = eliminate(Ideal(big, std::move(gens)), target_vars);
  return e.in_ring(target);
}

bool in_radical(const Ideal& ideal, const Poly& g) {
  if (g.is_zero()) return true;
  if (auto c = g.constant_value()) return is_unit_ideal(ideal);
  std::string t = fresh_name(ideal.ring(), "_r");
  std::vector<std::string> vars = ideal.ring()->vars();
  vars.insert(vars.begin(), t);
  RingPtr big = make_ring(vars);
  Ideal lifted = ideal.in_ring(big);
  Poly tp = Poly::variable(big, 0);
  return is_unit_ideal(ideal_sum(lifted, {Poly::constant(big, 1) - tp * g.in_ring(big)}));
}

bool variety_contained(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "variety_contained");
  if (is_unit_ideal(a)) return true;
  Ideal ga = groebner_basis(a);
  for (const auto& g : b.gens()) {
    if (normal_form(g, ga).is_zero()) continue;
    if (!in_radical(ga, g)) return false;
  }
  return true;
}

bool varieties_equal(const Ideal& a, const Ideal& b) {
  return variety_contained(a, b) && variety_contained(b, a);
}

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

double binomial(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

}  // namespace

Poly determinant(const Matrix<Poly>& m) {
  std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  RingPtr ring = m(0, 0).ring();
  if (n > 20) throw GuardExceeded("determinant size");
  // det of rows [0, k) restricted to column set `mask` (popcount k).
  std::unordered_map<std::uint32_t, Poly> memo;
  memo.emplace(0u, Poly::constant(ring, 1));
  for (std::size_t k = 1; k <= n; ++k) {
    std::unordered_map<std::uint32_t, Poly> next;
    for (const auto& [mask, det] : memo) {
      if (det.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (mask & (1u << j)) continue;
        const Poly& entry = m(k - 1, j);
        if (entry.is_zero()) continue;
        // Sign from the number of already-used columns to the right of j.
        int above = std::popcount(mask >> (j + 1));
        Poly term = entry * det;
        if (above % 2) term = -term;
        auto key = mask | (1u << j);
        auto it = next.find(key);
        if (it == next.end()) next.emplace(key, std::move(term));
        else it->second += term;
      }
    }
    memo = std::move(next);
    if (memo.empty()) return Poly(ring);
  }
  auto it = memo.find((n == 32 ? 0u : (1u << n)) - 1u);
  return it == memo.end() ? Poly(ring) : it->second;
}

Ideal rank_locus(const Matrix<Poly>& m, std::size_t r, std::size_t minor_limit) {
  if (m.rows() == 0 || m.cols() == 0) throw std::invalid_argument("rank_locus of empty matrix");
  RingPtr ring = m(0, 0).ring();
  std::size_t k = r + 1;
  if (k > std::min(m.rows(), m.cols())) return Ideal::zero(ring);
  double count = binomial(m.rows(), k) * binomial(m.cols(), k);
  if (count > static_cast<double>(minor_limit))
    throw GuardExceeded("rank_locus: " + std::to_string(static_cast<long long>(count)) +
                        " minors exceed the limit of " + std::to_string(minor_limit));
  std::vector<Poly> gens;
  auto rsets = subsets(m.rows(), k);
  auto csets = subsets(m.cols(), k);
  for (const auto& rs : rsets) {
    for (const auto& cs : csets) {
      Matrix<Poly> sub(k, k, Poly(ring));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
      Poly d = determinant(sub);
      if (!d.is_zero()) gens.push_back(d.monic());
    }
  }
  std::sort(gens.begin(), gens.end(),
            [](const Poly& a, const Poly& b) { return a.to_string() < b.to_string(); });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return Ideal(ring, std::move(gens));
}

}  // namespace leafcut
