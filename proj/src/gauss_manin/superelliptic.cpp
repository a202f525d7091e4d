#include "leafcut/gauss_manin/superelliptic.hpp"

#include <numeric>
#include <regex>
#include <set>

#include "leafcut/algebra/parse.hpp"
#include "leafcut/errors.hpp"
#include "leafcut/json_schema.hpp"
#include "leafcut/parallel.hpp"

namespace leafcut {

namespace {

using RF = RationalFunction;
// Polynomial in u with coefficients in Q(params); index d holds u^d.
using UPoly = std::vector<RF>;

void trim(UPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int deg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

void add_to(UPoly& a, const UPoly& b, const RF& c) {
  if (c.is_zero()) return;
  if (a.size() < b.size()) a.resize(b.size(), RF(c.ring()));
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!b[i].is_zero()) a[i] += c * b[i];
  trim(a);
}

UPoly times_linear(const UPoly& a, const RF& p) {  // a · (u − p)
  UPoly out(a.size() + 1, RF(p.ring()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i + 1] += a[i];
    out[i] -= p * a[i];
  }
  trim(out);
  return out;
}

// a = q · (u − p) + r.
std::pair<UPoly, RF> divide_linear(const UPoly& a, const RF& p) {
  if (a.empty()) return {{}, RF(p.ring())};
  UPoly q(a.size() - 1, RF(p.ring()));
  RF carry(p.ring());
  for (std::size_t i = a.size(); i-- > 0;) {
    RF c = a[i] + carry * p;
    if (i == 0) {
      trim(q);
      return {q, c};
    }
    q[i - 1] = c;
    carry = c;
  }
  return {q, RF(p.ring())};
}

RF evaluate(const UPoly& a, const RF& p) {
  RF acc(p.ring());
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * p + a[i];
  return acc;
}

UPoly u_derivative(const UPoly& a) {
  UPoly out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(RF::constant(a[i].ring(), static_cast<long>(i)) * a[i]);
  trim(out);
  return out;
}

UPoly monomial(const RingPtr& r, int j, const RF& c) {
  UPoly out(static_cast<std::size_t>(j) + 1, RF(r));
  out.back() = c;
  trim(out);
  return out;
}

// Binomial series coefficient C(μ + n − 1, n).
Rational rising(const Rational& mu, int n) {
  Rational c = 1;
  for (int t = 0; t < n; ++t) c = c * (mu + t) / (t + 1);
  return c;
}

Rational frac_part(long num, long den) {
  Rational r(((num % den) + den) % den, den);
  r.canonicalize();
  return r;
}

struct Character {
  int k = 0;
  std::vector<std::size_t> branched;  // indices of finite branch points
  std::vector<Rational> mu;
  std::vector<RF> pts;
  Rational sigma = 0;
  bool inf_branched = false;
  std::size_t s() const { return branched.size(); }
  // Forms are vectors over u^0..u^{s−2}.
  std::size_t full_dim() const { return s() >= 1 ? s() - 1 : 0; }
  long sigma_int() const { return sigma.get_num().get_si() / sigma.get_den().get_si(); }
};

Character character(const SuperellipticFamily& fam, int k) {
  if (k < 1 || k >= fam.N) throw std::invalid_argument("character must lie in [1, N-1]");
  Character ch;
  ch.k = k;
  for (std::size_t i = 0; i < fam.points.size(); ++i) {
    Rational m = frac_part(static_cast<long>(k) * fam.exponents[i], fam.N);
    if (m == 0) continue;
    ch.branched.push_back(i);
    ch.mu.push_back(m);
    ch.pts.push_back(RF(fam.points[i]));
    ch.sigma += m;
  }
  ch.inf_branched = ch.sigma.get_den() != 1;
  return ch;
}

// Coefficients c_n of ∏ (1 − p_i z)^{−μ_i} for n ≤ top.
std::vector<RF> infinity_series(const Character& ch, const RingPtr& r, int top) {
  std::vector<RF> c(static_cast<std::size_t>(top) + 1, RF(r));
  c[0] = RF::constant(r, 1);
  for (std::size_t i = 0; i < ch.s(); ++i) {
    std::vector<RF> next(c.size(), RF(r));
    RF pw = RF::constant(r, 1);
    std::vector<RF> factor;
    for (int n = 0; n <= top; ++n) {
      factor.push_back(RF::constant(r, rising(ch.mu[i], n)) * pw);
      pw = pw * ch.pts[i];
    }
    for (int a = 0; a <= top; ++a)
      for (int b = 0; a + b <= top; ++b)
        if (!c[a].is_zero() && !factor[b].is_zero()) next[a + b] += c[a] * factor[b];
    c = std::move(next);
  }
  return c;
}

std::string u_power(long j) { return j == 0 ? "1" : (j == 1 ? "u" : "u^" + std::to_string(j)); }

std::string form_name(int j, int k) { return u_power(j) + " du/v^" + std::to_string(k); }

}  // namespace

int SuperellipticFamily::exponent_at_infinity() const {
  long sum = std::accumulate(exponents.begin(), exponents.end(), 0L);
  return static_cast<int>(((-sum) % N + N) % N);
}

SuperellipticFamily make_family(int N, std::vector<int> exponents, const std::vector<std::string>& points,
                                std::vector<std::string> params) {
  if (N < 2) throw SchemaError("superelliptic family needs N >= 2");
  std::optional<int> explicit_inf;
  if (exponents.size() == points.size() + 1) {
    explicit_inf = exponents.back();
    exponents.pop_back();
  }
  if (exponents.size() != points.size()) throw SchemaError("one exponent per point (optionally plus one for infinity)");
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] % N == 0)
      throw SchemaError("degenerate exponent " + std::to_string(exponents[i]) + " at point " + points[i]);
  if (params.empty()) {
    static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
    std::set<std::string> seen;
    for (const auto& p : points)
      for (std::sregex_iterator it(p.begin(), p.end(), ident), end; it != end; ++it)
        if (seen.insert(it->str()).second) params.push_back(it->str());
  }
  SuperellipticFamily fam{N, exponents, {}, make_ring(params)};
  for (const auto& p : points) fam.points.push_back(parse_poly(p, fam.params));
  if (explicit_inf && ((*explicit_inf - fam.exponent_at_infinity()) % N) != 0)
    throw SchemaError("exponent at infinity must be minus the sum of the finite exponents mod N");
  for (std::size_t i = 0; i < fam.points.size(); ++i)
    for (std::size_t j = i + 1; j < fam.points.size(); ++j)
      if ((fam.points[i] - fam.points[j]).is_zero()) throw SchemaError("branch points coincide identically");
  return fam;
}

int genus(const SuperellipticFamily& fam) {
  long ram = 0;
  for (int a : fam.exponents) {
    if (a % fam.N == 0) throw SchemaError("degenerate exponent");
    ram += fam.N - std::gcd(a, fam.N);
  }
  ram += fam.N - std::gcd(fam.exponent_at_infinity(), fam.N);
  long two_g = ram - 2L * fam.N + 2;
  if (two_g < 0 || two_g % 2) throw SchemaError("exponent data do not define a connected cover");
  return static_cast<int>(two_g / 2);
}

EigenspaceBasis eigenspace_basis(const SuperellipticFamily& fam, int k) {
  Character ch = character(fam, k);
  const RingPtr& r = fam.params;
  EigenspaceBasis b;
  b.k = k;
  const std::size_t full = ch.full_dim();
  auto unit = [&](int j) {
    std::vector<RF> v(full, RF(r));
    v[static_cast<std::size_t>(j)] = RF::constant(r, 1);
    return v;
  };
  if (ch.inf_branched) {
    for (std::size_t j = 0; j < full; ++j) {
      b.j.push_back(static_cast<int>(j));
      b.coefficients.push_back(unit(static_cast<int>(j)));
      b.names.push_back(form_name(static_cast<int>(j), k));
    }
    return b;
  }
  if (ch.s() < 2) return b;
  // ∞ unramified for this character: keep the classes with zero residue at ∞.
  const long sg = ch.sigma_int();
  auto c = infinity_series(ch, r, static_cast<int>(full));
  for (long j = 0; j < static_cast<long>(full); ++j) {
    if (j == sg - 1) continue;
    auto v = unit(static_cast<int>(j));
    std::string name = form_name(static_cast<int>(j), k);
    if (j >= sg) {
      const RF& cn = c[static_cast<std::size_t>(j - sg + 1)];
      v[static_cast<std::size_t>(sg - 1)] = -cn;
      name = "(" + u_power(j) + " - (" + cn.to_string() + ")*" + u_power(sg - 1) + ") du/v^" + std::to_string(k);
    }
    b.j.push_back(static_cast<int>(j));
    b.coefficients.push_back(std::move(v));
    b.names.push_back(std::move(name));
  }
  return b;
}

EigenspaceConnection gauss_manin_eigenspace(const SuperellipticFamily& fam, int k, std::size_t step_limit) {
  Character ch = character(fam, k);
  const RingPtr& r = fam.params;
  EigenspaceConnection out;
  out.k = k;
  out.basis = eigenspace_basis(fam, k);
  for (std::size_t a = 0; a < out.basis.rank(); ++a) {
    Rational j = out.basis.j[a];
    if (ch.inf_branched ? j + 1 < ch.sigma : j <= ch.sigma - 2) out.hodge_sub.push_back(a);
  }
  const std::size_t rank = out.basis.rank();
  if (rank == 0) return out;
  const std::size_t s = ch.s(), full = ch.full_dim();

  // Q = ∏ (u − p_i), Q_i = Q / (u − p_i).
  UPoly q{RF::constant(r, 1)};
  for (const auto& p : ch.pts) q = times_linear(q, p);
  std::vector<UPoly> qi;
  for (const auto& p : ch.pts) qi.push_back(divide_linear(q, p).first);

  // 1/(u − p_i) ≡ pole_poly[i] modulo exact forms, from d(Q_i Φ).
  std::vector<UPoly> pole_poly;
  for (std::size_t i = 0; i < s; ++i) {
    UPoly e = u_derivative(qi[i]);
    for (std::size_t j = 0; j < s; ++j) {
      if (j == i) continue;
      add_to(e, divide_linear(qi[i], ch.pts[j]).first, RF::constant(r, -ch.mu[j]));
    }
    add_to(e, divide_linear(qi[i], ch.pts[i]).first, RF::constant(r, -ch.mu[i]));
    RF scale = RF::constant(r, 1) / (RF::constant(r, ch.mu[i]) * evaluate(qi[i], ch.pts[i]));
    UPoly scaled;
    add_to(scaled, e, scale);
    pole_poly.push_back(std::move(scaled));
  }

  std::size_t steps = 0;
  auto reduce_degree = [&](UPoly p) {
    while (deg(p) >= static_cast<int>(full) && deg(p) >= 0) {
      if (++steps > step_limit) throw GuardExceeded("gauss_manin: reduction step limit exceeded");
      int l = deg(p) - static_cast<int>(s - 1);
      // E = (u^l Q)' − Σ μ_j u^l Q_j, leading coefficient l + s − σ.
      UPoly ulq(static_cast<std::size_t>(l), RF(r));
      ulq.insert(ulq.end(), q.begin(), q.end());
      UPoly e = u_derivative(ulq);
      for (std::size_t j = 0; j < s; ++j) {
        UPoly t(static_cast<std::size_t>(l), RF(r));
        t.insert(t.end(), qi[j].begin(), qi[j].end());
        add_to(e, t, RF::constant(r, -ch.mu[j]));
      }
      if (deg(e) != deg(p)) throw InvariantViolation("gauss_manin: degree reduction lost its leading term");
      add_to(p, e, -(p.back() / e.back()));
    }
    return p;
  };

  std::vector<RFMatrix> mats;
  const long sg = ch.inf_branched ? 0 : ch.sigma_int();
  std::vector<RF> series;
  if (!ch.inf_branched) series = infinity_series(ch, r, static_cast<int>(full));
  for (std::size_t d = 0; d < fam.n_params(); ++d) {
    RFMatrix m = rf_zero(r, rank);
    for (std::size_t a = 0; a < rank; ++a) {
      const auto& beta = out.basis.coefficients[a];
      UPoly poly;
      std::vector<RF> res(s, RF(r));
      for (std::size_t j = 0; j < beta.size(); ++j) {
        if (beta[j].is_zero()) continue;
        add_to(poly, monomial(r, static_cast<int>(j), RF::constant(r, 1)), beta[j].derivative(d));
        for (std::size_t i = 0; i < s; ++i) {
          RF dp = RF(fam.points[ch.branched[i]].derivative(d));
          if (dp.is_zero()) continue;
          RF f = beta[j] * RF::constant(r, ch.mu[i]) * dp;
          auto [qq, rem] = divide_linear(monomial(r, static_cast<int>(j), RF::constant(r, 1)), ch.pts[i]);
          add_to(poly, qq, f);
          res[i] += f * rem;
        }
      }
      for (std::size_t i = 0; i < s; ++i) add_to(poly, pole_poly[i], res[i]);
      poly = reduce_degree(poly);
      poly.resize(full, RF(r));
      if (!ch.inf_branched) {
        // Zero residue at ∞: coordinate σ−1 is determined by the others.
        RF expect(r);
        for (long j = sg; j < static_cast<long>(full); ++j)
          expect -= poly[static_cast<std::size_t>(j)] * series[static_cast<std::size_t>(j - sg + 1)];
        if (!(poly[static_cast<std::size_t>(sg - 1)] - expect).is_zero())
          throw InvariantViolation("gauss_manin: derivative left the second-kind subspace");
      }
      for (std::size_t b = 0; b < rank; ++b) m(a, b) = poly[static_cast<std::size_t>(out.basis.j[b])];
    }
    mats.push_back(std::move(m));
  }
  out.connection.emplace(AffineChart(fam.n_params(), Ideal::zero(r)), rank, std::move(mats));
  return out;
}

GaussManinResult gauss_manin(const SuperellipticFamily& fam) {
  GaussManinResult out;
  out.genus = genus(fam);
  out.eigenspaces = parallel_map(static_cast<std::size_t>(fam.N - 1),
                                 [&](std::size_t i) { return gauss_manin_eigenspace(fam, static_cast<int>(i) + 1); });
  return out;
}

namespace {

// Solves x · M = b for x (M square); nullopt when singular.
std::optional<std::vector<RF>> solve_left(std::vector<std::vector<RF>> m, std::vector<RF> b) {
  const std::size_t n = m.size();
  // Transpose into column-major equations: Σ_k x_k M[k][c] = b[c].
  std::vector<std::vector<RF>> a(n, std::vector<RF>(n + 1, RF(b[0].ring())));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t k = 0; k < n; ++k) a[c][k] = m[k][c];
    a[c][n] = b[c];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    RF inv = RF::constant(a[col][col].ring(), 1) / a[col][col];
    for (auto& e : a[col]) e = e * inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      RF f = a[row][col];
      for (std::size_t k = col; k <= n; ++k) a[row][k] -= f * a[col][k];
    }
  }
  std::vector<RF> x;
  for (std::size_t i = 0; i < n; ++i) x.push_back(a[i][n]);
  return x;
}

}  // namespace

std::vector<RationalFunction> cyclic_vector_ode(const ConnectionData& c, std::size_t direction,
                                                std::vector<Rational>* start) {
  const std::size_t r = c.rank();
  if (direction >= c.directions()) throw std::invalid_argument("cyclic_vector_ode: no such direction");
  const RFMatrix& a = c.matrix(direction);
  const RingPtr& ring = c.ring();
  std::vector<std::vector<Rational>> starts;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Rational> v(r, 0);
    v[i] = 1;
    starts.push_back(v);
  }
  for (int t = 1; t <= 8; ++t) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < r; ++i) v.push_back(1 + static_cast<long>((3 * t + 5) * (i + 1) % 11));
    starts.push_back(v);
  }
  for (const auto& v : starts) {
    std::vector<std::vector<RF>> rows;
    std::vector<RF> row;
    for (const auto& x : v) row.push_back(RF::constant(ring, x));
    for (std::size_t k = 0; k <= r; ++k) {
      rows.push_back(row);
      std::vector<RF> next;
      for (std::size_t j = 0; j < r; ++j) {
        RF acc = row[j].derivative(direction);
        for (std::size_t i = 0; i < r; ++i)
          if (!row[i].is_zero() && !a(i, j).is_zero()) acc += row[i] * a(i, j);
        next.push_back(std::move(acc));
      }
      row = std::move(next);
    }
    std::vector<RF> last = rows.back();
    rows.pop_back();
    auto x = solve_left(rows, last);
    if (!x) continue;
    if (start) *start = v;
    std::vector<RF> coeffs;
    for (auto& e : *x) coeffs.push_back(-e);
    return coeffs;
  }
  throw SchemaError("cyclic_vector_ode: no cyclic vector among the candidate starts");
}

SuperellipticFamily family_from_json(const nlohmann::json& j) {
  check_keys(j, {"N", "exponents", "points"}, {"params"}, "superelliptic family");
  try {
    std::vector<std::string> params;
    if (j.contains("params")) params = j.at("params").get<std::vector<std::string>>();
    return make_family(j.at("N").get<int>(), j.at("exponents").get<std::vector<int>>(),
                       j.at("points").get<std::vector<std::string>>(), params);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("superelliptic family: ") + e.what());
  }
}

nlohmann::json to_json(const SuperellipticFamily& fam) {
  std::vector<std::string> pts;
  for (const auto& p : fam.points) pts.push_back(p.to_string());
  return {{"N", fam.N}, {"exponents", fam.exponents}, {"points", pts}, {"params", fam.params->vars()}};
}

nlohmann::json to_json(const GaussManinResult& r) {
  nlohmann::json spaces = nlohmann::json::array();
  std::size_t total = 0, hodge = 0;
  for (const auto& e : r.eigenspaces) {
    total += e.basis.rank();
    hodge += e.hodge_sub.size();
    nlohmann::json s = {{"k", e.k}, {"rank", e.basis.rank()}, {"forms", e.basis.names}, {"hodge_sub", e.hodge_sub}};
    s["connection"] = e.connection ? to_json(*e.connection) : nlohmann::json(nullptr);
    spaces.push_back(std::move(s));
  }
  return {{"genus", r.genus}, {"total_rank", total}, {"hodge_total", hodge}, {"eigenspaces", spaces}};
}

std::vector<std::string> validate_family(const nlohmann::json& j) {
  std::vector<std::string> out;
  try {
    check_keys(j, {"N", "exponents", "points"}, {"params"}, "superelliptic family");
    int n = j.at("N").get<int>();
    auto ex = j.at("exponents").get<std::vector<int>>();
    auto pts = j.at("points").get<std::vector<std::string>>();
    if (n < 2) out.push_back("N must be at least 2");
    for (std::size_t i = 0; i < ex.size() && n >= 2; ++i)
      if (ex[i] % n == 0 && i < pts.size()) out.push_back("degenerate exponent " + std::to_string(ex[i]) + " at point " + pts[i]);
    if (!out.empty()) return out;
    SuperellipticFamily fam = family_from_json(j);
    int g = n;
    for (int a : fam.exponents) g = std::gcd(g, a);
    if (g != 1) out.push_back("exponents share a factor with N: the cover is disconnected");
  } catch (const RingMismatch& e) {
    out.push_back(std::string("ring mismatch: ") + e.what());
  } catch (const std::exception& e) {
    out.push_back(e.what());
  }
  return out;
}

}  // namespace leafcut
