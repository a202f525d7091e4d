#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "leafcut/connection/connection.hpp"

namespace leafcut {

/// v^N = ∏ (u − p_i)^{a_i} over the finite points p_i (polynomials in the
/// parameters); the exponent at ∞ is −Σ a_i mod N.
struct SuperellipticFamily {
  int N = 2;
  std::vector<int> exponents;
  std::vector<Poly> points;
  RingPtr params;

  int exponent_at_infinity() const;
  std::size_t n_params() const { return params->size(); }
};

/// Throws SchemaError on N < 2, a degenerate finite exponent, or an
/// inconsistent explicit ∞ exponent.
SuperellipticFamily make_family(int N, std::vector<int> exponents, const std::vector<std::string>& points,
                                std::vector<std::string> params = {});

/// Riemann–Hurwitz: 2 − 2g = 2N − Σ (N − gcd(a, N)) over all points and ∞.
int genus(const SuperellipticFamily& fam);

/// Forms ω = g(u) du / w_k with w_k = ∏ (u − p_i)^{⟨k a_i / N⟩}: the χ_k
/// eigenforms u^j du / v^k up to the polynomial factor v^k / w_k. Each form is
/// its coefficient vector over u^0, ..., u^{s−2} (s finite branch points).
struct EigenspaceBasis {
  int k = 0;
  std::vector<int> j;  // leading power of u per form
  std::vector<std::vector<RationalFunction>> coefficients;
  std::vector<std::string> names;
  std::size_t rank() const { return j.size(); }
};

EigenspaceBasis eigenspace_basis(const SuperellipticFamily& fam, int k);

struct EigenspaceConnection {
  int k = 0;
  EigenspaceBasis basis;
  /// Indices of the holomorphic forms (F¹).
  std::vector<std::size_t> hodge_sub;
  /// ∂_i ω_a = Σ_b A_i(a, b) ω_b in cohomology, so period vectors are flat
  /// sections. Absent for rank 0.
  std::optional<ConnectionData> connection;
};

struct GaussManinResult {
  int genus = 0;
  std::vector<EigenspaceConnection> eigenspaces;  // k = 1, ..., N − 1
};

/// Differentiates each basis form under the integral and reduces modulo
/// exact forms (simple poles, then degree in u). Throws GuardExceeded when the
/// reduction exceeds `step_limit` steps.
EigenspaceConnection gauss_manin_eigenspace(const SuperellipticFamily& fam, int k, std::size_t step_limit = 100000);
GaussManinResult gauss_manin(const SuperellipticFamily& fam);

/// Monic ∂^r + c_{r−1} ∂^{r−1} + ... + c_0 annihilating the periods of the
/// start form (first basis form, then each basis form, then fixed integer
/// combinations). Returns c_0, ..., c_{r−1}; `start` receives the combination
/// used. Throws SchemaError when no cyclic vector is found.
std::vector<RationalFunction> cyclic_vector_ode(const ConnectionData& c, std::size_t direction = 0,
                                                std::vector<Rational>* start = nullptr);

/// {"N", "exponents", "points", "params"?}; strict keys (SchemaError).
SuperellipticFamily family_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SuperellipticFamily& fam);
nlohmann::json to_json(const GaussManinResult& r);

/// Diagnostics (never throws): degenerate exponents, coincident points,
/// disconnected covers.
std::vector<std::string> validate_family(const nlohmann::json& j);

}  // namespace leafcut
