#include "leafcut/gauss_manin/periods.hpp"

#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <random>
#include <stdexcept>

#include "leafcut/errors.hpp"

namespace leafcut {

namespace {

double eval(const Poly& p, const std::vector<double>& x) {
  double acc = 0;
  for (const auto& t : p.terms()) {
    double v = t.coef.get_d();
    for (std::size_t i = 0; i < x.size(); ++i)
      if (t.mono[i]) v *= std::pow(x[i], t.mono[i]);
    acc += v;
  }
  return acc;
}

double eval(const RationalFunction& f, const std::vector<double>& x) { return eval(f.num(), x) / eval(f.den(), x); }

struct Branch {
  double p;
  double mu;
};

std::vector<Branch> branch_points(const SuperellipticFamily& fam, int k, const std::vector<double>& params) {
  std::vector<Branch> out;
  for (std::size_t i = 0; i < fam.points.size(); ++i) {
    long m = (static_cast<long>(k) * fam.exponents[i]) % fam.N;
    if (m < 0) m += fam.N;
    if (m == 0) continue;
    out.push_back({eval(fam.points[i], params), static_cast<double>(m) / fam.N});
  }
  std::sort(out.begin(), out.end(), [](const Branch& a, const Branch& b) { return a.p < b.p; });
  return out;
}

double min_gap(const std::vector<Branch>& b) {
  double g = HUGE_VAL;
  for (std::size_t i = 1; i < b.size(); ++i) g = std::min(g, b[i].p - b[i - 1].p);
  return g;
}

}  // namespace

std::vector<std::vector<double>> segment_periods(const SuperellipticFamily& fam, const EigenspaceBasis& basis,
                                                 const std::vector<double>& params, int nodes) {
  if (params.size() != fam.n_params()) throw std::invalid_argument("segment_periods: wrong number of parameters");
  auto br = branch_points(fam, basis.k, params);
  if (br.size() >= 2 && !(min_gap(br) > 0)) throw std::invalid_argument("segment_periods: branch points coincide");
  std::vector<std::vector<double>> coef;
  for (const auto& form : basis.coefficients) {
    std::vector<double> c;
    for (const auto& e : form) c.push_back(eval(e, params));
    coef.push_back(std::move(c));
  }
  std::vector<std::vector<double>> out;
  for (std::size_t seg = 0; seg + 1 < br.size(); ++seg) {
    const double a = br[seg].p, b = br[seg + 1].p;
    // Weight (b − u)^{−μ_b} (u − a)^{−μ_a}; remaining factors are smooth on [a, b].
    std::unique_ptr<gsl_integration_fixed_workspace, decltype(&gsl_integration_fixed_free)> ws(
        gsl_integration_fixed_alloc(gsl_integration_fixed_jacobi, static_cast<std::size_t>(nodes), a, b,
                                    -br[seg + 1].mu, -br[seg].mu),
        &gsl_integration_fixed_free);
    if (!ws) throw std::runtime_error("segment_periods: quadrature allocation failed");
    const double* x = gsl_integration_fixed_nodes(ws.get());
    const double* w = gsl_integration_fixed_weights(ws.get());
    std::vector<double> per(basis.rank(), 0.0);
    for (int q = 0; q < nodes; ++q) {
      double rest = 1;
      for (std::size_t i = 0; i < br.size(); ++i)
        if (i != seg && i != seg + 1) rest *= std::pow(std::abs(x[q] - br[i].p), -br[i].mu);
      for (std::size_t f = 0; f < basis.rank(); ++f) {
        double g = 0, pw = 1;
        for (double c : coef[f]) {
          g += c * pw;
          pw *= x[q];
        }
        per[f] += w[q] * rest * g;
      }
    }
    out.push_back(std::move(per));
  }
  return out;
}

double period_residual(const SuperellipticFamily& fam, const EigenspaceConnection& ec, int samples, unsigned seed) {
  if (!ec.connection || ec.basis.rank() == 0 || fam.n_params() == 0) return 0;
  const auto& conn = *ec.connection;
  const std::size_t n = fam.n_params(), r = ec.basis.rank();
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  double worst = 0;
  int done = 0;
  for (int attempt = 0; done < samples; ++attempt) {
    if (attempt > 1000 * samples) throw std::runtime_error("period_residual: no admissible real sample points");
    std::vector<double> x(n);
    for (auto& v : x) v = dist(rng);
    auto br = branch_points(fam, ec.k, x);
    if (br.size() < 2 || min_gap(br) < 0.2) continue;
    bool singular = false;
    for (const auto& m : conn.matrices())
      for (const auto& e : m.data())
        if (std::abs(eval(e.den(), x)) < 1e-6) singular = true;
    if (singular) continue;
    ++done;
    auto p0 = segment_periods(fam, ec.basis, x);
    for (std::size_t d = 0; d < n; ++d) {
      const double h = 1e-3;
      std::vector<std::vector<std::vector<double>>> st;
      for (int o : {-2, -1, 1, 2}) {
        auto y = x;
        y[d] += o * h;
        st.push_back(segment_periods(fam, ec.basis, y));
      }
      for (std::size_t seg = 0; seg < p0.size(); ++seg) {
        double norm = 1;
        for (double v : p0[seg]) norm = std::max(norm, std::abs(v));
        for (std::size_t a = 0; a < r; ++a) {
          double deriv = (st[0][seg][a] - 8 * st[1][seg][a] + 8 * st[2][seg][a] - st[3][seg][a]) / (12 * h);
          double ap = 0;
          for (std::size_t b = 0; b < r; ++b) ap += eval(conn.matrix(d)(a, b), x) * p0[seg][b];
          worst = std::max(worst, std::abs(deriv - ap) / norm);
        }
      }
    }
  }
  return worst;
}

}  // namespace leafcut
