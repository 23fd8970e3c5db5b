#include "rfl/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace rfl {

std::string to_string(SpectralMethod m) {
  switch (m) {
    case SpectralMethod::PowerIteration: return "power-iteration";
    case SpectralMethod::QuotientClosedForm: return "quotient-closed-form";
    case SpectralMethod::QuarticBisection: return "quartic-bisection";
  }
  return "unknown";
}

SpectralReport spectral_radius(const BipartiteGraph& g, double tol, int max_iterations) {
  if (!(tol > 0.0)) throw GraphError("tolerance must be positive");
  const int order = g.order();
  std::vector<std::vector<int>> adj(order);
  for (Vertex v = 1; v <= order; ++v) {
    for (Vertex w : g.neighbors(v)) adj[v - 1].push_back(w - 1);
  }

  std::vector<double> x(order, 1.0 / std::sqrt(static_cast<double>(order)));
  std::vector<double> y(order);
  SpectralReport report;
  double prev = 0.0;
  for (int it = 1; it <= max_iterations; ++it) {
    for (int i = 0; i < order; ++i) {
      double s = x[i];
      for (int j : adj[i]) s += x[j];
      y[i] = s;
    }
    double lambda = 0.0;
    for (int i = 0; i < order; ++i) lambda += x[i] * y[i];
    double res2 = 0.0, norm2 = 0.0;
    for (int i = 0; i < order; ++i) {
      double r = y[i] - lambda * x[i];
      res2 += r * r;
      norm2 += y[i] * y[i];
    }
    report.iterations = it;
    report.residual = std::sqrt(res2);
    report.value = std::max(0.0, lambda - 1.0);
    if (it > 1 && std::abs(lambda - prev) < tol && report.residual <= tol) {
      report.converged = true;
      return report;
    }
    prev = lambda;
    double inv = 1.0 / std::sqrt(norm2);
    for (int i = 0; i < order; ++i) x[i] = y[i] * inv;
  }
  return report;
}

QuotientMatrix4 quotient_matrix(const ExtremalParams& params) {
  params.validate();
  auto [n, k, p] = params;
  QuotientMatrix4 q;
  double y1 = n + k - p - 1, y2 = p - k + 1, x1 = p - 1, x2 = n - p + 1;
  q.entries = {{{0, 0, y1, y2}, {0, 0, y1, 0}, {x1, x2, 0, 0}, {x1, 0, 0, 0}}};
  q.sizes = {p - 1, n - p + 1, n + k - p - 1, p - k + 1};
  return q;
}

std::optional<std::vector<std::vector<double>>> equitable_quotient(
    const BipartiteGraph& g, const std::vector<std::vector<Vertex>>& blocks) {
  const std::size_t m = blocks.size();
  std::vector<BipartiteGraph::Row> x_mask(m, 0), y_mask(m, 0);
  for (std::size_t b = 0; b < m; ++b) {
    for (Vertex v : blocks[b]) {
      if (!g.contains(v)) throw GraphError("partition vertex out of range");
      if (g.in_x(v)) x_mask[b] |= BipartiteGraph::Row{1} << (v - 1);
      else y_mask[b] |= BipartiteGraph::Row{1} << (v - g.n() - 1);
    }
  }
  std::vector<std::vector<double>> q(m, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    if (blocks[i].empty()) return std::nullopt;
    for (std::size_t j = 0; j < m; ++j) {
      int first = -1;
      for (Vertex v : blocks[i]) {
        BipartiteGraph::Row target = g.in_x(v) ? y_mask[j] : x_mask[j];
        int count = std::popcount(g.row(v) & target);
        if (first < 0) first = count;
        else if (count != first) return std::nullopt;
      }
      q[i][j] = first;
    }
  }
  return q;
}

Biquadratic characteristic(const QuotientMatrix4& q) {
  const auto& e = q.entries;
  // C = X-blocks -> Y-blocks, D = Y-blocks -> X-blocks.
  double c[2][2] = {{e[0][2], e[0][3]}, {e[1][2], e[1][3]}};
  double d[2][2] = {{e[2][0], e[2][1]}, {e[3][0], e[3][1]}};
  double cd[2][2];
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) cd[i][j] = c[i][0] * d[0][j] + c[i][1] * d[1][j];
  }
  return {cd[0][0] + cd[1][1], cd[0][0] * cd[1][1] - cd[0][1] * cd[1][0]};
}

Biquadratic p1_coefficients(int n, int k) {
  double nn = n, kk = k;
  return {nn * (nn - 1) + (kk - 1), (nn - 1) * (nn - kk + 1) * (kk - 1)};
}

Biquadratic p2_coefficients(const ExtremalParams& params) {
  params.validate();
  double n = params.n, k = params.k, p = params.p;
  return {n * (n + k - p - 1) + (p - 1) * (p - k + 1),
          (n + k - p - 1) * (p - k + 1) * (n - p + 1) * (p - 1)};
}

double eval_P1(int n, int k, double x) { return p1_coefficients(n, k)(x); }

double eval_P2(const ExtremalParams& params, double x) { return p2_coefficients(params)(x); }

double rho_from_quartic(double c2, double c0) {
  double disc = c2 * c2 - 4 * c0;
  if (!(c2 > 0) || c0 < 0 || disc < 0) {
    throw GraphError("biquadratic x^4 - " + std::to_string(c2) + "x^2 + " + std::to_string(c0) +
                     " has no real largest root");
  }
  return std::sqrt((c2 + std::sqrt(disc)) / 2);
}

SpectralReport rho_by_bisection(double c2, double c0, double tol) {
  if (!(c2 > 0) || c0 < 0 || c2 * c2 < 4 * c0) throw GraphError("invalid biquadratic");
  Biquadratic f{c2, c0};
  double lo = std::sqrt(c2 / 2), hi = std::sqrt(c2);
  SpectralReport r;
  r.method = SpectralMethod::QuarticBisection;
  while (hi - lo > tol && r.iterations < 200) {
    double mid = 0.5 * (lo + hi);
    if (f(mid) <= 0) lo = mid;
    else hi = mid;
    ++r.iterations;
  }
  r.value = 0.5 * (lo + hi);
  r.residual = hi - lo;
  r.converged = true;
  return r;
}

namespace {

SpectralReport closed_form_report(const Biquadratic& poly) {
  SpectralReport r;
  r.method = SpectralMethod::QuotientClosedForm;
  r.value = rho_from_quartic(poly.c2, poly.c0);
  SpectralReport check = rho_by_bisection(poly.c2, poly.c0);
  r.residual = std::abs(r.value - check.value);
  r.iterations = check.iterations;
  r.converged = true;
  if (r.residual > 1e-9) {
    throw InconsistencyError("closed-form root " + std::to_string(r.value) +
                             " disagrees with bisection " + std::to_string(check.value));
  }
  return r;
}

}  // namespace

SpectralReport quotient_radius(const ExtremalParams& params) {
  return closed_form_report(characteristic(quotient_matrix(params)));
}

SpectralReport quotient_radius(const BipartiteGraph& g) {
  const int n = g.n();
  const BipartiteGraph::Row full = n == 64 ? ~BipartiteGraph::Row{0} : ((BipartiteGraph::Row{1} << n) - 1);
  std::vector<Vertex> x1, x2, y1, y2;
  for (Vertex v = 1; v <= n; ++v) (g.row(v) == full ? x1 : x2).push_back(v);
  for (Vertex v = n + 1; v <= 2 * n; ++v) (g.row(v) == full ? y1 : y2).push_back(v);
  if (x1.empty() || x2.empty() || y1.empty() || y2.empty()) {
    throw GraphError("graph has no four-block join structure");
  }
  std::vector<std::vector<Vertex>> blocks = {x1, x2, y1, y2};
  auto q = equitable_quotient(g, blocks);
  // Join shape: X2 sees all of Y1 and nothing in Y2.
  if (!q || (*q)[1][2] != static_cast<double>(y1.size()) || (*q)[1][3] != 0.0) {
    throw GraphError("graph has no four-block join structure");
  }
  QuotientMatrix4 q4;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) q4.entries[i][j] = (*q)[i][j];
    q4.sizes[i] = static_cast<int>(blocks[i].size());
  }
  return closed_form_report(characteristic(q4));
}

JoinComparison compare_join_to_B(const ExtremalParams& params, double tol) {
  params.validate();
  if (params.p < params.k + 1) throw GraphError("join comparison needs p >= k+1");
  auto [n, k, p] = params;
  JoinComparison r;
  r.params = params;
  r.rho_join = quotient_radius(params).value;
  r.rho_B = quotient_radius(ExtremalParams{n, k, k}).value;

  SpectralReport join_power = spectral_radius(build_join(params), tol);
  SpectralReport b_power = spectral_radius(build_B(n, k), tol);
  if (!join_power.converged || !b_power.converged) {
    throw InconsistencyError("power iteration did not converge");
  }
  r.rho_join_power = join_power.value;
  r.rho_B_power = b_power.value;
  if (std::abs(r.rho_join - r.rho_join_power) > 1e-7 || std::abs(r.rho_B - r.rho_B_power) > 1e-7) {
    throw InconsistencyError("closed-form and power-iteration radii disagree beyond 1e-7");
  }

  r.margin = r.rho_B - r.rho_join;
  r.strict = r.margin > 1e-9;

  double x = std::sqrt(static_cast<double>(n) * (n - 1));
  r.sign_value = eval_P1(n, k, x) - eval_P2(params, x);
  double nn = n, kk = k, pp = p;
  r.factored_value = (kk - pp) * (nn - pp) * (-pp * pp + (kk + nn) * pp + nn * (nn - 1) - 2 * kk + 2);
  if (std::abs(r.sign_value - r.factored_value) > 1e-6 * std::max(1.0, std::abs(r.factored_value))) {
    throw InconsistencyError("P(sqrt(n(n-1))) disagrees with its factorization");
  }
  r.sign_negative = r.sign_value < 0;
  return r;
}

}  // namespace rfl
