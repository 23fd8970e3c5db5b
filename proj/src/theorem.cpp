#include "rfl/theorem.hpp"

#include <set>

#include "rfl/shifting.hpp"
#include "rfl/spectral.hpp"

namespace rfl {

MatchingSchedule build_theorem_matchings(int n, int k) {
  if (n < 1 || k < 1 || k > n) {
    throw GraphError("matching schedule needs 1 <= k <= n, got n=" + std::to_string(n) +
                     ", k=" + std::to_string(k));
  }
  MatchingSchedule s{n, k, {}};
  for (int i = 1; i <= k; ++i) {
    std::vector<Edge> m;
    for (int j = 1; j <= n; ++j) m.push_back(j < i ? Edge{j, n + i - j} : Edge{j, 2 * n + i - j});
    s.matchings.push_back(std::move(m));
  }
  return s;
}

ScheduleCheck check_schedule(const MatchingSchedule& s) {
  ScheduleCheck c;
  const int n = s.n;
  c.perfect = static_cast<int>(s.matchings.size()) == s.k;
  std::vector<int> union_degree(2 * n + 1, 0);
  std::set<Edge> all;
  std::size_t total = 0;
  bool in_range = true;
  for (const auto& m : s.matchings) {
    std::vector<int> degree(2 * n + 1, 0);
    for (const Edge& e : m) {
      if (e.x < 1 || e.x > n || e.y <= n || e.y > 2 * n) {
        in_range = false;
        continue;
      }
      ++degree[e.x];
      ++degree[e.y];
      ++union_degree[e.x];
      ++union_degree[e.y];
      all.insert(e);
      ++total;
    }
    for (Vertex v = 1; v <= 2 * n; ++v) c.perfect = c.perfect && degree[v] == 1;
  }
  c.perfect = c.perfect && in_range;
  c.disjoint = in_range && all.size() == total;
  c.k_factor = in_range && c.disjoint;
  for (Vertex v = 1; v <= 2 * n; ++v) c.k_factor = c.k_factor && union_degree[v] == s.k;
  return c;
}

Edge theorem_edge(int n, int k, int j) {
  if (j < k || j > n) throw GraphError("e_j is defined for k <= j <= n");
  return {j, 2 * n + k - j};
}

ClaimsReport claims_check(const GraphFamily& family, double rho_threshold) {
  const int n = family.n(), k = family.k();
  ClaimsReport report;
  report.threshold = rho_threshold;
  const MatchingSchedule schedule = build_theorem_matchings(n, k);
  const Edge ek = theorem_edge(n, k, k), en = theorem_edge(n, k, n);

  for (int t = 1; t <= family.size(); ++t) {
    const BipartiteGraph& g = family.member(t);
    if (!is_bi_shifted(g)) throw GraphError("member " + std::to_string(t) + " is not bi-shifted");
    MemberClaims mc;
    mc.graph_index = t;
    SpectralReport r = spectral_radius(g);
    if (!r.converged) throw InconsistencyError("power iteration did not converge on member " + std::to_string(t));
    mc.rho = r.value;
    mc.meets_threshold = mc.rho >= rho_threshold - 1e-9;
    mc.min_degree = g.min_degree();
    mc.min_degree_ok = mc.min_degree >= k - 1;
    if (mc.meets_threshold) {
      ++report.checked;
      for (int j = k + 1; j <= n - 1; ++j) {
        Edge e = theorem_edge(n, k, j);
        if (!g.has_edge(e)) mc.missing_diagonal.push_back(e);
      }
      for (const auto& m : schedule.matchings) {
        for (const Edge& e : m) {
          if (e != ek && e != en && !g.has_edge(e)) mc.missing_matching.push_back(e);
        }
      }
      if (mc.violated()) ++report.violations;
    }
    report.members.push_back(std::move(mc));
  }
  return report;
}

}  // namespace rfl
