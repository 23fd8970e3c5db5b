#pragma once

// Brute-force reference implementations. None of these share code paths with
// the library routines they check.

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include <Eigen/Eigenvalues>

#include "rfl/graph.hpp"

namespace rfl::oracle {

/// Largest |eigenvalue| of the dense adjacency matrix.
inline double dense_rho(const BipartiteGraph& g) {
  const int order = g.order();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(order, order);
  for (const Edge& e : g.edges()) {
    a(e.x - 1, e.y - 1) = 1.0;
    a(e.y - 1, e.x - 1) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

inline std::set<std::pair<int, int>> edge_set(const BipartiteGraph& g) {
  std::set<std::pair<int, int>> s;
  for (const Edge& e : g.edges()) s.insert({e.x, e.y});
  return s;
}

/// Isomorphism by trying every permutation of X and of Y, with and without
/// exchanging the two parts.
inline bool part_preserving_isomorphic(const BipartiteGraph& a, const BipartiteGraph& b) {
  const int n = a.n();
  if (b.n() != n || a.edge_count() != b.edge_count()) return false;
  auto target = edge_set(b);
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : a.edges()) edges.push_back({e.x - 1, e.y - n - 1});
  for (int swap = 0; swap < 2; ++swap) {
    std::vector<int> px(n), py(n);
    std::iota(px.begin(), px.end(), 0);
    do {
      std::iota(py.begin(), py.end(), 0);
      do {
        bool same = true;
        for (auto [x, y] : edges) {
          int i = swap ? y : x, j = swap ? x : y;
          if (!target.count({px[i] + 1, n + py[j] + 1})) {
            same = false;
            break;
          }
        }
        if (same) return true;
      } while (std::next_permutation(py.begin(), py.end()));
    } while (std::next_permutation(px.begin(), px.end()));
  }
  return false;
}

/// Enumerates every edge subset of size k*n looking for a k-regular one.
inline bool k_factor_by_enumeration(const BipartiteGraph& g, int k) {
  const int n = g.n();
  std::vector<Edge> edges = g.edges();
  const int m = static_cast<int>(edges.size());
  if (m > 24) throw std::invalid_argument("enumeration oracle limited to 24 edges");
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    if (std::popcount(mask) != k * n) continue;
    std::vector<int> degree(2 * n + 1, 0);
    for (int i = 0; i < m; ++i) {
      if (mask >> i & 1U) {
        ++degree[edges[i].x];
        ++degree[edges[i].y];
      }
    }
    if (std::all_of(degree.begin() + 1, degree.end(), [k](int d) { return d == k; })) return true;
  }
  return false;
}

/// Tries every choice of one edge per graph.
inline bool rainbow_perfect_matching_by_enumeration(const std::vector<BipartiteGraph>& members) {
  const int n = static_cast<int>(members.size());
  std::vector<std::vector<Edge>> options;
  for (const auto& g : members) options.push_back(g.edges());
  std::vector<int> pick(n, 0);
  for (const auto& o : options) {
    if (o.empty()) return false;
  }
  for (;;) {
    std::vector<int> degree(2 * n + 1, 0);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const Edge& e = options[i][pick[i]];
      ok = ++degree[e.x] == 1 && ++degree[e.y] == 1;
    }
    if (ok) return true;
    int i = 0;
    while (i < n && ++pick[i] == static_cast<int>(options[i].size())) pick[i++] = 0;
    if (i == n) return false;
  }
}

/// Downward closure in both part orders, checked literally over all vertex quadruples.
inline bool downward_closed(const BipartiteGraph& g) {
  const int n = g.n();
  for (const Edge& e : g.edges()) {
    for (int x1 = 1; x1 <= e.x; ++x1) {
      for (int y1 = n + 1; y1 <= e.y; ++y1) {
        if (!g.has_edge(x1, y1)) return false;
      }
    }
  }
  return true;
}

}  // namespace rfl::oracle
