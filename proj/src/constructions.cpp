#include "rfl/constructions.hpp"

#include <algorithm>
#include <string>

namespace rfl {

PartGraph PartGraph::complete(int x_size, int y_size) {
  PartGraph g{x_size, y_size, {}};
  for (int x = 1; x <= x_size; ++x) {
    for (int y = 1; y <= y_size; ++y) g.edges.push_back({x, y});
  }
  return g;
}

PartGraph PartGraph::empty(int x_size, int y_size) { return {x_size, y_size, {}}; }

PartGraph PartGraph::quasi_complement() const {
  PartGraph out{x_size, y_size, {}};
  for (int x = 1; x <= x_size; ++x) {
    for (int y = 1; y <= y_size; ++y) {
      if (std::find(edges.begin(), edges.end(), Edge{x, y}) == edges.end()) {
        out.edges.push_back({x, y});
      }
    }
  }
  return out;
}

void ExtremalParams::validate() const {
  if (k < 2 || n < 2 * k || p < k || p > n - 1) {
    throw GraphError("invalid extremal parameters (n=" + std::to_string(n) +
                     ", k=" + std::to_string(k) + ", p=" + std::to_string(p) +
                     "); need k >= 2, n >= 2k, k <= p <= n-1");
  }
}

BipartiteGraph build_complete_bipartite(int a, int b, int x_offset, int y_offset, int n) {
  if (a < 0 || b < 0 || x_offset < 0 || y_offset < 0 || a > n - x_offset || b > n - y_offset) {
    throw GraphError("K_{" + std::to_string(a) + "," + std::to_string(b) +
                     "} with offsets (" + std::to_string(x_offset) + "," +
                     std::to_string(y_offset) + ") does not fit in half-order " +
                     std::to_string(n));
  }
  std::vector<Edge> edges;
  for (int i = 1; i <= a; ++i) {
    for (int j = 1; j <= b; ++j) edges.push_back({x_offset + i, n + y_offset + j});
  }
  return BipartiteGraph(n, edges);
}

BipartiteGraph quasi_complement(const BipartiteGraph& g) {
  int n = g.n();
  BipartiteGraph::Row mask = n == 64 ? ~BipartiteGraph::Row{0} : ((BipartiteGraph::Row{1} << n) - 1);
  std::vector<BipartiteGraph::Row> rows(g.x_rows().begin(), g.x_rows().end());
  for (auto& r : rows) r = ~r & mask;
  return BipartiteGraph::from_rows(n, rows);
}

BipartiteGraph bowtie_join(const PartGraph& g1, const PartGraph& g2) {
  int n = g1.x_size + g2.x_size;
  if (g1.x_size < 0 || g1.y_size < 0 || g2.x_size < 0 || g2.y_size < 0 ||
      n != g1.y_size + g2.y_size) {
    throw GraphError("join parts do not compose to a balanced graph: |X|=" + std::to_string(n) +
                     ", |Y|=" + std::to_string(g1.y_size + g2.y_size));
  }
  auto x1 = [&](int i) { return i; };
  auto x2 = [&](int i) { return g1.x_size + i; };
  auto y1 = [&](int j) { return n + j; };
  auto y2 = [&](int j) { return n + g1.y_size + j; };

  std::vector<Edge> edges;
  for (const Edge& e : g1.edges) edges.push_back({x1(e.x), y1(e.y)});
  for (const Edge& e : g2.edges) edges.push_back({x2(e.x), y2(e.y)});
  for (int i = 1; i <= g1.x_size; ++i) {
    for (int j = 1; j <= g2.y_size; ++j) edges.push_back({x1(i), y2(j)});
  }
  for (int i = 1; i <= g2.x_size; ++i) {
    for (int j = 1; j <= g1.y_size; ++j) edges.push_back({x2(i), y1(j)});
  }
  return BipartiteGraph(n, edges);
}

BipartiteGraph build_B(int n, int k) {
  if (k < 1 || n < k + 1) {
    throw GraphError("B_{n,k} needs k >= 1 and n >= k+1, got n=" + std::to_string(n) +
                     ", k=" + std::to_string(k));
  }
  return bowtie_join(PartGraph::complete(k - 1, n - 1),
                     PartGraph::complete(n - k + 1, 1).quasi_complement());
}

BipartiteGraph build_join(const ExtremalParams& params) {
  params.validate();
  auto [n, k, p] = params;
  return bowtie_join(PartGraph::complete(p - 1, n + k - p - 1),
                     PartGraph::complete(n - p + 1, p - k + 1).quasi_complement());
}

BipartiteGraph build_B_copy(int n, int k, const BCopy& copy) {
  BipartiteGraph full = build_complete_bipartite(n, n, 0, 0, n);
  if (!full.contains(copy.deficient)) throw GraphError("deficient vertex out of range");
  if (static_cast<int>(copy.neighbors.size()) != k - 1) {
    throw GraphError("B-copy needs exactly k-1 = " + std::to_string(k - 1) + " neighbors");
  }
  std::vector<Vertex> nb = copy.neighbors;
  std::sort(nb.begin(), nb.end());
  if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
    throw GraphError("B-copy neighbors must be distinct");
  }
  bool in_x = full.in_x(copy.deficient);
  for (Vertex v : nb) {
    if (!full.contains(v) || full.in_x(v) == in_x) {
      throw GraphError("B-copy neighbor " + std::to_string(v) + " is not in the opposite part");
    }
  }
  BipartiteGraph g = full;
  for (Vertex w : full.neighbors(copy.deficient)) {
    if (!std::binary_search(nb.begin(), nb.end(), w)) g = g.without_edge(full.make_edge(copy.deficient, w));
  }
  return g;
}

namespace {

// Relabels g so that `deficient` lands on 2n (swapping parts if it sits in X),
// its neighbors on 1..k-1, and everything else in index order.
BipartiteGraph relabel_to_canonical(const BipartiteGraph& g, Vertex deficient) {
  int n = g.n();
  bool swap_parts = g.in_x(deficient);
  auto own_part = [&](Vertex v) { return swap_parts ? g.in_x(v) : g.in_y(v); };

  std::vector<Vertex> label(2 * n + 1, 0);
  std::vector<Vertex> nb = g.neighbors(deficient);
  int next_other = 1;
  for (Vertex v : nb) label[v] = next_other++;
  for (Vertex v = 1; v <= 2 * n; ++v) {
    if (!own_part(v) && label[v] == 0) label[v] = next_other++;
  }
  int next_own = n + 1;
  for (Vertex v = 1; v <= 2 * n; ++v) {
    if (own_part(v) && v != deficient) label[v] = next_own++;
  }
  label[deficient] = 2 * n;

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    Vertex a = label[e.x], b = label[e.y];
    edges.push_back(a <= n ? Edge{a, b} : Edge{b, a});
  }
  return BipartiteGraph(n, edges);
}

}  // namespace

std::optional<BCopy> recognize_B(const BipartiteGraph& g, int k) {
  int n = g.n();
  if (k < 1 || n < k + 1) return std::nullopt;
  Vertex deficient = 0;
  for (Vertex v = 1; v <= 2 * n; ++v) {
    if (g.degree(v) == k - 1) {
      if (deficient != 0) return std::nullopt;
      deficient = v;
    }
  }
  if (deficient == 0) return std::nullopt;
  if (relabel_to_canonical(g, deficient) != build_B(n, k)) return std::nullopt;
  return BCopy{deficient, g.neighbors(deficient)};
}

bool is_isomorphic_to_B(const BipartiteGraph& g, int n, int k) {
  return g.n() == n && recognize_B(g, k).has_value();
}

BipartiteGraph induced_delete_vertex(const BipartiteGraph& g, Vertex v) {
  if (!g.contains(v)) {
    throw GraphError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(g.order()));
  }
  BipartiteGraph out = g;
  for (Vertex w : g.neighbors(v)) out = out.without_edge(g.make_edge(v, w));
  return out;
}

}  // namespace rfl
