#include "rfl/graph.hpp"

#include <bit>

namespace rfl {

std::string to_string(const Edge& e) {
  return "{" + std::to_string(e.x) + "," + std::to_string(e.y) + "}";
}

BipartiteGraph::BipartiteGraph(int n) : n_(n) {
  if (n < 1 || n > kMaxHalfOrder) {
    throw GraphError("half-order must be in 1.." + std::to_string(kMaxHalfOrder) +
                     ", got " + std::to_string(n));
  }
  x_rows_.assign(n, 0);
  y_rows_.assign(n, 0);
}

BipartiteGraph::BipartiteGraph(int n, std::span<const Edge> edges) : BipartiteGraph(n) {
  for (const Edge& e : edges) {
    if (!in_x(e.x) || !in_y(e.y)) {
      throw GraphError("edge " + to_string(e) + " is not in X x Y for n=" + std::to_string(n));
    }
    Row bit = Row{1} << (e.y - n_ - 1);
    Row& r = x_rows_[e.x - 1];
    if (r & bit) throw GraphError("duplicate edge " + to_string(e));
    r |= bit;
  }
  mirror();
}

BipartiteGraph BipartiteGraph::from_rows(int n, std::span<const Row> x_rows) {
  BipartiteGraph g(n);
  if (static_cast<int>(x_rows.size()) != n) throw GraphError("row count must equal n");
  Row mask = n == 64 ? ~Row{0} : ((Row{1} << n) - 1);
  for (int i = 0; i < n; ++i) {
    if (x_rows[i] & ~mask) throw GraphError("row bits beyond half-order");
    g.x_rows_[i] = x_rows[i];
  }
  g.mirror();
  return g;
}

void BipartiteGraph::mirror() {
  y_rows_.assign(n_, 0);
  for (int i = 0; i < n_; ++i) {
    Row r = x_rows_[i];
    while (r) {
      int j = std::countr_zero(r);
      y_rows_[j] |= Row{1} << i;
      r &= r - 1;
    }
  }
}

void BipartiteGraph::check_vertex(Vertex v) const {
  if (!contains(v)) {
    throw GraphError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(2 * n_));
  }
}

bool BipartiteGraph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  if (in_x(u) && in_y(v)) return (x_rows_[u - 1] >> (v - n_ - 1)) & 1U;
  if (in_y(u) && in_x(v)) return (x_rows_[v - 1] >> (u - n_ - 1)) & 1U;
  return false;
}

BipartiteGraph::Row BipartiteGraph::row(Vertex v) const {
  check_vertex(v);
  return in_x(v) ? x_rows_[v - 1] : y_rows_[v - n_ - 1];
}

int BipartiteGraph::degree(Vertex v) const { return std::popcount(row(v)); }

int BipartiteGraph::min_degree() const {
  int best = n_;
  for (Vertex v = 1; v <= 2 * n_; ++v) best = std::min(best, degree(v));
  return best;
}

int BipartiteGraph::edge_count() const {
  int total = 0;
  for (Row r : x_rows_) total += std::popcount(r);
  return total;
}

std::vector<Vertex> BipartiteGraph::neighbors(Vertex v) const {
  Row r = row(v);
  int base = in_x(v) ? n_ + 1 : 1;
  std::vector<Vertex> out;
  out.reserve(std::popcount(r));
  while (r) {
    out.push_back(base + std::countr_zero(r));
    r &= r - 1;
  }
  return out;
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex x = 1; x <= n_; ++x) {
    for (Vertex y : neighbors(x)) out.push_back({x, y});
  }
  return out;
}

Edge BipartiteGraph::make_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (in_x(u) && in_y(v)) return {u, v};
  if (in_y(u) && in_x(v)) return {v, u};
  throw GraphError("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                   " lie in the same part");
}

BipartiteGraph BipartiteGraph::with_edge(const Edge& e) const {
  Edge f = make_edge(e.x, e.y);
  BipartiteGraph g = *this;
  g.x_rows_[f.x - 1] |= Row{1} << (f.y - n_ - 1);
  g.y_rows_[f.y - n_ - 1] |= Row{1} << (f.x - 1);
  return g;
}

BipartiteGraph BipartiteGraph::without_edge(const Edge& e) const {
  Edge f = make_edge(e.x, e.y);
  BipartiteGraph g = *this;
  g.x_rows_[f.x - 1] &= ~(Row{1} << (f.y - n_ - 1));
  g.y_rows_[f.y - n_ - 1] &= ~(Row{1} << (f.x - 1));
  return g;
}

GraphFamily::GraphFamily(int n, int k, std::vector<BipartiteGraph> members)
    : n_(n), k_(k), members_(std::move(members)) {
  if (n < 1 || k < 1) throw GraphError("family needs n >= 1 and k >= 1");
  if (static_cast<int>(members_.size()) != k * n) {
    throw GraphError("family must have k*n = " + std::to_string(k * n) + " members, got " +
                     std::to_string(members_.size()));
  }
  for (const auto& g : members_) {
    if (g.n() != n) throw GraphError("family member has half-order " + std::to_string(g.n()));
  }
}

const BipartiteGraph& GraphFamily::member(int index) const {
  if (index < 1 || index > size()) {
    throw GraphError("graph index " + std::to_string(index) + " outside 1.." +
                     std::to_string(size()));
  }
  return members_[index - 1];
}

}  // namespace rfl
