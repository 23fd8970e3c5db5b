#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rfl {

/// 1-based vertex id. X = {1..n}, Y = {n+1..2n}.
using Vertex = int;

/// An X-Y edge, always stored with x in X and y in Y.
struct Edge {
  Vertex x = 0;
  Vertex y = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Balanced bipartite graph on vertices 1..2n with parts X = {1..n} and
 * Y = {n+1..2n}.
 *
 * Adjacency is kept as one 64-bit row per vertex: bit j of an X-row marks the
 * neighbor n+1+j, bit i of a Y-row marks the neighbor 1+i. Half-order is
 * therefore limited to kMaxHalfOrder. Instances are immutable; every
 * operation that modifies edges returns a new graph.
 */
class BipartiteGraph {
 public:
  static constexpr int kMaxHalfOrder = 64;
  using Row = std::uint64_t;

  BipartiteGraph() = default;

  /// Empty graph on half-order n.
  explicit BipartiteGraph(int n);

  /// Throws GraphError if an edge leaves X x Y or appears twice.
  BipartiteGraph(int n, std::span<const Edge> edges);
  BipartiteGraph(int n, std::initializer_list<Edge> edges)
      : BipartiteGraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds from X-rows directly; bits beyond n must be clear.
  static BipartiteGraph from_rows(int n, std::span<const Row> x_rows);

  int n() const { return n_; }
  int order() const { return 2 * n_; }

  bool in_x(Vertex v) const { return v >= 1 && v <= n_; }
  bool in_y(Vertex v) const { return v > n_ && v <= 2 * n_; }
  bool contains(Vertex v) const { return v >= 1 && v <= 2 * n_; }

  /// Adjacency test for any two vertex ids; same-part pairs are never adjacent.
  bool has_edge(Vertex u, Vertex v) const;
  bool has_edge(const Edge& e) const { return has_edge(e.x, e.y); }

  int degree(Vertex v) const;
  int min_degree() const;
  int edge_count() const;

  /// Neighbors in increasing order.
  std::vector<Vertex> neighbors(Vertex v) const;

  /// All edges, lexicographic by (x, y).
  std::vector<Edge> edges() const;

  /// Raw neighbor row; see class comment for the bit layout.
  Row row(Vertex v) const;
  std::span<const Row> x_rows() const { return x_rows_; }

  BipartiteGraph with_edge(const Edge& e) const;
  BipartiteGraph without_edge(const Edge& e) const;

  /// Edge {u, v} normalized so x is the X endpoint. Throws on same-part pairs.
  Edge make_edge(Vertex u, Vertex v) const;

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.n_ == b.n_ && a.x_rows_ == b.x_rows_;
  }

 private:
  void check_vertex(Vertex v) const;
  void mirror();

  int n_ = 0;
  std::vector<Row> x_rows_;
  std::vector<Row> y_rows_;
};

/// Ordered list of k*n balanced bipartite graphs on a common vertex set.
class GraphFamily {
 public:
  GraphFamily() = default;

  /// Throws GraphError unless members.size() == k*n and all share n.
  GraphFamily(int n, int k, std::vector<BipartiteGraph> members);

  int n() const { return n_; }
  int k() const { return k_; }
  int size() const { return static_cast<int>(members_.size()); }

  /// 1-based member access, matching graph indices 1..kn.
  const BipartiteGraph& member(int index) const;
  const std::vector<BipartiteGraph>& members() const { return members_; }

  friend bool operator==(const GraphFamily&, const GraphFamily&) = default;

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<BipartiteGraph> members_;
};

}  // namespace rfl
