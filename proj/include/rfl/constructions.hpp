#pragma once

#include <optional>
#include <vector>

#include "rfl/graph.hpp"

namespace rfl {

/// Bipartite graph on local parts {1..x_size} and {1..y_size}, used as an
/// operand of bowtie_join. Parts need not be balanced.
struct PartGraph {
  int x_size = 0;
  int y_size = 0;
  std::vector<Edge> edges;  // local (x, y), 1-based in each part

  static PartGraph complete(int x_size, int y_size);
  static PartGraph empty(int x_size, int y_size);

  PartGraph quasi_complement() const;
};

/// Parameters of the join family K_{p-1, n+k-p-1} ⊔ K̂_{n-p+1, p-k+1}; p = k gives B_{n,k}.
struct ExtremalParams {
  int n = 0;
  int k = 0;
  int p = 0;

  /// Throws GraphError unless k >= 2, n >= 2k, k <= p <= n-1.
  void validate() const;
};

/// K_{a,b} placed on X = {x_offset+1..x_offset+a}, Y = {n+y_offset+1..n+y_offset+b}.
BipartiteGraph build_complete_bipartite(int a, int b, int x_offset, int y_offset, int n);

/// Bipartite complement with respect to X x Y.
BipartiteGraph quasi_complement(const BipartiteGraph& g);

/**
 * G1 ⊔ G2: G1 ∪ G2 plus every edge of X1 x Y2 and X2 x Y1.
 *
 * Labels: X1 = {1..|X1|}, X2 = {|X1|+1..n}, Y1 = {n+1..n+|Y1|}, Y2 = the rest
 * of Y, where n = |X1|+|X2|. Throws GraphError if |X1|+|X2| != |Y1|+|Y2|.
 */
BipartiteGraph bowtie_join(const PartGraph& g1, const PartGraph& g2);

/// B_{n,k} = K_{k-1,n-1} ⊔ K̂_{n-k+1,1} with the deficient vertex at 2n.
/// Accepts k >= 1, n >= k+1; the extremal range is k >= 2, n >= 2k.
BipartiteGraph build_B(int n, int k);

/// K_{p-1, n+k-p-1} ⊔ K̂_{n-p+1, p-k+1}.
BipartiteGraph build_join(const ExtremalParams& params);

/// A labeled copy of B_{n,k}: K_{n,n} minus the edges joining `deficient`
/// to every opposite-part vertex outside `neighbors`.
struct BCopy {
  Vertex deficient = 0;
  std::vector<Vertex> neighbors;  // sorted, size k-1

  friend bool operator==(const BCopy&, const BCopy&) = default;
};

/// Throws GraphError unless neighbors are k-1 distinct opposite-part vertices.
BipartiteGraph build_B_copy(int n, int k, const BCopy& copy);

/// The B-copy description of g, or nullopt if g is not isomorphic to B_{n,k}.
std::optional<BCopy> recognize_B(const BipartiteGraph& g, int k);

/// True iff g ≅ B_{n,k}, decided by relabeling onto the canonical build_B.
bool is_isomorphic_to_B(const BipartiteGraph& g, int n, int k);

/// Removes every edge at v; labels are kept and v becomes isolated.
BipartiteGraph induced_delete_vertex(const BipartiteGraph& g, Vertex v);

}  // namespace rfl
