#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rfl/constructions.hpp"
#include "rfl/graph.hpp"
#include "rfl/rainbow.hpp"

namespace rfl {

/// A proof step that should always succeed did not; the message carries the
/// offending state.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RepairStats {
  int two_swaps = 0;
  int three_swaps = 0;
  long attempts = 0;
};

/**
 * Removes repeated edges from a union of factors.
 *
 * `assignment` is a multiset of (graph index, edge) pairs whose union is
 * regular as a multigraph; `members` holds the family (graph index i is
 * members[i-1]). While some edge vv' is assigned twice, one copy (held by
 * graph A) is exchanged together with another assigned edge zz' (held by D)
 * for the absent edges vz' and v'z:
 *
 *   2-swap: A and D take {vz', v'z} in either order;
 *   3-swap: a third graph C relays its edge ww', so {A, D, C} take
 *           {vz', v'z, ww'} under some bijection that moves C.
 *
 * Both copies of vv' are tried, candidates are scanned in lexicographic
 * order, and every 2-swap is considered before any 3-swap. Vertex degrees
 * and edge-to-graph membership are preserved; each swap removes at least one
 * repeated copy. Throws ConstructionError if no swap applies or the attempt
 * cap 10·m² (m = assignment size) is exceeded.
 */
std::vector<Assignment> repair_multiedges(std::vector<Assignment> assignment,
                                          const std::vector<BipartiteGraph>& members,
                                          RepairStats* stats = nullptr);

/**
 * Rainbow kk-factor of the members listed in `indices` (kk·n of them, all
 * B-copies sharing the deficient vertex u). kk members are matched to
 * distinct neighbors v_j of u; the rest fill a degree-constrained subgraph
 * of K_{n,n} − u where each v_j needs kk−1 and every other vertex kk.
 * When kk = k the chosen members include two with different neighborhoods.
 */
std::vector<Assignment> single_deficiency_factor(const GraphFamily& family,
                                                 const std::vector<int>& indices,
                                                 const std::vector<BCopy>& copies, Vertex u, int kk);

struct ConstructionLog {
  int distinct_deficient = 0;      // p
  std::vector<Vertex> deficient;   // u_1..u_p, by group size descending
  std::vector<int> group_sizes;    // n_i
  std::vector<int> group_factors;  // k_i = floor(n_i / n)
  int k_prime = 0;
  int matching_blocks = 0;         // k − k'
  bool reshuffled = false;
  RepairStats repair;
};

struct ConstructionResult {
  RainbowFactor factor;
  ConstructionLog log;
};

/**
 * Builds a rainbow k-factor of a family whose members are all labeled copies
 * of B_{n,k}, not all equal, with k >= 2 and n >= 2k.
 *
 * One deficient vertex: pick k members with distinct neighbors v_1..v_k of
 * the common deficient vertex u and complete the rest inside K_{n,n} − u.
 * Several: group members by deficient vertex, give each group of size n_i a
 * rainbow ⌊n_i/n⌋-factor on its first ⌊n_i/n⌋·n members, merge and repair;
 * split the leftovers into blocks of n, take a rainbow perfect matching of
 * each block with the deficient vertices stripped, merge and repair again.
 *
 * Throws GraphError on precondition violations and ConstructionError if an
 * internal step fails. The result is validated before it is returned.
 */
ConstructionResult construct_rainbow_factor_extremal(const GraphFamily& family);

}  // namespace rfl
