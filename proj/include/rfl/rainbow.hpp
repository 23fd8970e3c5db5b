#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <span>
#include <string>
#include <vector>

#include "rfl/graph.hpp"

namespace rfl {

/// One edge drawn from family member `graph_index` (1-based).
struct Assignment {
  int graph_index = 0;
  Edge edge;

  friend auto operator<=>(const Assignment&, const Assignment&) = default;
};

/// A k-factor together with the bijection from its edges to graph indices.
struct RainbowFactor {
  int n = 0;
  int k = 0;
  std::vector<Assignment> assignment;  // sorted by graph_index
};

struct FactorValidation {
  bool bijection = false;   // indices are exactly 1..kn
  bool simple = false;      // kn pairwise distinct edges
  bool regular = false;     // every vertex covered k times
  bool membership = false;  // each edge lies in its assigned graph
  std::string detail;       // first failure, empty when ok

  bool ok() const { return bijection && simple && regular && membership; }
};

FactorValidation validate(const RainbowFactor& factor, const GraphFamily& family);

/// Throws InvalidFactorError carrying the validation detail unless ok().
void require_valid(const RainbowFactor& factor, const GraphFamily& family);

class InvalidFactorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SearchStatus { Found, Absent, BudgetExhausted };

std::string to_string(SearchStatus s);

struct SearchOptions {
  std::int64_t budget = 50'000'000;  // search nodes (candidate edges tried)
  int prune_interval = 4;            // flow-feasibility check every d levels; 0 disables
  bool break_symmetry = true;        // identical members take increasing edges
};

struct SearchResult {
  SearchStatus status = SearchStatus::Absent;
  std::optional<RainbowFactor> factor;
  std::int64_t nodes = 0;
};

/**
 * Exact backtracking over graph indices 1..kn in order. Each index takes an
 * unused edge of its graph (lexicographic order) that keeps all vertex
 * degrees at most k. Every prune_interval levels the search asks a flow
 * whether the remaining degrees can be filled from the union of the
 * remaining graphs, ignoring rainbowness.
 *
 * Absent is returned only when the tree is exhausted; running out of budget
 * yields BudgetExhausted.
 */
SearchResult rainbow_k_factor_search(const GraphFamily& family, const SearchOptions& options = {});

/// k = 1 specialization over exactly n graphs of half-order n.
SearchResult rainbow_perfect_matching_search(std::span<const BipartiteGraph> members,
                                             const SearchOptions& options = {});

}  // namespace rfl
