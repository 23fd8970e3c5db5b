#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rfl/graph.hpp"

namespace rfl {

/**
 * Finds a simple subgraph of `allowed` in which every vertex v has degree
 * exactly target[v] (target is indexed by vertex id, entry 0 unused), or
 * nullopt if none exists. Decided by max flow on
 * source -> X (target) -> Y (1 per allowed edge) -> sink (target).
 */
std::optional<std::vector<Edge>> degree_constrained_subgraph(const BipartiteGraph& allowed,
                                                              std::span<const int> target);

struct KFactorResult {
  bool exists = false;
  long flow = 0;  // max flow; equals k*n iff a k-factor exists
  std::vector<Edge> factor;
};

KFactorResult k_factor(const BipartiteGraph& g, int k);

inline bool k_factor_exists(const BipartiteGraph& g, int k) { return k_factor(g, k).exists; }

}  // namespace rfl
