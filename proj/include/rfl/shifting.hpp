#pragma once

#include <vector>

#include "rfl/graph.hpp"

namespace rfl {

enum class Part { X, Y };

struct ShiftStep {
  Part part = Part::X;
  Vertex x = 0;  // target (smaller) vertex
  Vertex y = 0;  // source (larger) vertex

  friend bool operator==(const ShiftStep&, const ShiftStep&) = default;
};

/// Every shift that changed the graph, in application order.
struct ShiftTrace {
  std::vector<ShiftStep> steps;
};

/**
 * The (x, y)-shift within one part: every edge {y, w} whose image {x, w} is
 * absent is moved onto x; all other edges stay.
 *
 * Throws GraphError unless x < y and both lie in the same part.
 */
BipartiteGraph xy_shift(const BipartiteGraph& g, Vertex x, Vertex y);

struct ShiftResult {
  BipartiteGraph graph;
  ShiftTrace trace;
};

/// Sweeps all X-pairs then all Y-pairs (lexicographic, x < y) until a full
/// sweep changes nothing. Σ(x + y) over edges drops on every change, so this
/// terminates.
ShiftResult bi_shift_fixpoint(const BipartiteGraph& g);

/// Re-applies a trace to g; yields the fixpoint when trace came from g.
BipartiteGraph replay(const BipartiteGraph& g, const ShiftTrace& trace);

/// Fixed under every within-part shift: neighborhoods are nested along
/// increasing index in both parts.
bool is_bi_shifted(const BipartiteGraph& g);

}  // namespace rfl
