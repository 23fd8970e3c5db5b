#include "rfl/shifting.hpp"

#include <string>

namespace rfl {

BipartiteGraph xy_shift(const BipartiteGraph& g, Vertex x, Vertex y) {
  if (!g.contains(x) || !g.contains(y) || x >= y || g.in_x(x) != g.in_x(y)) {
    throw GraphError("shift needs x < y in the same part, got (" + std::to_string(x) + "," +
                     std::to_string(y) + ")");
  }
  BipartiteGraph out = g;
  // {y,w} moves to {x,w} exactly for w in N(y) \ N(x).
  for (Vertex w : g.neighbors(y)) {
    if (!g.has_edge(x, w)) {
      out = out.without_edge(g.make_edge(y, w)).with_edge(g.make_edge(x, w));
    }
  }
  return out;
}

namespace {

bool sweep_part(BipartiteGraph& g, Part part, ShiftTrace& trace) {
  int n = g.n();
  Vertex lo = part == Part::X ? 1 : n + 1;
  Vertex hi = part == Part::X ? n : 2 * n;
  bool changed = false;
  for (Vertex x = lo; x <= hi; ++x) {
    for (Vertex y = x + 1; y <= hi; ++y) {
      if ((g.row(y) & ~g.row(x)) == 0) continue;
      g = xy_shift(g, x, y);
      trace.steps.push_back({part, x, y});
      changed = true;
    }
  }
  return changed;
}

}  // namespace

ShiftResult bi_shift_fixpoint(const BipartiteGraph& g) {
  ShiftResult result{g, {}};
  for (;;) {
    bool changed = sweep_part(result.graph, Part::X, result.trace);
    changed = sweep_part(result.graph, Part::Y, result.trace) || changed;
    if (!changed) break;
  }
  return result;
}

BipartiteGraph replay(const BipartiteGraph& g, const ShiftTrace& trace) {
  BipartiteGraph out = g;
  for (const ShiftStep& s : trace.steps) out = xy_shift(out, s.x, s.y);
  return out;
}

bool is_bi_shifted(const BipartiteGraph& g) {
  for (Vertex v = 1; v < g.order(); ++v) {
    if (v == g.n()) continue;  // no pair straddles the parts
    if (g.row(v + 1) & ~g.row(v)) return false;
  }
  return true;
}

}  // namespace rfl
