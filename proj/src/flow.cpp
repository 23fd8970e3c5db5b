#include "rfl/flow.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/push_relabel_max_flow.hpp>

namespace rfl {

namespace {

using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using FlowGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS, boost::no_property,
    boost::property<boost::edge_capacity_t, long,
                    boost::property<boost::edge_residual_capacity_t, long,
                                    boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;
using FlowEdge = Traits::edge_descriptor;

struct Network {
  FlowGraph graph;
  FlowEdge add(int from, int to, long capacity) {
    auto cap = boost::get(boost::edge_capacity, graph);
    auto rev = boost::get(boost::edge_reverse, graph);
    FlowEdge fwd = boost::add_edge(from, to, graph).first;
    FlowEdge back = boost::add_edge(to, from, graph).first;
    cap[fwd] = capacity;
    cap[back] = 0;
    rev[fwd] = back;
    rev[back] = fwd;
    return fwd;
  }
};

struct FlowOutcome {
  long flow = 0;
  long demand = 0;
  bool balanced = false;
  std::vector<Edge> used;
};

// Vertex ids double as network nodes; 0 is the source, 2n+1 the sink.
FlowOutcome solve(const BipartiteGraph& allowed, std::span<const int> target) {
  const int n = allowed.n();
  if (static_cast<int>(target.size()) != 2 * n + 1) throw GraphError("target must have 2n+1 entries");
  FlowOutcome out;
  long demand_y = 0;
  for (Vertex v = 1; v <= 2 * n; ++v) {
    if (target[v] < 0) throw GraphError("negative target degree");
    (allowed.in_x(v) ? out.demand : demand_y) += target[v];
  }
  out.balanced = out.demand == demand_y;
  if (!out.balanced) return out;

  const int source = 0, sink = 2 * n + 1;
  Network net;
  net.graph = FlowGraph(2 * n + 2);
  for (Vertex x = 1; x <= n; ++x) net.add(source, x, target[x]);
  for (Vertex y = n + 1; y <= 2 * n; ++y) net.add(y, sink, target[y]);
  std::vector<std::pair<Edge, FlowEdge>> middle;
  for (const Edge& e : allowed.edges()) {
    if (target[e.x] > 0 && target[e.y] > 0) middle.emplace_back(e, net.add(e.x, e.y, 1));
  }
  out.flow = boost::push_relabel_max_flow(net.graph, source, sink);
  auto residual = boost::get(boost::edge_residual_capacity, net.graph);
  for (const auto& [edge, arc] : middle) {
    if (residual[arc] == 0) out.used.push_back(edge);
  }
  return out;
}

}  // namespace

std::optional<std::vector<Edge>> degree_constrained_subgraph(const BipartiteGraph& allowed,
                                                              std::span<const int> target) {
  FlowOutcome r = solve(allowed, target);
  if (!r.balanced || r.flow != r.demand) return std::nullopt;
  return r.used;
}

KFactorResult k_factor(const BipartiteGraph& g, int k) {
  if (k < 1) throw GraphError("k must be positive");
  std::vector<int> target(g.order() + 1, k);
  target[0] = 0;
  FlowOutcome r = solve(g, target);
  KFactorResult out;
  out.flow = r.flow;
  out.exists = r.flow == static_cast<long>(k) * g.n();
  if (out.exists) out.factor = std::move(r.used);
  return out;
}

}  // namespace rfl
