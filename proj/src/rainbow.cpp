#include "rfl/rainbow.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "rfl/flow.hpp"

namespace rfl {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Absent: return "absent";
    case SearchStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "unknown";
}

FactorValidation validate(const RainbowFactor& factor, const GraphFamily& family) {
  FactorValidation v;
  const int n = family.n(), k = family.k(), m = family.size();
  auto fail = [&v](std::string msg) {
    if (v.detail.empty()) v.detail = std::move(msg);
  };
  if (factor.n != n || factor.k != k) fail("factor parameters do not match family");

  std::vector<int> seen(m + 1, 0);
  v.bijection = static_cast<int>(factor.assignment.size()) == m;
  for (const Assignment& a : factor.assignment) {
    if (a.graph_index < 1 || a.graph_index > m || seen[a.graph_index]++) v.bijection = false;
  }
  if (!v.bijection) fail("graph indices are not a bijection onto 1.." + std::to_string(m));

  std::set<Edge> distinct;
  std::vector<int> degree(2 * n + 1, 0);
  bool in_range = true;
  v.membership = true;
  for (const Assignment& a : factor.assignment) {
    const Edge& e = a.edge;
    if (e.x < 1 || e.x > n || e.y <= n || e.y > 2 * n) {
      in_range = false;
      continue;
    }
    distinct.insert(e);
    ++degree[e.x];
    ++degree[e.y];
    if (a.graph_index >= 1 && a.graph_index <= m && !family.member(a.graph_index).has_edge(e)) {
      v.membership = false;
      fail("edge " + to_string(e) + " is not in graph " + std::to_string(a.graph_index));
    }
  }
  if (!in_range) {
    v.membership = false;
    fail("edge outside X x Y");
  }
  v.simple = in_range && distinct.size() == factor.assignment.size();
  if (!v.simple) fail("assigned edges are not pairwise distinct");
  v.regular = in_range;
  for (Vertex u = 1; u <= 2 * n; ++u) {
    if (degree[u] != k) {
      v.regular = false;
      fail("vertex " + std::to_string(u) + " has degree " + std::to_string(degree[u]));
      break;
    }
  }
  return v;
}

void require_valid(const RainbowFactor& factor, const GraphFamily& family) {
  FactorValidation v = validate(factor, family);
  if (!v.ok()) throw InvalidFactorError("invalid rainbow factor: " + v.detail);
}

namespace {

class Searcher {
 public:
  Searcher(const GraphFamily& family, const SearchOptions& options)
      : family_(family),
        options_(options),
        n_(family.n()),
        k_(family.k()),
        m_(family.size()),
        used_(n_, 0),
        degree_(2 * n_ + 1, 0),
        chosen_(m_),
        previous_same_(m_, -1) {
    candidates_.reserve(m_);
    for (const auto& g : family.members()) candidates_.push_back(g.edges());
    if (options_.break_symmetry) {
      for (int i = 0; i < m_; ++i) {
        for (int j = i - 1; j >= 0; --j) {
          if (family.members()[j] == family.members()[i]) {
            previous_same_[i] = j;
            break;
          }
        }
      }
    }
  }

  SearchResult run() {
    SearchResult result;
    bool found = descend(0);
    result.nodes = nodes_;
    if (found) {
      RainbowFactor f{n_, k_, {}};
      for (int i = 0; i < m_; ++i) f.assignment.push_back({i + 1, chosen_[i]});
      require_valid(f, family_);
      result.status = SearchStatus::Found;
      result.factor = std::move(f);
    } else {
      result.status = exhausted_ ? SearchStatus::BudgetExhausted : SearchStatus::Absent;
    }
    return result;
  }

 private:
  bool descend(int level) {
    if (level == m_) return true;
    if (options_.prune_interval > 0 && level % options_.prune_interval == 0 && !feasible(level)) {
      return false;
    }
    const int same = previous_same_[level];
    for (const Edge& e : candidates_[level]) {
      if (same >= 0 && !(chosen_[same] < e)) continue;
      BipartiteGraph::Row bit = BipartiteGraph::Row{1} << (e.y - n_ - 1);
      if ((used_[e.x - 1] & bit) || degree_[e.x] >= k_ || degree_[e.y] >= k_) continue;
      if (++nodes_ > options_.budget) {
        exhausted_ = true;
        return false;
      }
      used_[e.x - 1] |= bit;
      ++degree_[e.x];
      ++degree_[e.y];
      chosen_[level] = e;
      if (descend(level + 1)) return true;
      used_[e.x - 1] &= ~bit;
      --degree_[e.x];
      --degree_[e.y];
      if (exhausted_) return false;
    }
    return false;
  }

  // Can the remaining degree deficits be met by unused edges of the
  // remaining graphs, ignoring which graph supplies which edge?
  bool feasible(int level) const {
    std::vector<BipartiteGraph::Row> rows(n_, 0);
    for (int i = level; i < m_; ++i) {
      auto r = family_.members()[i].x_rows();
      for (int x = 0; x < n_; ++x) rows[x] |= r[x];
    }
    for (int x = 0; x < n_; ++x) rows[x] &= ~used_[x];
    std::vector<int> target(2 * n_ + 1, 0);
    for (Vertex v = 1; v <= 2 * n_; ++v) target[v] = k_ - degree_[v];
    return degree_constrained_subgraph(BipartiteGraph::from_rows(n_, rows), target).has_value();
  }

  const GraphFamily& family_;
  SearchOptions options_;
  int n_, k_, m_;
  std::vector<std::vector<Edge>> candidates_;
  std::vector<BipartiteGraph::Row> used_;
  std::vector<int> degree_;
  std::vector<Edge> chosen_;
  std::vector<int> previous_same_;
  std::int64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

SearchResult rainbow_k_factor_search(const GraphFamily& family, const SearchOptions& options) {
  return Searcher(family, options).run();
}

SearchResult rainbow_perfect_matching_search(std::span<const BipartiteGraph> members,
                                             const SearchOptions& options) {
  if (members.empty()) throw GraphError("rainbow perfect matching needs at least one graph");
  int n = members.front().n();
  GraphFamily family(n, 1, std::vector<BipartiteGraph>(members.begin(), members.end()));
  return rainbow_k_factor_search(family, options);
}

}  // namespace rfl
