#include "rfl/extremal.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "rfl/flow.hpp"

namespace rfl {

namespace {

std::string dump(const std::vector<Assignment>& a) {
  std::ostringstream out;
  for (const auto& x : a) out << " " << x.graph_index << ":" << to_string(x.edge);
  return out.str();
}

// Multiplicity table over X x Y, indexed [x][y].
class EdgeCounts {
 public:
  EdgeCounts(int n, const std::vector<Assignment>& a) : n_(n), count_((n + 1) * (2 * n + 1), 0) {
    for (const auto& x : a) ++at(x.edge);
  }
  int& at(const Edge& e) { return count_[e.x * (2 * n_ + 1) + e.y]; }
  int get(Vertex x, Vertex y) const { return count_[x * (2 * n_ + 1) + y]; }

  std::optional<Edge> first_repeated() const {
    for (Vertex x = 1; x <= n_; ++x) {
      for (Vertex y = n_ + 1; y <= 2 * n_; ++y) {
        if (get(x, y) >= 2) return Edge{x, y};
      }
    }
    return std::nullopt;
  }

 private:
  int n_;
  std::vector<int> count_;
};

struct Swap {
  std::vector<std::pair<std::size_t, Edge>> moves;  // position -> new edge
  bool three = false;
};

}  // namespace

std::vector<Assignment> repair_multiedges(std::vector<Assignment> assignment,
                                          const std::vector<BipartiteGraph>& members,
                                          RepairStats* stats) {
  RepairStats local;
  RepairStats& st = stats ? *stats : local;
  if (assignment.empty()) return assignment;
  const int n = members.at(0).n();
  const long cap = 10L * static_cast<long>(assignment.size()) * static_cast<long>(assignment.size());
  auto holds = [&](std::size_t pos, const Edge& e) {
    return members.at(assignment[pos].graph_index - 1).has_edge(e);
  };

  for (;;) {
    EdgeCounts counts(n, assignment);
    std::optional<Edge> repeated = counts.first_repeated();
    if (!repeated) break;
    const Edge vv = *repeated;
    const Vertex v = vv.x, vp = vv.y;

    std::vector<std::size_t> order(assignment.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::tie(assignment[a].edge, assignment[a].graph_index) <
             std::tie(assignment[b].edge, assignment[b].graph_index);
    });
    std::vector<std::size_t> holders;
    for (std::size_t pos : order) {
      if (assignment[pos].edge == vv) holders.push_back(pos);
    }

    auto candidates = [&](std::size_t a, auto&& visit) -> bool {
      for (std::size_t d : order) {
        if (d == a) continue;
        const Edge zz = assignment[d].edge;
        if (zz.x == v || zz.y == vp) continue;
        if (counts.get(v, zz.y) != 0 || counts.get(zz.x, vp) != 0) continue;
        if (++st.attempts > cap) {
          throw ConstructionError("repair exceeded " + std::to_string(cap) +
                                  " attempts; state:" + dump(assignment));
        }
        if (visit(d, Edge{v, zz.y}, Edge{zz.x, vp})) return true;
      }
      return false;
    };

    std::optional<Swap> swap;
    for (std::size_t a : holders) {
      if (candidates(a, [&](std::size_t d, Edge e1, Edge e2) {
            if (holds(a, e2) && holds(d, e1)) swap = Swap{{{a, e2}, {d, e1}}, false};
            else if (holds(a, e1) && holds(d, e2)) swap = Swap{{{a, e1}, {d, e2}}, false};
            return swap.has_value();
          })) {
        break;
      }
    }
    if (!swap) {
      for (std::size_t a : holders) {
        if (candidates(a, [&](std::size_t d, Edge e1, Edge e2) {
              for (std::size_t c : order) {
                if (c == a || c == d) continue;
                const Edge ww = assignment[c].edge;
                std::array<std::size_t, 3> who = {a, d, c};
                std::array<Edge, 3> what = {e1, e2, ww};
                std::array<int, 3> perm = {0, 1, 2};
                do {
                  if (perm[2] == 2) continue;  // c keeps ww': plain 2-swap
                  if (holds(who[0], what[perm[0]]) && holds(who[1], what[perm[1]]) &&
                      holds(who[2], what[perm[2]])) {
                    swap = Swap{{{who[0], what[perm[0]]}, {who[1], what[perm[1]]}, {who[2], what[perm[2]]}},
                                true};
                    return true;
                  }
                } while (std::next_permutation(perm.begin(), perm.end()));
              }
              return false;
            })) {
          break;
        }
      }
    }
    if (!swap) {
      throw ConstructionError("no repair swap for repeated edge " + to_string(vv) +
                              "; state:" + dump(assignment));
    }
    for (const auto& [pos, e] : swap->moves) assignment[pos].edge = e;
    ++(swap->three ? st.three_swaps : st.two_swaps);
  }
  return assignment;
}

namespace {

// Distinct representatives by augmenting paths; rep[j] in sets[j].
std::optional<std::vector<Vertex>> distinct_representatives(const std::vector<std::vector<Vertex>>& sets) {
  std::map<Vertex, int> owner;
  std::vector<Vertex> rep(sets.size(), 0);
  std::function<bool(int, std::map<Vertex, bool>&)> augment = [&](int j, std::map<Vertex, bool>& seen) {
    for (Vertex w : sets[j]) {
      if (seen[w]) continue;
      seen[w] = true;
      auto it = owner.find(w);
      if (it == owner.end() || augment(it->second, seen)) {
        owner[w] = j;
        rep[j] = w;
        return true;
      }
    }
    return false;
  };
  for (int j = 0; j < static_cast<int>(sets.size()); ++j) {
    std::map<Vertex, bool> seen;
    if (!augment(j, seen)) return std::nullopt;
  }
  return rep;
}

}  // namespace

std::vector<Assignment> single_deficiency_factor(const GraphFamily& family,
                                                 const std::vector<int>& indices,
                                                 const std::vector<BCopy>& copies, Vertex u, int kk) {
  const int n = family.n(), k = family.k();
  if (kk == 0) return {};
  if (kk < 0 || kk > k || static_cast<int>(indices.size()) != kk * n) {
    throw ConstructionError("group of " + std::to_string(indices.size()) +
                            " members cannot carry a " + std::to_string(kk) + "-factor");
  }
  for (int i : indices) {
    if (copies.at(i - 1).deficient != u) throw ConstructionError("group members disagree on deficient vertex");
  }

  std::vector<int> chosen;
  if (kk < k) {
    chosen.assign(indices.begin(), indices.begin() + kk);
  } else {
    int t1 = indices.front();
    auto t2 = std::find_if(indices.begin(), indices.end(),
                           [&](int i) { return copies[i - 1].neighbors != copies[t1 - 1].neighbors; });
    if (t2 == indices.end()) throw ConstructionError("all members share one neighborhood of the deficient vertex");
    chosen = {t1, *t2};
    for (int i : indices) {
      if (static_cast<int>(chosen.size()) == k) break;
      if (i != t1 && i != *t2) chosen.push_back(i);
    }
    std::sort(chosen.begin(), chosen.end());
  }

  std::vector<std::vector<Vertex>> sets;
  for (int i : chosen) sets.push_back(copies[i - 1].neighbors);
  auto reps = distinct_representatives(sets);
  if (!reps) throw ConstructionError("no distinct neighbors for the deficient vertex " + std::to_string(u));

  std::vector<Assignment> out;
  BipartiteGraph probe(n);
  for (std::size_t j = 0; j < chosen.size(); ++j) out.push_back({chosen[j], probe.make_edge(u, (*reps)[j])});

  std::vector<int> target(2 * n + 1, kk);
  target[0] = 0;
  target[u] = 0;
  for (Vertex w : *reps) target[w] = kk - 1;
  BipartiteGraph allowed = induced_delete_vertex(build_complete_bipartite(n, n, 0, 0, n), u);
  auto rest = degree_constrained_subgraph(allowed, target);
  if (!rest) throw ConstructionError("no completion of the deficient-vertex star");

  std::vector<int> remaining;
  for (int i : indices) {
    if (!std::binary_search(chosen.begin(), chosen.end(), i)) remaining.push_back(i);
  }
  if (remaining.size() != rest->size()) throw ConstructionError("completion has the wrong size");
  std::sort(rest->begin(), rest->end());
  for (std::size_t j = 0; j < remaining.size(); ++j) out.push_back({remaining[j], (*rest)[j]});
  return out;
}

ConstructionResult construct_rainbow_factor_extremal(const GraphFamily& family) {
  const int n = family.n(), k = family.k(), m = family.size();
  if (k < 2 || n < 2 * k) throw GraphError("extremal construction needs k >= 2 and n >= 2k");

  std::vector<BCopy> copies;
  for (int i = 1; i <= m; ++i) {
    auto c = recognize_B(family.member(i), k);
    if (!c) throw GraphError("member " + std::to_string(i) + " is not a copy of B_{n,k}");
    copies.push_back(*c);
  }
  bool all_equal = std::all_of(family.members().begin(), family.members().end(),
                               [&](const BipartiteGraph& g) { return g == family.members().front(); });
  if (all_equal) throw GraphError("extremal construction needs two distinct members");

  std::map<Vertex, std::vector<int>> by_deficient;
  for (int i = 1; i <= m; ++i) by_deficient[copies[i - 1].deficient].push_back(i);
  std::vector<std::pair<Vertex, std::vector<int>>> groups(by_deficient.begin(), by_deficient.end());
  std::stable_sort(groups.begin(), groups.end(),
                   [](const auto& a, const auto& b) { return a.second.size() > b.second.size(); });

  ConstructionResult result;
  ConstructionLog& log = result.log;
  log.distinct_deficient = static_cast<int>(groups.size());
  for (const auto& [u, members] : groups) {
    log.deficient.push_back(u);
    log.group_sizes.push_back(static_cast<int>(members.size()));
    log.group_factors.push_back(static_cast<int>(members.size()) / n);
  }

  std::vector<Assignment> assignment;
  if (groups.size() == 1) {
    std::vector<int> all(m);
    std::iota(all.begin(), all.end(), 1);
    assignment = single_deficiency_factor(family, all, copies, groups[0].first, k);
    log.k_prime = k;
  } else {
    std::vector<bool> taken(m + 1, false);
    int groups_with_factor = 0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      int kk = log.group_factors[g];
      if (kk == 0) continue;
      ++groups_with_factor;
      std::vector<int> part(groups[g].second.begin(), groups[g].second.begin() + kk * n);
      for (int i : part) taken[i] = true;
      auto f = single_deficiency_factor(family, part, copies, groups[g].first, kk);
      assignment.insert(assignment.end(), f.begin(), f.end());
      log.k_prime += kk;
    }
    if (groups_with_factor >= 2) assignment = repair_multiedges(assignment, family.members(), &log.repair);

    if (log.k_prime < k) {
      std::vector<int> leftover;
      for (int i = 1; i <= m; ++i) {
        if (!taken[i]) leftover.push_back(i);
      }
      const int blocks = k - log.k_prime;
      log.matching_blocks = blocks;

      auto block_of = [&](const std::vector<int>& order, int b) {
        return std::vector<int>(order.begin() + b * n, order.begin() + (b + 1) * n);
      };
      auto match_blocks = [&](const std::vector<int>& order) -> std::optional<std::vector<Assignment>> {
        std::vector<Assignment> found;
        for (int b = 0; b < blocks; ++b) {
          std::vector<int> block = block_of(order, b);
          std::vector<BipartiteGraph> stripped;
          for (int i : block) stripped.push_back(induced_delete_vertex(family.member(i), copies[i - 1].deficient));
          SearchResult r = rainbow_perfect_matching_search(stripped);
          if (r.status != SearchStatus::Found) return std::nullopt;
          for (const Assignment& a : r.factor->assignment) found.push_back({block[a.graph_index - 1], a.edge});
        }
        return found;
      };

      for (int b = 0; b < blocks; ++b) {
        std::vector<int> block = block_of(leftover, b);
        bool mixed = std::any_of(block.begin(), block.end(), [&](int i) {
          return copies[i - 1].deficient != copies[block.front() - 1].deficient;
        });
        if (!mixed) {
          throw ConstructionError("leftover block " + std::to_string(b + 1) +
                                  " has a single deficient vertex");
        }
      }

      auto matchings = match_blocks(leftover);
      if (!matchings) {
        // Deal members round-robin by deficient vertex so no block is lopsided.
        std::vector<int> sorted = leftover;
        std::stable_sort(sorted.begin(), sorted.end(),
                         [&](int a, int b) { return copies[a - 1].deficient < copies[b - 1].deficient; });
        std::vector<int> dealt(leftover.size());
        for (std::size_t t = 0; t < sorted.size(); ++t) {
          dealt[(t % blocks) * n + t / blocks] = sorted[t];
        }
        log.reshuffled = true;
        matchings = match_blocks(dealt);
        if (!matchings) throw ConstructionError("leftover blocks have no rainbow perfect matching");
      }
      assignment.insert(assignment.end(), matchings->begin(), matchings->end());
      assignment = repair_multiedges(assignment, family.members(), &log.repair);
    }
  }

  std::sort(assignment.begin(), assignment.end());
  result.factor = RainbowFactor{n, k, std::move(assignment)};
  require_valid(result.factor, family);
  return result;
}

}  // namespace rfl
