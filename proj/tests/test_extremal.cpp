#include <algorithm>
#include <map>
#include <numeric>

#include "doctest.h"
#include "rfl/constructions.hpp"
#include "rfl/extremal.hpp"
#include "rfl/harness.hpp"
#include "rfl/rainbow.hpp"

using namespace rfl;

namespace {

std::vector<int> degree_vector(int n, const std::vector<Assignment>& a) {
  std::vector<int> d(2 * n + 1, 0);
  for (const auto& x : a) {
    ++d[x.edge.x];
    ++d[x.edge.y];
  }
  return d;
}

bool simple_union(const std::vector<Assignment>& a) {
  std::vector<Edge> edges;
  for (const auto& x : a) edges.push_back(x.edge);
  std::sort(edges.begin(), edges.end());
  return std::adjacent_find(edges.begin(), edges.end()) == edges.end();
}

std::vector<Assignment> random_matchings(int n, int k, Rng& rng) {
  std::vector<Assignment> out;
  int index = 1;
  for (int i = 0; i < k; ++i) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), n + 1);
    for (int j = n - 1; j > 0; --j) std::swap(perm[j], perm[rng.below(j + 1)]);
    for (int x = 1; x <= n; ++x) out.push_back({index++, {x, perm[x - 1]}});
  }
  return out;
}

void check_construction(const GraphFamily& family) {
  ConstructionResult r = construct_rainbow_factor_extremal(family);
  CHECK(validate(r.factor, family).ok());
  CHECK(r.factor.assignment.size() == static_cast<std::size_t>(family.size()));
  SearchResult s = rainbow_k_factor_search(family);
  CHECK(s.status == SearchStatus::Found);
}

}  // namespace

TEST_CASE("construction with one deficient vertex") {
  std::vector<BipartiteGraph> members(7, build_B(4, 2));
  members.push_back(build_B_copy(4, 2, {8, {2}}));
  GraphFamily family(4, 2, members);
  ConstructionResult r = construct_rainbow_factor_extremal(family);
  CHECK(r.log.distinct_deficient == 1);
  CHECK(r.log.k_prime == 2);
  CHECK(r.log.matching_blocks == 0);
  check_construction(family);
}

TEST_CASE("construction with two equal groups") {
  std::vector<BipartiteGraph> members(4, build_B(4, 2));
  for (int i = 0; i < 4; ++i) members.push_back(build_B_copy(4, 2, {7, {1}}));
  GraphFamily family(4, 2, members);
  ConstructionResult r = construct_rainbow_factor_extremal(family);
  CHECK(r.log.distinct_deficient == 2);
  CHECK(r.log.group_sizes == std::vector<int>{4, 4});
  CHECK(r.log.group_factors == std::vector<int>{1, 1});
  CHECK(r.log.k_prime == 2);
  CHECK(r.log.matching_blocks == 0);
  check_construction(family);
}

TEST_CASE("construction with a leftover matching block") {
  std::vector<BipartiteGraph> members;
  for (int i = 0; i < 6; ++i) members.push_back(build_B(4, 2));
  for (int i = 0; i < 2; ++i) members.push_back(build_B_copy(4, 2, {7, {1}}));
  GraphFamily family(4, 2, members);
  ConstructionResult r = construct_rainbow_factor_extremal(family);
  CHECK(r.log.deficient == std::vector<Vertex>{8, 7});
  CHECK(r.log.group_sizes == std::vector<int>{6, 2});
  CHECK(r.log.group_factors == std::vector<int>{1, 0});
  CHECK(r.log.k_prime == 1);
  CHECK(r.log.matching_blocks == 1);
  check_construction(family);
}

TEST_CASE("construction with deficient vertices in both parts") {
  std::vector<BCopy> spec;
  for (int i = 0; i < 5; ++i) spec.push_back({10, {1, 2}});
  for (int i = 0; i < 5; ++i) spec.push_back({1, {6, 8}});
  for (int i = 0; i < 5; ++i) spec.push_back({3, {7, 9}});
  GraphFamily family = generate_B_variant_family(5, 3, spec);
  // 15 members over 3 groups of 5: every group yields a perfect matching.
  CHECK_THROWS_AS(construct_rainbow_factor_extremal(family), GraphError);  // n < 2k

  std::vector<BCopy> spec6;
  for (int i = 0; i < 9; ++i) spec6.push_back({12, {1, 2}});
  for (int i = 0; i < 9; ++i) spec6.push_back({2, {7, 8}});
  GraphFamily family6 = generate_B_variant_family(6, 3, spec6);
  ConstructionResult r = construct_rainbow_factor_extremal(family6);
  CHECK(validate(r.factor, family6).ok());
  CHECK(r.log.k_prime == 2);
  CHECK(r.log.matching_blocks == 1);
}

TEST_CASE("construction preconditions") {
  GraphFamily same(4, 2, std::vector<BipartiteGraph>(8, build_B(4, 2)));
  CHECK_THROWS_AS(construct_rainbow_factor_extremal(same), GraphError);

  std::vector<BipartiteGraph> with_k44(7, build_B(4, 2));
  with_k44.push_back(build_complete_bipartite(4, 4, 0, 0, 4));
  CHECK_THROWS_AS(construct_rainbow_factor_extremal(GraphFamily(4, 2, with_k44)), GraphError);

  std::vector<BipartiteGraph> small(6, build_B(3, 2));
  small.back() = build_B_copy(3, 2, {6, {2}});
  CHECK_THROWS_AS(construct_rainbow_factor_extremal(GraphFamily(3, 2, small)), GraphError);
}

TEST_CASE("construction on random families") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    for (auto [n, k] : {std::pair{4, 2}, {5, 2}, {6, 3}}) {
      GraphFamily family = generate_B_variant_family(n, k, seed, 3, true);
      CAPTURE(seed);
      CAPTURE(n);
      ConstructionResult r = construct_rainbow_factor_extremal(family);
      CHECK(validate(r.factor, family).ok());
    }
  }
}

TEST_CASE("single deficiency factor") {
  std::vector<BCopy> spec(7, BCopy{8, {1}});
  spec.push_back({8, {3}});
  GraphFamily family = generate_B_variant_family(4, 2, spec);
  std::vector<int> all(8);
  std::iota(all.begin(), all.end(), 1);
  auto f = single_deficiency_factor(family, all, spec, 8, 2);
  RainbowFactor factor{4, 2, f};
  std::sort(factor.assignment.begin(), factor.assignment.end());
  CHECK(validate(factor, family).ok());

  std::vector<BCopy> identical(8, BCopy{8, {1}});
  GraphFamily same = generate_B_variant_family(4, 2, identical);
  CHECK_THROWS_AS(single_deficiency_factor(same, all, identical, 8, 2), ConstructionError);
  CHECK_THROWS_AS(single_deficiency_factor(family, {1, 2, 3}, spec, 8, 1), ConstructionError);
  CHECK(single_deficiency_factor(family, {}, spec, 8, 0).empty());

  // A 1-factor on four members uses a single neighbor of 8.
  auto one = single_deficiency_factor(family, {1, 2, 3, 4}, spec, 8, 1);
  CHECK(degree_vector(4, one) == std::vector<int>{0, 1, 1, 1, 1, 1, 1, 1, 1});
  for (const auto& a : one) CHECK(family.member(a.graph_index).has_edge(a.edge));
}

TEST_CASE("repair of an assignment without repeats is the identity") {
  std::vector<BipartiteGraph> members(4, build_complete_bipartite(2, 2, 0, 0, 2));
  std::vector<Assignment> a = {{1, {1, 3}}, {2, {2, 4}}, {3, {1, 4}}, {4, {2, 3}}};
  RepairStats st;
  CHECK(repair_multiedges(a, members, &st) == a);
  CHECK(st.two_swaps + st.three_swaps == 0);
  CHECK(repair_multiedges({}, members).empty());
}

TEST_CASE("repair of a hand-built duplicate") {
  std::vector<BipartiteGraph> members(8, build_complete_bipartite(4, 4, 0, 0, 4));
  std::vector<Assignment> a = {{1, {1, 8}}, {2, {2, 7}}, {3, {3, 6}}, {4, {4, 5}},
                               {5, {1, 5}}, {6, {2, 7}}, {7, {3, 8}}, {8, {4, 6}}};
  CHECK_FALSE(simple_union(a));
  RepairStats st;
  auto fixed = repair_multiedges(a, members, &st);
  CHECK(simple_union(fixed));
  CHECK(degree_vector(4, fixed) == degree_vector(4, a));
  CHECK(st.two_swaps + st.three_swaps >= 1);
  GraphFamily family(4, 2, members);
  CHECK(validate(RainbowFactor{4, 2, fixed}, family).ok());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(fixed[i].graph_index == a[i].graph_index);
}

TEST_CASE("repair needing a relay through a third member") {
  // Neither holder of {1,3} contains {1,4} or {2,3}, so no 2-swap exists;
  // member 1 takes {2,4} from member 4, which moves to {2,3}.
  std::vector<BipartiteGraph> members = {
      BipartiteGraph(2, {{1, 3}, {2, 4}}), BipartiteGraph(2, {{1, 3}}),
      BipartiteGraph(2, {{2, 4}, {1, 4}}), BipartiteGraph(2, {{2, 4}, {2, 3}})};
  std::vector<Assignment> a = {{1, {1, 3}}, {2, {1, 3}}, {3, {2, 4}}, {4, {2, 4}}};
  RepairStats st;
  auto fixed = repair_multiedges(a, members, &st);
  CHECK(st.two_swaps == 0);
  CHECK(st.three_swaps == 1);
  CHECK(simple_union(fixed));
  CHECK(degree_vector(2, fixed) == degree_vector(2, a));
  for (const auto& x : fixed) CHECK(members[x.graph_index - 1].has_edge(x.edge));
}

TEST_CASE("repair reports failure with the offending state") {
  std::vector<BipartiteGraph> members(2, BipartiteGraph(2, {{1, 3}}));
  std::vector<Assignment> a = {{1, {1, 3}}, {2, {1, 3}}};
  CHECK_THROWS_AS(repair_multiedges(a, members), ConstructionError);
}

TEST_CASE("randomized repair preserves degrees and membership") {
  Rng rng(2718);
  int repaired = 0;
  for (int t = 0; t < 500; ++t) {
    int k = rng.between(2, 3);
    int n = rng.between(2 * k, 7);
    auto a = random_matchings(n, k, rng);
    std::vector<BipartiteGraph> members;
    for (const auto& x : a) {
      // Complete members half the time, otherwise the assigned edge plus noise.
      BipartiteGraph g = rng.chance(0.5) ? build_complete_bipartite(n, n, 0, 0, n)
                                         : generate_random_bipartite(n, 0.8, rng).with_edge(x.edge);
      members.push_back(g);
    }
    bool complete = std::all_of(members.begin(), members.end(),
                                [&](const BipartiteGraph& g) { return g.edge_count() == n * n; });
    CAPTURE(t);
    try {
      auto fixed = repair_multiedges(a, members);
      ++repaired;
      CHECK(simple_union(fixed));
      CHECK(degree_vector(n, fixed) == degree_vector(n, a));
      for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(fixed[i].graph_index == a[i].graph_index);
        CHECK(members[fixed[i].graph_index - 1].has_edge(fixed[i].edge));
      }
    } catch (const ConstructionError&) {
      CHECK_FALSE(complete);
    }
  }
  CHECK(repaired >= 450);
}
