#pragma once

#include <string>
#include <vector>

#include "rfl/graph.hpp"

namespace rfl {

/// k perfect matchings M_1..M_k of K_{n,n}; matchings[i-1][j-1] is e^(i)_j.
struct MatchingSchedule {
  int n = 0;
  int k = 0;
  std::vector<std::vector<Edge>> matchings;
};

/// e^(i)_j = {j, n+i−j} for j < i and {j, 2n+i−j} for j >= i. Throws for k > n.
MatchingSchedule build_theorem_matchings(int n, int k);

struct ScheduleCheck {
  bool perfect = false;   // each M_i covers every vertex once
  bool disjoint = false;  // no edge in two matchings
  bool k_factor = false;  // the union is k-regular on 2n vertices
  bool ok() const { return perfect && disjoint && k_factor; }
};

ScheduleCheck check_schedule(const MatchingSchedule& s);

/// e_j = {j, 2n+k−j} for k <= j <= n.
Edge theorem_edge(int n, int k, int j);

struct MemberClaims {
  int graph_index = 0;
  double rho = 0.0;
  bool meets_threshold = false;
  std::vector<Edge> missing_diagonal;  // e_{k+1}..e_{n-1} absent from the member
  int min_degree = 0;
  bool min_degree_ok = false;               // min degree >= k−1
  std::vector<Edge> missing_matching;  // e^(i)_j other than e_k, e_n absent
  bool violated() const {
    return meets_threshold && (!missing_diagonal.empty() || !min_degree_ok || !missing_matching.empty());
  }
};

struct ClaimsReport {
  double threshold = 0.0;
  std::vector<MemberClaims> members;
  int checked = 0;     // members meeting the threshold
  int violations = 0;  // checked members breaking any claim
};

/**
 * For every member with ρ >= threshold − 1e-9, checks that e_{k+1}..e_{n−1}
 * are edges, that the minimum degree is at least k−1, and that every matching
 * edge e^(i)_j except e_k and e_n is an edge. Members below the threshold are
 * reported but not checked. Throws GraphError if a member is not bi-shifted.
 */
ClaimsReport claims_check(const GraphFamily& family, double rho_threshold);

}  // namespace rfl
