#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "rfl/constructions.hpp"
#include "rfl/graph.hpp"

namespace rfl {

/**
 * Seeded generator with a platform-independent stream. std::mt19937_64's
 * output sequence is fixed by the standard; the distributions below are
 * hand-rolled because the standard library ones are not.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }
  bool chance(double p) { return uniform() < p; }

  /// `count` distinct values from `pool`, in increasing order.
  std::vector<int> sample(std::vector<int> pool, int count);

 private:
  std::mt19937_64 engine_;
};

/// Each X x Y pair independently with probability edge_prob.
BipartiteGraph generate_random_bipartite(int n, double edge_prob, Rng& rng);
BipartiteGraph generate_random_bipartite(int n, double edge_prob, std::uint64_t seed);

/// One labeled copy of B_{n,k} per spec entry. Throws GraphError if an entry
/// is not a valid B-copy or the spec length is not k*n.
GraphFamily generate_B_variant_family(int n, int k, const std::vector<BCopy>& spec);

/// Random spec over 1..max_deficient distinct deficient vertices; when
/// require_distinct is set at least two entries differ.
std::vector<BCopy> random_B_spec(int n, int k, Rng& rng, int max_deficient, bool require_distinct);
GraphFamily generate_B_variant_family(int n, int k, std::uint64_t seed, int max_deficient = 3,
                                      bool require_distinct = true);

/// Random copy of B_{n,k} with extra edges added independently with extra_prob.
BipartiteGraph random_B_supergraph(int n, int k, double extra_prob, Rng& rng);

/// Tolerance from RFL_DEFAULT_TOL, else kDefaultTolerance.
double default_tolerance();

struct ExperimentConfig {
  std::uint64_t seed = 1;
  int n_min = 0;  // 0 = campaign default
  int n_max = 0;
  int k_min = 0;
  int k_max = 0;
  int trials = 0;
  double tol = 0.0;
  std::int64_t search_budget = 50'000'000;
  int confirm = 20;  // lemma32-construction: cases also checked by exact search
  std::string output_path;
};

struct CaseResult {
  nlohmann::json params;
  nlohmann::json measured;
  bool pass = false;
  std::string instance;  // serialized input, filled for failing cases
};

struct CampaignReport {
  std::string campaign;
  ExperimentConfig config;
  std::vector<CaseResult> cases;
  int pass_count = 0;
  int fail_count = 0;
  double wall_seconds = 0.0;

  bool ok() const { return fail_count == 0 && !cases.empty(); }
};

const std::vector<std::string>& campaign_names();

/// Fills zero fields of `config` with the campaign's defaults.
ExperimentConfig resolve_config(const std::string& campaign, ExperimentConfig config);

/**
 * Runs a named campaign. Lower-level exceptions become failing cases. Cases
 * are sorted by their parameters. Throws std::invalid_argument on an unknown
 * campaign name.
 */
CampaignReport run_campaign(const std::string& campaign, const ExperimentConfig& config);

/// Report as JSON. Everything except "wall_seconds" is reproducible from
/// (campaign, config).
nlohmann::json to_json(const CampaignReport& report, bool include_timing = true);

}  // namespace rfl
