#include "rfl/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

#include "rfl/extremal.hpp"
#include "rfl/flow.hpp"
#include "rfl/io.hpp"
#include "rfl/rainbow.hpp"
#include "rfl/shifting.hpp"
#include "rfl/spectral.hpp"
#include "rfl/theorem.hpp"

namespace rfl {

using nlohmann::json;

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below needs a positive bound");
  // Rejection keeps the result unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return r % bound;
}

std::vector<int> Rng::sample(std::vector<int> pool, int count) {
  if (count < 0 || count > static_cast<int>(pool.size())) throw std::invalid_argument("sample larger than pool");
  for (int i = 0; i < count; ++i) {
    std::swap(pool[i], pool[i + below(pool.size() - i)]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

BipartiteGraph generate_random_bipartite(int n, double edge_prob, Rng& rng) {
  if (edge_prob < 0.0 || edge_prob > 1.0) throw GraphError("edge probability must lie in [0, 1]");
  std::vector<Edge> edges;
  for (Vertex x = 1; x <= n; ++x) {
    for (Vertex y = n + 1; y <= 2 * n; ++y) {
      if (rng.chance(edge_prob)) edges.push_back({x, y});
    }
  }
  return BipartiteGraph(n, edges);
}

BipartiteGraph generate_random_bipartite(int n, double edge_prob, std::uint64_t seed) {
  Rng rng(seed);
  return generate_random_bipartite(n, edge_prob, rng);
}

GraphFamily generate_B_variant_family(int n, int k, const std::vector<BCopy>& spec) {
  if (static_cast<int>(spec.size()) != k * n) {
    throw GraphError("B-variant spec needs k*n = " + std::to_string(k * n) + " entries");
  }
  std::vector<BipartiteGraph> members;
  for (const BCopy& c : spec) members.push_back(build_B_copy(n, k, c));
  return GraphFamily(n, k, std::move(members));
}

namespace {

std::vector<int> range_vec(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

BCopy random_copy_at(int n, int k, Vertex deficient, Rng& rng) {
  std::vector<int> pool = deficient <= n ? range_vec(n + 1, 2 * n) : range_vec(1, n);
  return {deficient, rng.sample(pool, k - 1)};
}

}  // namespace

std::vector<BCopy> random_B_spec(int n, int k, Rng& rng, int max_deficient, bool require_distinct) {
  if (k < 1 || n < k + 1) throw GraphError("B-copies need k >= 1 and n >= k+1");
  max_deficient = std::clamp(max_deficient, 1, 2 * n);
  for (;;) {
    int p = rng.between(1, max_deficient);
    std::vector<int> deficient = rng.sample(range_vec(1, 2 * n), p);
    std::vector<BCopy> spec;
    for (int i = 0; i < k * n; ++i) {
      spec.push_back(random_copy_at(n, k, deficient[rng.below(p)], rng));
    }
    bool distinct = std::any_of(spec.begin(), spec.end(), [&](const BCopy& c) { return c != spec.front(); });
    if (distinct || !require_distinct) return spec;
  }
}

GraphFamily generate_B_variant_family(int n, int k, std::uint64_t seed, int max_deficient,
                                      bool require_distinct) {
  Rng rng(seed);
  return generate_B_variant_family(n, k, random_B_spec(n, k, rng, max_deficient, require_distinct));
}

BipartiteGraph random_B_supergraph(int n, int k, double extra_prob, Rng& rng) {
  BCopy c = random_copy_at(n, k, rng.between(1, 2 * n), rng);
  BipartiteGraph g = build_B_copy(n, k, c);
  for (Vertex x = 1; x <= n; ++x) {
    for (Vertex y = n + 1; y <= 2 * n; ++y) {
      if (!g.has_edge(x, y) && rng.chance(extra_prob)) g = g.with_edge({x, y});
    }
  }
  return g;
}

double default_tolerance() {
  if (const char* env = std::getenv("RFL_DEFAULT_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0) return v;
  }
  return kDefaultTolerance;
}

const std::vector<std::string>& campaign_names() {
  static const std::vector<std::string> names = {
      "spectral-consistency", "lemma33-grid",   "shift-properties", "extremal-absence",
      "lemma32-construction", "theorem-sample", "claims-audit"};
  return names;
}

ExperimentConfig resolve_config(const std::string& campaign, ExperimentConfig c) {
  struct Defaults {
    int n_min, n_max, k_min, k_max, trials;
  };
  static const std::map<std::string, Defaults> table = {
      {"spectral-consistency", {4, 10, 2, 4, 1}},
      {"lemma33-grid", {4, 10, 2, 4, 1}},
      {"shift-properties", {2, 8, 1, 1, 500}},
      {"extremal-absence", {4, 6, 2, 2, 1}},
      {"lemma32-construction", {4, 5, 2, 2, 100}},
      {"theorem-sample", {4, 4, 2, 2, 40}},
      {"claims-audit", {5, 5, 2, 2, 40}},
  };
  auto it = table.find(campaign);
  if (it == table.end()) throw std::invalid_argument("unknown campaign '" + campaign + "'");
  const Defaults& d = it->second;
  if (c.n_min == 0) c.n_min = d.n_min;
  if (c.n_max == 0) c.n_max = d.n_max;
  if (c.k_min == 0) c.k_min = d.k_min;
  if (c.k_max == 0) c.k_max = d.k_max;
  if (c.trials == 0) c.trials = d.trials;
  if (c.tol == 0.0) c.tol = default_tolerance();
  if (c.trials < 1 || c.n_min > c.n_max || c.k_min > c.k_max || c.n_min < 1 || c.k_min < 1) {
    throw std::invalid_argument("invalid experiment configuration for " + campaign);
  }
  return c;
}

namespace {

// splitmix64 finalizer; gives each trial an independent, reproducible seed.
std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class CaseRunner {
 public:
  explicit CaseRunner(CampaignReport& report) : report_(report) {}

  // body fills measured and returns pass; `instance` is stored on failure.
  void run(json params, const std::function<bool(json&, std::string&)>& body) {
    CaseResult c;
    c.params = std::move(params);
    std::string instance;
    try {
      c.pass = body(c.measured, instance);
    } catch (const std::exception& e) {
      c.pass = false;
      c.measured["error"] = e.what();
    }
    if (!c.pass) c.instance = instance;
    report_.cases.push_back(std::move(c));
  }

 private:
  CampaignReport& report_;
};

double rho(const BipartiteGraph& g, double tol) {
  SpectralReport r = spectral_radius(g, tol);
  if (!r.converged) throw InconsistencyError("power iteration did not converge");
  return r.value;
}

void spectral_consistency(const ExperimentConfig& c, CaseRunner& run) {
  for (int k = std::max(c.k_min, 2); k <= c.k_max; ++k) {
    for (int n = std::max(c.n_min, 2 * k); n <= c.n_max; ++n) {
      run.run({{"n", n}, {"k", k}}, [&](json& m, std::string& inst) {
        BipartiteGraph b = build_B(n, k);
        inst = graph_to_text(b);
        Biquadratic p1 = p1_coefficients(n, k);
        double power = rho(b, c.tol);
        double closed = rho_from_quartic(p1.c2, p1.c0);
        double floor = std::sqrt(static_cast<double>(n) * (n - 1));
        m = {{"rho_power", power}, {"rho_P1", closed}, {"abs_diff", std::abs(power - closed)},
             {"sqrt_n_n1", floor}};
        return std::abs(power - closed) <= 1e-7 && power > floor;
      });
    }
  }
}

void join_grid(const ExperimentConfig& c, CaseRunner& run) {
  for (int k = std::max(c.k_min, 2); k <= c.k_max; ++k) {
    for (int n = std::max(c.n_min, 2 * k); n <= c.n_max; ++n) {
      for (int p = k + 1; p <= n - 1; ++p) {
        run.run({{"n", n}, {"k", k}, {"p", p}}, [&](json& m, std::string& inst) {
          ExtremalParams params{n, k, p};
          inst = graph_to_text(build_join(params));
          JoinComparison r = compare_join_to_B(params, c.tol);
          m = {{"rho_join", r.rho_join}, {"rho_B", r.rho_B},         {"margin", r.margin},
               {"sign_value", r.sign_value}, {"strict", r.strict}, {"sign_negative", r.sign_negative}};
          return r.holds();
        });
      }
    }
  }
}

void shift_properties(const ExperimentConfig& c, CaseRunner& run) {
  for (int t = 0; t < c.trials; ++t) {
    std::uint64_t seed = trial_seed(c.seed, t);
    run.run({{"trial", t}, {"trial_seed", seed}}, [&](json& m, std::string& inst) {
      Rng rng(seed);
      int n = rng.between(std::max(c.n_min, 2), c.n_max);
      double prob = 0.15 + 0.7 * rng.uniform();
      BipartiteGraph g = generate_random_bipartite(n, prob, rng);
      inst = graph_to_text(g);
      double base = rho(g, c.tol);
      int pairs = 0, count_violations = 0, rho_violations = 0;
      double min_delta = std::numeric_limits<double>::infinity();
      for (int part = 0; part < 2; ++part) {
        Vertex lo = part == 0 ? 1 : n + 1;
        for (Vertex x = lo; x < lo + n; ++x) {
          for (Vertex y = x + 1; y < lo + n; ++y) {
            BipartiteGraph s = xy_shift(g, x, y);
            ++pairs;
            if (s.edge_count() != g.edge_count()) ++count_violations;
            double delta = rho(s, c.tol) - base;
            min_delta = std::min(min_delta, delta);
            if (delta < -1e-9) ++rho_violations;
          }
        }
      }
      ShiftResult fix = bi_shift_fixpoint(g);
      bool shifted = is_bi_shifted(fix.graph);
      bool idempotent = bi_shift_fixpoint(fix.graph).graph == fix.graph;
      bool replayed = replay(g, fix.trace) == fix.graph;
      m = {{"n", n},
           {"edges", g.edge_count()},
           {"pairs", pairs},
           {"count_violations", count_violations},
           {"rho_violations", rho_violations},
           {"min_rho_delta", min_delta},
           {"fixpoint_bi_shifted", shifted},
           {"fixpoint_idempotent", idempotent},
           {"trace_replays", replayed},
           {"trace_length", fix.trace.steps.size()}};
      return count_violations == 0 && rho_violations == 0 && shifted && idempotent && replayed;
    });
  }
}

void extremal_absence(const ExperimentConfig& c, CaseRunner& run) {
  for (int k = std::max(c.k_min, 2); k <= c.k_max; ++k) {
    for (int n = std::max(c.n_min, 2 * k); n <= c.n_max; ++n) {
      run.run({{"n", n}, {"k", k}}, [&](json& m, std::string& inst) {
        BipartiteGraph b = build_B(n, k);
        GraphFamily family(n, k, std::vector<BipartiteGraph>(k * n, b));
        inst = graph_to_text(b);
        SearchOptions opts;
        opts.budget = c.search_budget;
        SearchResult r = rainbow_k_factor_search(family, opts);
        KFactorResult kf = k_factor(b, k);
        m = {{"status", to_string(r.status)}, {"nodes", r.nodes}, {"k_factor", kf.exists}, {"flow", kf.flow}};
        return r.status == SearchStatus::Absent && !kf.exists;
      });
    }
  }
}

void extremal_construction(const ExperimentConfig& c, CaseRunner& run) {
  for (int t = 0; t < c.trials; ++t) {
    std::uint64_t seed = trial_seed(c.seed, t);
    run.run({{"trial", t}, {"trial_seed", seed}}, [&](json& m, std::string& inst) {
      Rng rng(seed);
      int k = rng.between(c.k_min, c.k_max);
      int n = rng.between(std::max(c.n_min, 2 * k), std::max(c.n_max, 2 * k));
      GraphFamily family = generate_B_variant_family(n, k, random_B_spec(n, k, rng, 3, true));
      inst = family_to_text(family);
      ConstructionResult r = construct_rainbow_factor_extremal(family);
      FactorValidation v = validate(r.factor, family);
      m = {{"n", n},
           {"k", k},
           {"distinct_deficient", r.log.distinct_deficient},
           {"k_prime", r.log.k_prime},
           {"two_swaps", r.log.repair.two_swaps},
           {"three_swaps", r.log.repair.three_swaps},
           {"validation", to_json(v)}};
      bool pass = v.ok();
      if (t < c.confirm) {
        SearchOptions opts;
        opts.budget = c.search_budget;
        SearchResult s = rainbow_k_factor_search(family, opts);
        m["search_status"] = to_string(s.status);
        pass = pass && s.status == SearchStatus::Found;
      }
      return pass;
    });
  }
}

void theorem_sample(const ExperimentConfig& c, CaseRunner& run) {
  for (int t = 0; t < c.trials; ++t) {
    std::uint64_t seed = trial_seed(c.seed, t);
    run.run({{"trial", t}, {"trial_seed", seed}}, [&](json& m, std::string& inst) {
      Rng rng(seed);
      int k = rng.between(c.k_min, c.k_max);
      int n = rng.between(std::max(c.n_min, 2 * k), std::max(c.n_max, 2 * k));
      std::vector<BipartiteGraph> members;
      if (rng.chance(0.2)) {
        members.assign(k * n, random_B_supergraph(n, k, 0.0, rng));
      } else {
        double extra = rng.uniform() * 0.3;
        for (int i = 0; i < k * n; ++i) members.push_back(random_B_supergraph(n, k, extra, rng));
      }
      GraphFamily family(n, k, members);
      inst = family_to_text(family);
      double threshold = quotient_radius(ExtremalParams{n, k, k}).value;
      bool meets = std::all_of(members.begin(), members.end(),
                               [&](const BipartiteGraph& g) { return rho(g, c.tol) >= threshold - 1e-9; });
      bool extremal = std::all_of(members.begin(), members.end(),
                                  [&](const BipartiteGraph& g) { return g == members.front(); }) &&
                      is_isomorphic_to_B(members.front(), n, k);
      SearchOptions opts;
      opts.budget = c.search_budget;
      SearchResult r = rainbow_k_factor_search(family, opts);
      m = {{"n", n}, {"k", k}, {"meets_threshold", meets}, {"extremal", extremal},
           {"status", to_string(r.status)}, {"nodes", r.nodes}};
      SearchStatus expected = extremal ? SearchStatus::Absent : SearchStatus::Found;
      return meets && r.status == expected;
    });
  }
}

void claims_audit(const ExperimentConfig& c, CaseRunner& run) {
  for (int t = 0; t < c.trials; ++t) {
    std::uint64_t seed = trial_seed(c.seed, t);
    run.run({{"trial", t}, {"trial_seed", seed}}, [&](json& m, std::string& inst) {
      Rng rng(seed);
      int k = rng.between(c.k_min, c.k_max);
      int n = rng.between(std::max(c.n_min, 2 * k), std::max(c.n_max, 2 * k));
      double extra = rng.uniform() * 0.3;
      std::vector<BipartiteGraph> shifted;
      for (int i = 0; i < k * n; ++i) {
        BipartiteGraph g = rng.chance(0.1) ? generate_random_bipartite(n, 0.5, rng)
                                           : random_B_supergraph(n, k, extra, rng);
        shifted.push_back(bi_shift_fixpoint(g).graph);
      }
      GraphFamily family(n, k, shifted);
      inst = family_to_text(family);
      ClaimsReport r = claims_check(family, quotient_radius(ExtremalParams{n, k, k}).value);
      m = {{"n", n}, {"k", k}, {"checked", r.checked}, {"violations", r.violations}};
      return r.violations == 0;
    });
  }
}

}  // namespace

CampaignReport run_campaign(const std::string& campaign, const ExperimentConfig& config) {
  CampaignReport report;
  report.campaign = campaign;
  report.config = resolve_config(campaign, config);
  const ExperimentConfig& c = report.config;
  auto start = std::chrono::steady_clock::now();
  CaseRunner runner(report);

  static const std::map<std::string, void (*)(const ExperimentConfig&, CaseRunner&)> dispatch = {
      {"spectral-consistency", spectral_consistency},
      {"lemma33-grid", join_grid},
      {"shift-properties", shift_properties},
      {"extremal-absence", extremal_absence},
      {"lemma32-construction", extremal_construction},
      {"theorem-sample", theorem_sample},
      {"claims-audit", claims_audit},
  };
  dispatch.at(campaign)(c, runner);

  std::stable_sort(report.cases.begin(), report.cases.end(),
                   [](const CaseResult& a, const CaseResult& b) { return a.params < b.params; });
  for (const auto& cs : report.cases) ++(cs.pass ? report.pass_count : report.fail_count);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

json to_json(const CampaignReport& report, bool include_timing) {
  const ExperimentConfig& c = report.config;
  json cases = json::array();
  for (const auto& cs : report.cases) {
    json j = {{"params", cs.params}, {"measured", cs.measured}, {"pass", cs.pass}};
    if (!cs.pass) j["instance"] = cs.instance;
    cases.push_back(std::move(j));
  }
  json out = {{"campaign", report.campaign},
              {"config",
               {{"seed", c.seed},
                {"n_range", {c.n_min, c.n_max}},
                {"k_range", {c.k_min, c.k_max}},
                {"trials", c.trials},
                {"tol", c.tol},
                {"search_budget", c.search_budget},
                {"confirm", c.confirm}}},
              {"cases", cases},
              {"summary", {{"pass", report.pass_count}, {"fail", report.fail_count}}}};
  if (include_timing) out["summary"]["wall_seconds"] = report.wall_seconds;
  return out;
}

}  // namespace rfl
