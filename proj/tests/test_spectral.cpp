#include <cmath>
#include <cstdlib>

#include "doctest.h"
#include "oracles.hpp"
#include "rfl/constructions.hpp"
#include "rfl/harness.hpp"
#include "rfl/spectral.hpp"

using namespace rfl;

namespace {

// Frozen from numpy.linalg.eigvalsh on the dense adjacency matrices.
constexpr double kRhoB42 = 3.502325127303;
constexpr double kRhoJoin423 = 3.236067977500;  // 1 + sqrt(5)
constexpr double kRhoB63 = 5.540481789222;
constexpr double kRhoJoin634 = 5.231569255668;

}  // namespace

TEST_CASE("power iteration on small graphs") {
  auto single = spectral_radius(BipartiteGraph(3, {{1, 4}}));
  CHECK(single.converged);
  CHECK(single.value == doctest::Approx(1.0).epsilon(1e-10));

  auto k43 = spectral_radius(build_complete_bipartite(4, 3, 0, 0, 4));
  CHECK(k43.value == doctest::Approx(std::sqrt(12.0)).epsilon(1e-10));

  auto b = spectral_radius(build_B(4, 2));
  CHECK(b.converged);
  CHECK(b.residual <= kDefaultTolerance);
  CHECK(std::abs(b.value - kRhoB42) < 1e-9);
  CHECK(std::abs(b.value - std::sqrt((13 + std::sqrt(133.0)) / 2)) < 1e-9);
  CHECK(std::abs(b.value - oracle::dense_rho(build_B(4, 2))) < 1e-9);

  CHECK(spectral_radius(BipartiteGraph(4)).value < 1e-12);
  CHECK_THROWS_AS(spectral_radius(build_B(4, 2), 0.0), GraphError);
}

TEST_CASE("power iteration on disconnected graphs takes the largest component") {
  // K_{2,2} on {1,2,5,6} plus a single edge {4,8}.
  BipartiteGraph g(4, {{1, 5}, {1, 6}, {2, 5}, {2, 6}, {4, 8}});
  auto r = spectral_radius(g);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("power iteration reports non-convergence at the cap") {
  auto r = spectral_radius(build_B(6, 3), 1e-10, 2);
  CHECK_FALSE(r.converged);
  CHECK(r.iterations == 2);
}

TEST_CASE("power iteration agrees with a dense eigensolver") {
  Rng rng(41);
  for (int t = 0; t < 150; ++t) {
    int n = rng.between(1, 9);
    BipartiteGraph g = generate_random_bipartite(n, rng.uniform(), rng);
    auto r = spectral_radius(g);
    CAPTURE(t);
    REQUIRE(r.converged);
    CHECK(r.residual <= kDefaultTolerance);
    CHECK(std::abs(r.value - oracle::dense_rho(g)) < 1e-7);
  }
}

TEST_CASE("quotient matrices") {
  auto b = quotient_matrix({4, 2, 2});
  CHECK(b.entries == std::array<std::array<double, 4>, 4>{
                         {{0, 0, 3, 1}, {0, 0, 3, 0}, {1, 3, 0, 0}, {1, 0, 0, 0}}});
  CHECK(b.sizes == std::array<int, 4>{1, 3, 3, 1});

  auto j = quotient_matrix({4, 2, 3});
  CHECK(j.entries == std::array<std::array<double, 4>, 4>{
                         {{0, 0, 2, 2}, {0, 0, 2, 0}, {2, 2, 0, 0}, {2, 0, 0, 0}}});
  CHECK(j.sizes == std::array<int, 4>{2, 2, 2, 2});

  CHECK_THROWS_AS(quotient_matrix({4, 2, 4}), GraphError);
  CHECK_THROWS_AS(quotient_matrix({3, 2, 2}), GraphError);
}

TEST_CASE("quotient matrices are the equitable quotients of the built graphs") {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 2 * k; n <= 10; ++n) {
      for (int p = k; p <= n - 1; ++p) {
        ExtremalParams params{n, k, p};
        QuotientMatrix4 q = quotient_matrix(params);
        // Double counting across blocks.
        for (int a = 0; a < 4; ++a)
          for (int c = 0; c < 4; ++c)
            CHECK(q.entries[a][c] * q.sizes[a] == q.entries[c][a] * q.sizes[c]);
        // Irreducible: the block digraph is strongly connected.
        for (int a = 0; a < 4; ++a) {
          int reach = 1 << a;
          for (int step = 0; step < 4; ++step)
            for (int u = 0; u < 4; ++u)
              if (reach >> u & 1)
                for (int v = 0; v < 4; ++v)
                  if (q.entries[u][v] > 0) reach |= 1 << v;
          CHECK(reach == 0xF);
        }
        std::vector<std::vector<Vertex>> blocks(4);
        int start[4] = {1, p, n + 1, 2 * n + k - p};
        for (int a = 0; a < 4; ++a)
          for (int i = 0; i < q.sizes[a]; ++i) blocks[a].push_back(start[a] + i);
        auto eq = equitable_quotient(build_join(params), blocks);
        REQUIRE(eq);
        for (int a = 0; a < 4; ++a)
          for (int c = 0; c < 4; ++c) CHECK((*eq)[a][c] == q.entries[a][c]);
      }
    }
  }
}

TEST_CASE("equitable_quotient rejects a non-equitable partition") {
  BipartiteGraph g(2, {{1, 3}});
  CHECK_FALSE(equitable_quotient(g, {{1, 2}, {3, 4}}));
  CHECK(equitable_quotient(g, {{1}, {2}, {3}, {4}}));
}

TEST_CASE("characteristic polynomials") {
  auto p1 = p1_coefficients(4, 2);
  CHECK(p1.c2 == 13);
  CHECK(p1.c0 == 9);
  CHECK(characteristic(quotient_matrix({4, 2, 2})).c2 == 13);
  CHECK(characteristic(quotient_matrix({4, 2, 2})).c0 == 9);

  auto p2 = p2_coefficients({4, 2, 3});
  CHECK(p2.c2 == 12);
  CHECK(p2.c0 == 16);
  auto ch = characteristic(quotient_matrix({4, 2, 3}));
  CHECK(ch.c2 == 12);
  CHECK(ch.c0 == 16);

  for (int k = 2; k <= 5; ++k) {
    for (int n = 2 * k; n <= 12; ++n) {
      for (int p = k; p <= n - 1; ++p) {
        auto a = characteristic(quotient_matrix({n, k, p}));
        auto b = p2_coefficients({n, k, p});
        CHECK(a.c2 == b.c2);
        CHECK(a.c0 == b.c0);
      }
    }
  }
}

TEST_CASE("eval_P1") {
  CHECK(eval_P1(4, 2, 0.0) == 9.0);
  CHECK(std::abs(eval_P1(4, 2, kRhoB42)) < 1e-5);
  CHECK(eval_P1(4, 2, std::sqrt(12.0)) == doctest::Approx(-3.0).epsilon(1e-12));
}

TEST_CASE("eval_P2") {
  CHECK(eval_P2({4, 2, 3}, 0.0) == 16.0);
  CHECK(std::abs(eval_P2({4, 2, 3}, kRhoJoin423)) < 1e-8);
  CHECK(std::abs(eval_P2({4, 2, 3}, quotient_radius(build_join({4, 2, 3})).value)) < 1e-9);

  Rng rng(8);
  for (int k = 2; k <= 4; ++k) {
    for (int n = 2 * k; n <= 10; ++n) {
      for (int s = 0; s < 5; ++s) {
        double x = 10 * rng.uniform();
        CHECK(eval_P2({n, k, k}, x) == doctest::Approx(eval_P1(n, k, x)).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("rho_from_quartic") {
  CHECK(std::abs(rho_from_quartic(13, 9) - kRhoB42) < 1e-11);
  CHECK(rho_from_quartic(1, 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(rho_from_quartic(8, 8) - 2.613125929752753) < 1e-12);
  CHECK(std::abs(rho_from_quartic(12, 16) - kRhoJoin423) < 1e-11);
  CHECK_THROWS_AS(rho_from_quartic(1, 1), GraphError);
  CHECK_THROWS_AS(rho_from_quartic(-1, 0), GraphError);
  CHECK_THROWS_AS(rho_from_quartic(4, -1), GraphError);

  for (double c2 : {1.0, 5.0, 13.0, 40.0}) {
    for (double frac : {0.0, 0.1, 0.24}) {
      double c0 = frac * c2 * c2;
      CHECK(rho_by_bisection(c2, c0).value == doctest::Approx(rho_from_quartic(c2, c0)).epsilon(1e-12));
    }
    // Double root: f is flat there, so bisection only resolves about sqrt(eps).
    double c0 = 0.25 * c2 * c2;
    CHECK(std::abs(rho_by_bisection(c2, c0).value - rho_from_quartic(c2, c0)) < 1e-7);
  }
}

TEST_CASE("quotient_radius of a graph matches dense eigensolve") {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 2 * k; n <= 10; ++n) {
      for (int p = k; p <= n - 1; ++p) {
        BipartiteGraph g = build_join({n, k, p});
        CHECK(std::abs(quotient_radius(g).value - oracle::dense_rho(g)) < 1e-9);
        CHECK(std::abs(quotient_radius({n, k, p}).value - oracle::dense_rho(g)) < 1e-9);
      }
    }
  }
  CHECK_THROWS_AS(quotient_radius(build_complete_bipartite(3, 3, 0, 0, 3)), GraphError);
  CHECK_THROWS_AS(quotient_radius(BipartiteGraph(3, {{1, 4}, {2, 5}})), GraphError);
}

TEST_CASE("join versus B comparison") {
  auto r = compare_join_to_B({4, 2, 3});
  CHECK(r.holds());
  CHECK(std::abs(r.rho_B - kRhoB42) < 1e-9);
  CHECK(std::abs(r.rho_join - kRhoJoin423) < 1e-9);
  CHECK(std::abs(r.margin - 0.266257149803) < 1e-9);
  CHECK(r.sign_value == doctest::Approx(-19.0).epsilon(1e-9));
  CHECK(r.factored_value == -19.0);

  auto r2 = compare_join_to_B({6, 3, 4});
  CHECK(r2.holds());
  CHECK(std::abs(r2.rho_B - kRhoB63) < 1e-9);
  CHECK(std::abs(r2.rho_join - kRhoJoin634) < 1e-9);
  CHECK(std::abs(r2.rho_B - oracle::dense_rho(build_B(6, 3))) < 1e-9);
  CHECK(std::abs(r2.rho_join - oracle::dense_rho(build_join({6, 3, 4}))) < 1e-9);

  CHECK_THROWS_AS(compare_join_to_B({4, 2, 2}), GraphError);
}

TEST_CASE("join versus B over a wider grid") {
  for (int k = 2; k <= 5; ++k) {
    for (int n = 2 * k; n <= 12; ++n) {
      for (int p = k + 1; p <= n - 1; ++p) {
        auto r = compare_join_to_B({n, k, p});
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(p);
        CHECK(r.holds());
        CHECK(std::abs(r.rho_join_power - oracle::dense_rho(build_join({n, k, p}))) < 1e-7);
      }
    }
  }
}

TEST_CASE("default tolerance honors the environment") {
  ::unsetenv("RFL_DEFAULT_TOL");
  CHECK(default_tolerance() == kDefaultTolerance);
  ::setenv("RFL_DEFAULT_TOL", "1e-6", 1);
  CHECK(default_tolerance() == 1e-6);
  ::setenv("RFL_DEFAULT_TOL", "garbage", 1);
  CHECK(default_tolerance() == kDefaultTolerance);
  ::unsetenv("RFL_DEFAULT_TOL");
}
