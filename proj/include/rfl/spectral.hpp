#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rfl/constructions.hpp"
#include "rfl/graph.hpp"

namespace rfl {

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr int kDefaultMaxIterations = 100000;

enum class SpectralMethod { PowerIteration, QuotientClosedForm, QuarticBisection };

std::string to_string(SpectralMethod m);

struct SpectralReport {
  double value = 0.0;
  SpectralMethod method = SpectralMethod::PowerIteration;
  int iterations = 0;
  double residual = 0.0;
  bool converged = false;
};

/// Raised when two independent routes to the same quantity disagree.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * ρ(A(G)) by power iteration on A + I from the all-ones vector.
 *
 * Bipartite spectra are symmetric about 0, so plain power iteration on A
 * alternates between the ±ρ eigenvectors; the unit shift makes ρ + 1 the
 * unique dominant eigenvalue. Stops once successive Rayleigh quotients differ
 * by less than tol and ‖(A+I)x − λx‖ ≤ tol for the normalized iterate. On
 * hitting the cap the report comes back with converged = false.
 */
SpectralReport spectral_radius(const BipartiteGraph& g, double tol = kDefaultTolerance,
                               int max_iterations = kDefaultMaxIterations);

/// 4x4 block quotient with block order (X1, X2, Y1, Y2).
struct QuotientMatrix4 {
  std::array<std::array<double, 4>, 4> entries{};
  std::array<int, 4> sizes{};
};

/// B_Π2 for the join graph; p = k gives B_Π1 of B_{n,k}.
QuotientMatrix4 quotient_matrix(const ExtremalParams& params);

/// Block quotient of A(G) for an arbitrary vertex partition; nullopt unless
/// every block sees a constant number of neighbors in every block.
std::optional<std::vector<std::vector<double>>> equitable_quotient(
    const BipartiteGraph& g, const std::vector<std::vector<Vertex>>& blocks);

/// x⁴ − c2·x² + c0.
struct Biquadratic {
  double c2 = 0.0;
  double c0 = 0.0;

  double operator()(double x) const { return x * x * x * x - c2 * x * x + c0; }
};

/// Characteristic polynomial of [[0, C], [D, 0]]: x⁴ − tr(CD)x² + det(CD).
Biquadratic characteristic(const QuotientMatrix4& q);

Biquadratic p1_coefficients(int n, int k);
Biquadratic p2_coefficients(const ExtremalParams& params);

double eval_P1(int n, int k, double x);
double eval_P2(const ExtremalParams& params, double x);

/// Largest real root √((c2 + √(c2² − 4c0)) / 2). Throws GraphError on
/// c2 <= 0, c0 < 0 or a negative discriminant.
double rho_from_quartic(double c2, double c0);

/// Same root by bisection on [√(c2/2), √c2].
SpectralReport rho_by_bisection(double c2, double c0, double tol = 1e-14);

/// ρ from the quotient closed form, cross-checked against bisection.
SpectralReport quotient_radius(const ExtremalParams& params);

/**
 * Recognizes a graph of the form "X1 complete to Y, X2 complete to Y1, no
 * other edges" (any labeling, all four blocks nonempty) and returns ρ from its
 * equitable quotient. Throws GraphError if g has no such structure.
 */
SpectralReport quotient_radius(const BipartiteGraph& g);

struct JoinComparison {
  ExtremalParams params;
  double rho_join = 0.0;        // closed form
  double rho_B = 0.0;           // closed form
  double rho_join_power = 0.0;  // power iteration
  double rho_B_power = 0.0;
  double margin = 0.0;          // rho_B − rho_join
  double sign_value = 0.0;      // (P1 − P2)(√(n(n−1)))
  double factored_value = 0.0;  // (k−p)(n−p)(−p² + (k+n)p + n(n−1) − 2k + 2)
  bool strict = false;          // margin > 1e-9
  bool sign_negative = false;   // sign_value < 0
  bool holds() const { return strict && sign_negative; }
};

/// Compares ρ(join) against ρ(B_{n,k}) by both closed form and power
/// iteration. Needs k+1 <= p. Throws InconsistencyError if the two routes
/// differ by more than 1e-7 or the factored sign value disagrees.
JoinComparison compare_join_to_B(const ExtremalParams& params, double tol = kDefaultTolerance);

}  // namespace rfl
