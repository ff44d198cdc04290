#ifndef HYPERPERRON_PERRON_HPP
#define HYPERPERRON_PERRON_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hyperperron/hypergraph.hpp"

namespace hyperperron {

// Inverse Perron values
//
//   alpha_j(G) = min { L x^k : x >= 0, sum_i x_i^k = 1, x_j = 0 }
//
// equal to the smallest H-eigenvalue of the principal subtensor L(j). Two
// independent solvers are provided and cross-checked:
//
//  * projected gradient on the simplex after substituting y_i = x_i^k, which
//    turns the objective into sum_i d_i y_i - k sum_e prod_{i in e} y_i^{1/k}
//    (a convex function, since geometric means are concave);
//  * shifted power iteration: alpha_j = s - rho(s I - L(j)), with s = Delta + 1
//    and rho computed per block of the sub-hypergraph of edges avoiding j.
//
// For k = 2 the principal submatrix is also handed to a dense symmetric
// eigensolver.

enum class Method { Auto, ProjectedGradient, ShiftedPower, Both };
enum class MethodTag { ProjectedGradient, ShiftedPower, ExactK2, BlockReduction };

std::string to_string(Method m);
std::string to_string(MethodTag m);
/// Accepts "auto", "pg", "power", "both".
Method parse_method(const std::string& name);

struct SolverOptions {
  double tol = 1e-10;
  std::size_t max_iter = 50000;
  std::size_t starts = 16;
  std::uint64_t seed = 0;
  Method method = Method::Auto;
  double connectivity_tol = 1e-8;
  /// Worker threads for per-vertex work; 0 means available parallelism.
  std::size_t threads = 1;
};

struct PerronResult {
  Vertex vertex = 0;
  double value = 0.0;
  /// Length n, minimizer[vertex] == 0, sum of k-th powers == 1.
  std::vector<double> minimizer;
  double kkt_residual = 0.0;
  std::size_t iterations = 0;
  MethodTag method = MethodTag::ShiftedPower;
  bool converged = false;
  /// Free-form diagnostics (cross-check gaps, budget messages).
  std::string note;
};

struct PerronSummary {
  std::vector<PerronResult> per_vertex;
  double alpha = 0.0;
  double beta = 0.0;
  Vertex argmin_vertex = 0;
  Vertex argmax_vertex = 0;
  bool converged = false;
};

PerronResult inverse_perron(const Hypergraph& h, Vertex j, const SolverOptions& opts = {});
PerronSummary perron_summary(const Hypergraph& h, const SolverOptions& opts = {});
bool is_connected_spectral(const Hypergraph& h, const SolverOptions& opts = {});

PerronResult solve_projected_gradient(const Hypergraph& h, Vertex j, const SolverOptions& opts = {});
PerronResult solve_shifted_power(const Hypergraph& h, Vertex j, const SolverOptions& opts = {});
/// k = 2 only: smallest eigenvalue of the principal submatrix L(j).
PerronResult solve_exact_k2(const Hypergraph& h, Vertex j);

/// Minimum of L x^k over the lattice y = c / resolution on the simplex
/// {y >= 0, sum y = 1, y_j = 0}, mapped through x = y^{1/k}. An upper bound
/// on alpha_j. Requires n - 1 <= 5.
double oracle_grid(const Hypergraph& h, Vertex j, std::size_t resolution);

}  // namespace hyperperron

#endif  // HYPERPERRON_PERRON_HPP
