#ifndef HYPERPERRON_RESISTANCE_HPP
#define HYPERPERRON_RESISTANCE_HPP

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "hyperperron/certificate.hpp"
#include "hyperperron/hypergraph.hpp"
#include "hyperperron/perron.hpp"

namespace hyperperron {

// Electrical quantities of connected graphs (k = 2 only), computed from
// inverses of principal submatrices L(i) of the Laplacian. Padding L(i)^{-1}
// with a zero row and column at i gives a symmetric {1}-inverse N of L
// (L N L = L), from which
//
//   r_ij = N_ii + N_jj - N_ij - N_ji,   Kf = n tr(N) - e^T N e.

class NotAGraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// L(i) is singular exactly when the graph is disconnected.
class SingularPrincipalSubmatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The elimination produced a result contradicting M-matrix theory
/// (a negative inverse entry or inconsistent resistances).
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Eigen::MatrixXd laplacian_matrix(const Hypergraph& g);

/// Inverse of L with row and column i deleted, rows ordered by vertex id.
Eigen::MatrixXd principal_inverse(const Hypergraph& g, Vertex i);

/// n x n matrix holding principal_inverse(g, i) with a zero row/column at i.
Eigen::MatrixXd padded_inverse(const Hypergraph& g, Vertex i);

/// Inverse by Gauss-Jordan elimination with partial pivoting. Throws
/// SingularPrincipalSubmatrix on a vanishing pivot.
Eigen::MatrixXd invert_partial_pivot(const Eigen::MatrixXd& a);

struct ResistanceReport {
  Eigen::MatrixXd r;          // pairwise resistance distances
  double kf = 0.0;            // Kirchhoff index
  std::vector<double> kf_i;   // resistance centralities sum_j r_ij
  std::vector<double> r_i;    // resistance eccentricities max_j r_ij
  Vertex pivot = 0;
  double condition = 0.0;     // 1-norm condition estimate of L(pivot)
};

/// Resistances from the {1}-inverse at `pivot` (default: the last vertex),
/// cross-checked against r_ij = (L(i)^{-1})_jj at a second, seeded vertex.
ResistanceReport resistance_matrix(const Hypergraph& g);
ResistanceReport resistance_matrix(const Hypergraph& g, Vertex pivot, std::uint64_t seed = 0);

/// Certificates for r_i <= 1/alpha_i and n Kf_i - Kf <= (n-1)/alpha_i per
/// vertex, and Kf <= (n-1)/n sum 1/alpha_i.
std::vector<Certificate> check_resistance_bounds(const Hypergraph& g, const PerronSummary& summary,
                                        std::string_view instance_id = "");
std::vector<Certificate> check_resistance_bounds(const Hypergraph& g, const PerronSummary& summary,
                                        const ResistanceReport& report, std::string_view instance_id = "");

}  // namespace hyperperron

#endif  // HYPERPERRON_RESISTANCE_HPP
