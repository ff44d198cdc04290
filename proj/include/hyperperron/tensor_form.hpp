#ifndef HYPERPERRON_TENSOR_FORM_HPP
#define HYPERPERRON_TENSOR_FORM_HPP

#include <span>
#include <vector>

#include "hyperperron/hypergraph.hpp"

namespace hyperperron {

// Evaluation of the Laplacian tensor L = D - A of a k-uniform hypergraph,
// summed edge by edge. The order-k tensor is never stored.

/// L x^k = sum over edges e of (sum_{i in e} x_i^k - k prod_{i in e} x_i).
double laplacian_form(const Hypergraph& h, std::span<const double> x);

/// (L x^{k-1})_i = d_i x_i^{k-1} - sum_{e ni i} prod_{l in e, l != i} x_l.
std::vector<double> laplacian_apply(const Hypergraph& h, std::span<const double> x);

/// Principal subtensor L(j) applied to y, where y is indexed by V \ {j} in
/// increasing vertex order (length n-1). Diagonal terms keep full degrees;
/// only edges avoiding j contribute off-diagonal terms.
std::vector<double> principal_apply(const Hypergraph& h, Vertex j, std::span<const double> y);

/// Inserts a zero at position j.
std::vector<double> embed_without(Vertex j, std::span<const double> y);
/// Drops position j.
std::vector<double> restrict_without(Vertex j, std::span<const double> x);

struct HEigenResidual {
  double lambda = 0.0;
  double residual_inf = 0.0;
  std::vector<Vertex> support;  // full-graph vertex ids
};

/// Max-norm of L(j) y^{k-1} - lambda y^{[k-1]} over the support
/// {i : y_i > 1e-9 max(y)}. y is indexed as in principal_apply and must be
/// nonnegative and nonzero.
HEigenResidual h_eigen_residual(const Hypergraph& h, Vertex j, double lambda,
                                std::span<const double> y);

/// Relative support threshold for residual checks.
inline constexpr double kSupportTolerance = 1e-9;

}  // namespace hyperperron

#endif  // HYPERPERRON_TENSOR_FORM_HPP
