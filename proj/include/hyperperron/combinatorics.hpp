#ifndef HYPERPERRON_COMBINATORICS_HPP
#define HYPERPERRON_COMBINATORICS_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hyperperron/hypergraph.hpp"

namespace hyperperron {

// Exact cut quantities by exhaustive enumeration. Every routine refuses
// instances above its size gate instead of approximating.

class EnumerationTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kBalancedCutLimit = 14;  // bw(G), i(G)
inline constexpr std::size_t kEdgeConnectivityLimit = 20;

struct CutReport {
  std::vector<Vertex> subset;  // sorted
  std::size_t cut_size = 0;
  /// Mean of |e ∩ S| over cut edges; 0 when the cut is empty.
  double t_value = 0.0;
  bool empty_cut = true;
};

/// |E(S, S̄)| and t(S). S must be a proper nonempty subset.
CutReport cut(const Hypergraph& h, std::span<const Vertex> subset);

struct CutOptimum {
  std::size_t cut_size = 0;
  std::vector<Vertex> witness;  // lexicographically smallest optimal set
};

/// bw(G): minimum cut over subsets of size floor(n/2).
CutOptimum bipartition_width(const Hypergraph& h);

struct IsoperimetricOptimum {
  double value = 0.0;  // cut_size / witness.size()
  std::size_t cut_size = 0;
  std::vector<Vertex> witness;
};

/// i(G): minimum of |E(S,S̄)|/|S| over nonempty S with |S| <= n/2.
IsoperimetricOptimum isoperimetric_number(const Hypergraph& h);

/// e(G): minimum cut over proper nonempty subsets; 0 iff disconnected.
CutOptimum edge_connectivity(const Hypergraph& h);

/// Parameters of a 2-(n,b,k,r,lambda) design. Construction enforces
/// lambda(n-1) = r(k-1) and nr = bk.
class DesignParams {
 public:
  DesignParams(std::size_t n, std::size_t b, std::size_t k, std::size_t r, std::size_t lambda);

  std::size_t n() const { return n_; }
  std::size_t b() const { return b_; }
  std::size_t k() const { return k_; }
  std::size_t r() const { return r_; }
  std::size_t lambda() const { return lambda_; }
  bool symmetric() const { return n_ == b_; }

  friend bool operator==(const DesignParams&, const DesignParams&) = default;

 private:
  std::size_t n_, b_, k_, r_, lambda_;
};

/// Parameters when every vertex has the same degree r and every vertex pair
/// lies in the same number lambda >= 1 of edges; std::nullopt otherwise.
std::optional<DesignParams> detect_2_design(const Hypergraph& h);

struct DesignBounds {
  double lower = 0.0;  // n lambda / k
  double upper = 0.0;  // (n-1) lambda / (k-1)
  /// Exact edge connectivity k (= r) for symmetric designs.
  std::optional<std::size_t> exact;
};

DesignBounds design_edge_connectivity_bounds(const DesignParams& d);

}  // namespace hyperperron

#endif  // HYPERPERRON_COMBINATORICS_HPP
