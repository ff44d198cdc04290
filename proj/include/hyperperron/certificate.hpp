#ifndef HYPERPERRON_CERTIFICATE_HPP
#define HYPERPERRON_CERTIFICATE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperperron/hypergraph.hpp"

namespace hyperperron {

/// Results checked by the certifier.
enum class TheoremId {
  T3_1,  // connected <=> some / all alpha_j > 0
  T3_2,  // bw(G) >= (n + (-1)^n) / (k(n+1)) sum_j alpha_j
  T3_3,  // i(G) >= (alpha + beta) / k
  T3_4,  // ecc(j) >= k / (2(k-1)(n-1) alpha_j)
  C3_5,  // diam >= k / (2(k-1)(n-1) alpha), rad >= k / (2(k-1)(n-1) beta)
  T3_6,  // alpha_j <= (k-1) d_j / (n-1)
  C3_7,  // sum_j alpha_j <= (k-1) k m / (n-1)
  T3_8,  // 2-design <=> alpha_1 = ... = alpha_n = Delta(k-1)/(n-1)
  T3_9,  // n lambda / k <= e(G) <= (n-1) lambda / (k-1); symmetric: e = k = r
  L2_3,  // e(G) >= (n/k) alpha
  T4_1,  // r_i <= 1 / alpha_i
  T4_2,  // n Kf_i - Kf <= (n-1) / alpha_i
  C4_3,  // Kf <= (n-1)/n sum_i 1/alpha_i
};

const std::vector<TheoremId>& all_theorems();
std::string to_string(TheoremId id);

enum class Outcome { Pass, Fail, Skipped, Indeterminate };
std::string to_string(Outcome o);

/// One checked instance of one result. Sides are oriented so that the claim
/// reads lhs >= rhs; slack = lhs - rhs and the certificate passes iff
/// slack >= -tol.
struct Certificate {
  TheoremId theorem = TheoremId::T3_1;
  std::string instance_id;
  std::optional<Vertex> vertex;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double tol = 0.0;
  Outcome outcome = Outcome::Skipped;
  std::string detail;
};

/// 1e-7 * max(1, |lhs|, |rhs|).
double default_tolerance(double lhs, double rhs);

Certificate inequality(TheoremId id, std::string_view instance, std::optional<Vertex> vertex, double lhs,
                       double rhs, std::string detail);
Certificate inequality(TheoremId id, std::string_view instance, std::optional<Vertex> vertex, double lhs,
                       double rhs, double tol, std::string detail);
Certificate skipped(TheoremId id, std::string_view instance, std::string reason);

/// Solver non-convergence: the comparison is recorded but cannot fail.
void mark_indeterminate(Certificate& c, std::string_view reason);

}  // namespace hyperperron

#endif  // HYPERPERRON_CERTIFICATE_HPP
