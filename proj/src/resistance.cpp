#include "hyperperron/resistance.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>

namespace hyperperron {

namespace {

constexpr double kNegativeEntry = -1e-12;
constexpr double kCrossCheck = 1e-9;

void require_graph(const Hypergraph& g) {
  if (g.k() != 2) {
    throw NotAGraph("resistance distance is defined for graphs only (k = 2), got k = " +
                    std::to_string(g.k()));
  }
}

void require_connected(const Hypergraph& g) {
  if (g.n() < 2) throw std::invalid_argument("resistance distance needs at least 2 vertices");
  if (!is_connected(g)) {
    throw SingularPrincipalSubmatrix("graph is disconnected, so every principal submatrix of L is singular");
  }
}

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(10);
  out << v;
  return out.str();
}

}  // namespace

Eigen::MatrixXd laplacian_matrix(const Hypergraph& g) {
  require_graph(g);
  const auto n = static_cast<Eigen::Index>(g.n());
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    auto a = static_cast<Eigen::Index>(e[0]);
    auto b = static_cast<Eigen::Index>(e[1]);
    l(a, a) += 1.0;
    l(b, b) += 1.0;
    l(a, b) -= 1.0;
    l(b, a) -= 1.0;
  }
  return l;
}

Eigen::MatrixXd invert_partial_pivot(const Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("matrix is not square");
  Eigen::MatrixXd work = a;
  Eigen::MatrixXd inv = Eigen::MatrixXd::Identity(n, n);
  const double scale = std::max(1.0, a.cwiseAbs().rowwise().sum().maxCoeff());
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    for (Eigen::Index row = col + 1; row < n; ++row)
      if (std::abs(work(row, col)) > std::abs(work(pivot, col))) pivot = row;
    if (std::abs(work(pivot, col)) <= 1e-12 * scale) {
      throw SingularPrincipalSubmatrix("matrix is singular to working precision (column " +
                                       std::to_string(col + 1) + ")");
    }
    work.row(col).swap(work.row(pivot));
    inv.row(col).swap(inv.row(pivot));
    const double p = work(col, col);
    work.row(col) /= p;
    inv.row(col) /= p;
    for (Eigen::Index row = 0; row < n; ++row) {
      if (row == col) continue;
      const double factor = work(row, col);
      if (factor == 0.0) continue;
      work.row(row) -= factor * work.row(col);
      inv.row(row) -= factor * inv.row(col);
    }
  }
  return inv;
}

Eigen::MatrixXd principal_inverse(const Hypergraph& g, Vertex i) {
  require_graph(g);
  if (i >= g.n()) throw std::out_of_range("vertex " + std::to_string(i + 1) + " out of range");
  require_connected(g);
  const Eigen::MatrixXd l = laplacian_matrix(g);
  const auto n = static_cast<Eigen::Index>(g.n());
  const auto skip = static_cast<Eigen::Index>(i);
  Eigen::MatrixXd sub(n - 1, n - 1);
  for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
    if (r == skip) continue;
    for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
      if (c == skip) continue;
      sub(rr, cc++) = l(r, c);
    }
    ++rr;
  }
  Eigen::MatrixXd inv = invert_partial_pivot(sub);
  if (inv.minCoeff() < kNegativeEntry) {
    throw NumericalFailure("principal inverse has negative entry " + fmt(inv.minCoeff()));
  }
  return inv;
}

Eigen::MatrixXd padded_inverse(const Hypergraph& g, Vertex i) {
  const Eigen::MatrixXd inv = principal_inverse(g, i);
  const auto n = static_cast<Eigen::Index>(g.n());
  const auto skip = static_cast<Eigen::Index>(i);
  Eigen::MatrixXd padded = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    if (r == skip) continue;
    for (Eigen::Index c = 0; c < n; ++c) {
      if (c == skip) continue;
      padded(r, c) = inv(r < skip ? r : r - 1, c < skip ? c : c - 1);
    }
  }
  return padded;
}

ResistanceReport resistance_matrix(const Hypergraph& g) { return resistance_matrix(g, g.n() - 1, 0); }

ResistanceReport resistance_matrix(const Hypergraph& g, Vertex pivot, std::uint64_t seed) {
  require_graph(g);
  require_connected(g);
  if (pivot >= g.n()) throw std::out_of_range("pivot vertex " + std::to_string(pivot + 1) + " out of range");
  const auto n = static_cast<Eigen::Index>(g.n());
  const Eigen::MatrixXd big_n = padded_inverse(g, pivot);

  ResistanceReport out;
  out.pivot = pivot;
  out.r = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (i != j) out.r(i, j) = big_n(i, i) + big_n(j, j) - big_n(i, j) - big_n(j, i);

  out.kf = static_cast<double>(n) * big_n.trace() - big_n.sum();
  out.kf_i.resize(g.n());
  out.r_i.resize(g.n());
  for (Eigen::Index i = 0; i < n; ++i) {
    out.kf_i[static_cast<std::size_t>(i)] = out.r.row(i).sum();
    out.r_i[static_cast<std::size_t>(i)] = out.r.row(i).maxCoeff();
  }

  // 1-norm condition estimate of L(pivot).
  const Eigen::MatrixXd l = laplacian_matrix(g);
  Eigen::MatrixXd sub = l;
  sub.row(static_cast<Eigen::Index>(pivot)).setZero();
  sub.col(static_cast<Eigen::Index>(pivot)).setZero();
  out.condition = sub.cwiseAbs().colwise().sum().maxCoeff() * big_n.cwiseAbs().colwise().sum().maxCoeff();

  // Diagonal identity at a second vertex: r_ij = (L(i)^{-1})_jj.
  std::mt19937_64 rng(seed);
  const auto other = static_cast<Vertex>(rng() % g.n());
  const Eigen::MatrixXd check = padded_inverse(g, other);
  const auto oi = static_cast<Eigen::Index>(other);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (j == oi) continue;
    const double expected = check(j, j);
    if (std::abs(out.r(oi, j) - expected) > kCrossCheck * std::max(1.0, expected)) {
      throw NumericalFailure("resistance between " + std::to_string(other + 1) + " and " +
                             std::to_string(j + 1) + " is " + fmt(out.r(oi, j)) + " from pivot " +
                             std::to_string(pivot + 1) + " but " + fmt(expected) + " from pivot " +
                             std::to_string(other + 1));
    }
  }
  return out;
}

std::vector<Certificate> check_resistance_bounds(const Hypergraph& g, const PerronSummary& summary,
                                                 std::string_view instance_id) {
  return check_resistance_bounds(g, summary, resistance_matrix(g), instance_id);
}

std::vector<Certificate> check_resistance_bounds(const Hypergraph& g, const PerronSummary& summary,
                                                 const ResistanceReport& report, std::string_view instance_id) {
  require_graph(g);
  if (summary.per_vertex.size() != g.n() || static_cast<std::size_t>(report.r.rows()) != g.n()) {
    throw std::invalid_argument("Perron summary or resistance report belongs to a different instance");
  }
  const double n = static_cast<double>(g.n());
  std::vector<Certificate> out;
  std::vector<Certificate> second;
  double inverse_sum = 0.0;
  bool all_converged = true;
  for (Vertex i = 0; i < g.n(); ++i) {
    const auto& pr = summary.per_vertex[i];
    if (pr.vertex != i) throw std::invalid_argument("Perron summary is not ordered by vertex");
    const double alpha = pr.value;
    inverse_sum += 1.0 / alpha;
    all_converged = all_converged && pr.converged;

    auto t41 = inequality(TheoremId::T4_1, instance_id, i, 1.0 / alpha, report.r_i[i],
                          "lhs 1/alpha_i = 1/" + fmt(alpha) + "; rhs r_i = max_j r_ij");
    auto t42 = inequality(TheoremId::T4_2, instance_id, i, (n - 1.0) / alpha, n * report.kf_i[i] - report.kf,
                          "lhs (n-1)/alpha_i; rhs n Kf_i - Kf with Kf_i = " + fmt(report.kf_i[i]) +
                              ", Kf = " + fmt(report.kf));
    if (!pr.converged) {
      mark_indeterminate(t41, "alpha_i did not converge: " + pr.note);
      mark_indeterminate(t42, "alpha_i did not converge: " + pr.note);
    }
    out.push_back(std::move(t41));
    second.push_back(std::move(t42));
  }
  for (auto& c : second) out.push_back(std::move(c));
  auto c43 = inequality(TheoremId::C4_3, instance_id, std::nullopt, (n - 1.0) / n * inverse_sum, report.kf,
                        "lhs (n-1)/n sum_i 1/alpha_i; rhs Kf");
  if (!all_converged) mark_indeterminate(c43, "some alpha_i did not converge");
  out.push_back(std::move(c43));
  return out;
}

}  // namespace hyperperron
