#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include <cmath>

#include "hyperperron/generators.hpp"
#include "hyperperron/resistance.hpp"
#include "oracles.hpp"

using namespace hyperperron;

namespace {

const Hypergraph kP3 = path_graph(3);

std::vector<Hypergraph> connected_graphs(std::uint64_t seed, std::size_t count, std::size_t n_max) {
  std::vector<Hypergraph> out;
  for (auto& g : oracle::random_family(seed, 4 * count, n_max, 2)) {
    if (g.n() >= 2 && is_connected(g)) out.push_back(std::move(g));
    if (out.size() == count) break;
  }
  return out;
}

}  // namespace

TEST(PrincipalInverse, Examples) {
  auto p = principal_inverse(kP3, 0);
  EXPECT_TRUE(p.isApprox((Eigen::Matrix2d() << 1, 1, 1, 2).finished(), 1e-14));
  auto k = principal_inverse(complete_graph(4), 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) EXPECT_NEAR(k(r, c), r == c ? 0.5 : 0.25, 1e-14);
  auto e = principal_inverse(complete_graph(2), 1);
  ASSERT_EQ(e.rows(), 1);
  EXPECT_NEAR(e(0, 0), 1.0, 1e-14);
}

TEST(PrincipalInverse, Errors) {
  EXPECT_THROW(principal_inverse(parse_string("3 3\n1 2 3\n"), 0), NotAGraph);
  EXPECT_THROW(principal_inverse(parse_string("4 2\n1 2\n3 4\n"), 0), SingularPrincipalSubmatrix);
  EXPECT_THROW(principal_inverse(kP3, 3), std::out_of_range);
  EXPECT_THROW(invert_partial_pivot(Eigen::MatrixXd::Zero(2, 2)), SingularPrincipalSubmatrix);
}

TEST(PrincipalInverse, IsEntrywiseNonnegativeAndInverts) {
  for (const auto& g : connected_graphs(61, 40, 12)) {
    const Eigen::MatrixXd l = laplacian_matrix(g);
    for (Vertex i = 0; i < g.n(); ++i) {
      Eigen::MatrixXd inv = padded_inverse(g, i);
      EXPECT_GE(inv.minCoeff(), 0.0);
      EXPECT_LE((l * inv * l - l).cwiseAbs().maxCoeff(), 1e-9);
    }
  }
}

TEST(Resistance, Examples) {
  auto p = resistance_matrix(kP3);
  EXPECT_NEAR(p.r(0, 1), 1.0, 1e-12);
  EXPECT_NEAR(p.r(1, 2), 1.0, 1e-12);
  EXPECT_NEAR(p.r(0, 2), 2.0, 1e-12);
  EXPECT_NEAR(p.kf, 4.0, 1e-12);
  EXPECT_NEAR(p.kf_i[0], 3.0, 1e-12);
  EXPECT_NEAR(principal_inverse(kP3, 0).trace(), 3.0, 1e-12);

  auto c = resistance_matrix(cycle_graph(4));
  EXPECT_NEAR(c.r(0, 1), 0.75, 1e-12);
  EXPECT_NEAR(c.r(0, 2), 1.0, 1e-12);

  auto e = resistance_matrix(complete_graph(2));
  EXPECT_NEAR(e.r(0, 1), 1.0, 1e-12);
  EXPECT_NEAR(e.kf, 1.0, 1e-12);
}

TEST(Resistance, PathAndCycleFamilies) {
  for (std::size_t n = 2; n <= 12; ++n) {
    auto p = resistance_matrix(path_graph(n));
    EXPECT_NEAR(p.r(0, static_cast<Eigen::Index>(n - 1)), static_cast<double>(n - 1), 1e-10);
  }
  for (std::size_t n = 3; n <= 12; ++n) {
    auto c = resistance_matrix(cycle_graph(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t d = (j + n - i) % n;
        const double expected = static_cast<double>(d * (n - d)) / static_cast<double>(n);
        EXPECT_NEAR(c.r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)), expected, 1e-10);
      }
    }
  }
}

TEST(Resistance, PivotIndependence) {
  for (const auto& g : connected_graphs(62, 40, 12)) {
    auto base = resistance_matrix(g);
    for (Vertex p = 0; p < g.n(); ++p) {
      auto other = resistance_matrix(g, p, 7);
      EXPECT_LE((other.r - base.r).cwiseAbs().maxCoeff(), 1e-9);
      EXPECT_NEAR(other.kf, base.kf, 1e-9 * std::max(1.0, base.kf));
    }
  }
}

TEST(Resistance, FosterSumOverEdges) {
  for (const auto& g : connected_graphs(63, 40, 12)) {
    auto r = resistance_matrix(g);
    double total = 0.0;
    for (const auto& e : g.edges())
      total += r.r(static_cast<Eigen::Index>(e[0]), static_cast<Eigen::Index>(e[1]));
    EXPECT_NEAR(total, static_cast<double>(g.n() - 1), 1e-9);
  }
}

TEST(Resistance, KirchhoffIndexFromLaplacianSpectrum) {
  for (const auto& g : connected_graphs(64, 40, 12)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(laplacian_matrix(g));
    double expected = 0.0;
    for (Eigen::Index i = 1; i < eig.eigenvalues().size(); ++i) expected += 1.0 / eig.eigenvalues()(i);
    expected *= static_cast<double>(g.n());
    auto r = resistance_matrix(g);
    EXPECT_NEAR(r.kf, expected, 1e-9 * expected);
    EXPECT_NEAR(r.r.sum() / 2.0, r.kf, 1e-9 * r.kf);
  }
}

TEST(Resistance, IsAMetric) {
  for (const auto& g : connected_graphs(65, 30, 10)) {
    auto r = resistance_matrix(g).r;
    const auto n = r.rows();
    for (Eigen::Index a = 0; a < n; ++a) {
      EXPECT_EQ(r(a, a), 0.0);
      for (Eigen::Index b = 0; b < n; ++b) {
        EXPECT_NEAR(r(a, b), r(b, a), 1e-12);
        if (a != b) {
          EXPECT_GT(r(a, b), 0.0);
        }
        for (Eigen::Index c = 0; c < n; ++c) EXPECT_LE(r(a, b), r(a, c) + r(c, b) + 1e-12);
      }
    }
  }
}

TEST(Resistance, BoundedByGraphDistance) {
  for (const auto& g : connected_graphs(66, 30, 12)) {
    auto r = resistance_matrix(g).r;
    for (Vertex a = 0; a < g.n(); ++a)
      for (Vertex b = 0; b < g.n(); ++b)
        EXPECT_LE(r(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)),
                  static_cast<double>(*distance(g, a, b)) + 1e-12);
  }
}

TEST(ResistanceBounds, PathOnThreeVertices) {
  auto certs = check_resistance_bounds(kP3, perron_summary(kP3), "P3");
  ASSERT_EQ(certs.size(), 7u);
  const double alpha1 = (3.0 - std::sqrt(5.0)) / 2.0;
  const auto& t41 = certs[0];
  EXPECT_EQ(t41.theorem, TheoremId::T4_1);
  EXPECT_NEAR(t41.lhs, 1.0 / alpha1, 1e-7);
  EXPECT_NEAR(t41.rhs, 2.0, 1e-12);
  const auto& t42 = certs[3];
  EXPECT_EQ(t42.theorem, TheoremId::T4_2);
  EXPECT_NEAR(t42.rhs, 5.0, 1e-12);
  EXPECT_NEAR(t42.lhs, 2.0 / alpha1, 1e-7);
  EXPECT_NEAR(t42.lhs, 5.2360680, 1e-7);
  const auto& c43 = certs.back();
  EXPECT_EQ(c43.theorem, TheoremId::C4_3);
  EXPECT_NEAR(c43.rhs, 4.0, 1e-12);
  EXPECT_NEAR(c43.lhs, 2.0 / 3.0 * (4.0 + std::sqrt(5.0)), 1e-7);
  for (const auto& c : certs) EXPECT_EQ(c.outcome, Outcome::Pass);
}

TEST(ResistanceBounds, HoldOnRandomConnectedGraphs) {
  for (const auto& g : connected_graphs(67, 40, 12)) {
    for (const auto& c : check_resistance_bounds(g, perron_summary(g))) {
      EXPECT_EQ(c.outcome, Outcome::Pass) << to_string(c.theorem) << " " << render(g);
    }
  }
}
