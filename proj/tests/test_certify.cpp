#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "hyperperron/certify.hpp"
#include "hyperperron/generators.hpp"
#include "hyperperron/report.hpp"
#include "oracles.hpp"

using namespace hyperperron;

namespace {

std::vector<Certificate> of(const std::vector<Certificate>& certs, TheoremId id) {
  std::vector<Certificate> out;
  for (const auto& c : certs)
    if (c.theorem == id) out.push_back(c);
  return out;
}

bool per_vertex(TheoremId id) {
  return id == TheoremId::T3_4 || id == TheoremId::T3_6 || id == TheoremId::T4_1 || id == TheoremId::T4_2;
}

// Every theorem id appears; per-vertex results appear once per vertex unless
// skipped, everything else exactly once.
void expect_complete(const Hypergraph& h, const std::vector<Certificate>& certs) {
  for (TheoremId id : all_theorems()) {
    auto mine = of(certs, id);
    ASSERT_FALSE(mine.empty()) << to_string(id);
    if (mine.size() == 1 && mine[0].outcome == Outcome::Skipped) {
      EXPECT_FALSE(mine[0].detail.empty());
      continue;
    }
    if (per_vertex(id)) {
      ASSERT_EQ(mine.size(), h.n()) << to_string(id);
      for (Vertex v = 0; v < h.n(); ++v) EXPECT_EQ(mine[v].vertex, std::optional<Vertex>{v});
    } else {
      EXPECT_EQ(mine.size(), 1u) << to_string(id);
      EXPECT_FALSE(mine[0].vertex.has_value());
    }
  }
}

}  // namespace

TEST(Certificate, OrientationAndTolerance) {
  auto ok = inequality(TheoremId::T3_3, "x", std::nullopt, 2.0, 1.0, "");
  EXPECT_EQ(ok.outcome, Outcome::Pass);
  EXPECT_DOUBLE_EQ(ok.slack, 1.0);
  EXPECT_DOUBLE_EQ(ok.tol, 2e-7);
  auto edge = inequality(TheoremId::T3_3, "x", std::nullopt, 1.0 - 0.5e-7, 1.0, "");
  EXPECT_EQ(edge.outcome, Outcome::Pass);
  auto bad = inequality(TheoremId::T3_3, "x", std::nullopt, 1.0 - 2e-7, 1.0, "");
  EXPECT_EQ(bad.outcome, Outcome::Fail);
  EXPECT_EQ(inequality(TheoremId::T3_3, "x", std::nullopt, NAN, 1.0, "").outcome, Outcome::Fail);
  EXPECT_DOUBLE_EQ(default_tolerance(-3e3, 5.0), 3e-4);
}

TEST(Certificate, FabricatedViolationsFail) {
  for (const auto& c : certify_instance(fano_plane(), "fano")) {
    if (c.outcome == Outcome::Skipped) continue;
    auto forged = inequality(c.theorem, c.instance_id, c.vertex, c.rhs - 1.0, c.rhs, c.tol, c.detail);
    EXPECT_EQ(forged.outcome, Outcome::Fail) << to_string(c.theorem);
  }
}

TEST(Certificate, IndeterminateNeverFails) {
  auto c = inequality(TheoremId::T3_6, "x", 0, 0.0, 5.0, "");
  mark_indeterminate(c, "budget");
  EXPECT_EQ(c.outcome, Outcome::Indeterminate);
  EXPECT_NE(c.detail.find("budget"), std::string::npos);

  SolverOptions o;
  o.max_iter = 1;
  o.method = Method::ShiftedPower;
  auto certs = certify_instance(random_uniform(7, 3, 12, 4), "starved", o);
  bool any = false;
  for (const auto& cert : certs) {
    EXPECT_NE(cert.outcome, Outcome::Fail) << to_string(cert.theorem);
    any = any || cert.outcome == Outcome::Indeterminate;
  }
  EXPECT_TRUE(any);
}

TEST(CertifyInstance, PathOnThreeVertices) {
  auto certs = certify_instance(path_graph(3), "P3");
  auto t33 = of(certs, TheoremId::T3_3);
  ASSERT_EQ(t33.size(), 1u);
  EXPECT_DOUBLE_EQ(t33[0].lhs, 1.0);
  EXPECT_NEAR(t33[0].rhs, 0.690983, 1e-6);
  EXPECT_EQ(t33[0].outcome, Outcome::Pass);
  for (const auto& c : certs) {
    const auto expected = c.theorem == TheoremId::T3_9 ? Outcome::Skipped : Outcome::Pass;
    EXPECT_EQ(c.outcome, expected) << to_string(c.theorem);
  }
  expect_complete(path_graph(3), certs);
}

TEST(CertifyInstance, FanoPlane) {
  auto certs = certify_instance(fano_plane(), "fano");
  expect_complete(fano_plane(), certs);
  auto t38 = of(certs, TheoremId::T3_8);
  ASSERT_EQ(t38.size(), 1u);
  EXPECT_EQ(t38[0].outcome, Outcome::Pass);
  EXPECT_NE(t38[0].detail.find("design=true, spectral=true"), std::string::npos);
  auto t39 = of(certs, TheoremId::T3_9);
  ASSERT_EQ(t39.size(), 1u);
  EXPECT_EQ(t39[0].outcome, Outcome::Pass);
  EXPECT_DOUBLE_EQ(t39[0].lhs, 3.0);
  EXPECT_DOUBLE_EQ(t39[0].rhs, 3.0);
  for (TheoremId id : {TheoremId::T4_1, TheoremId::T4_2, TheoremId::C4_3})
    EXPECT_EQ(of(certs, id)[0].outcome, Outcome::Skipped);
  for (const auto& c : certs) EXPECT_NE(c.outcome, Outcome::Fail);
}

TEST(CertifyInstance, TwoDisjointEdges) {
  auto g = parse_string("4 2\n1 2\n3 4\n");
  auto certs = certify_instance(g, "split");
  expect_complete(g, certs);
  auto t31 = of(certs, TheoremId::T3_1);
  ASSERT_EQ(t31.size(), 1u);
  EXPECT_EQ(t31[0].outcome, Outcome::Pass);
  EXPECT_NE(t31[0].detail.find("connected=false"), std::string::npos);
  for (TheoremId id : {TheoremId::T3_4, TheoremId::C3_5, TheoremId::T3_8, TheoremId::T4_1})
    EXPECT_EQ(of(certs, id)[0].outcome, Outcome::Skipped) << to_string(id);
}

TEST(CertifyInstance, CompleteOnRandomInstances) {
  for (const auto& h : oracle::random_family(71, 60, 8, 4)) {
    auto certs = certify_instance(h, "random");
    expect_complete(h, certs);
    for (const auto& c : certs) EXPECT_NE(c.outcome, Outcome::Fail) << to_string(c.theorem) << "\n" << render(h);
  }
}

TEST(CertifyInstance, SpectralDesignCriterion) {
  EXPECT_TRUE(spectral_design_criterion(fano_plane(), perron_summary(fano_plane())));
  EXPECT_TRUE(spectral_design_criterion(complete_graph(5), perron_summary(complete_graph(5))));
  EXPECT_FALSE(spectral_design_criterion(cycle_graph(5), perron_summary(cycle_graph(5))));
}

TEST(Corpus, ExpansionIsDeterministic) {
  auto spec = CorpusSpec::default_corpus(3);
  auto a = expand_corpus(spec);
  auto b = expand_corpus(spec);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].id, b[i].id);
    EXPECT_EQ(a[i].graph, b[i].graph);
  }
  EXPECT_GE(a.size(), 500u);
}

TEST(Corpus, Filters) {
  CorpusSpec spec;
  spec.families = {{"all_graphs", {{"n_min", 2}, {"n_max", 4}}}};
  spec.filter = ConnectivityFilter::All;
  EXPECT_EQ(expand_corpus(spec).size(), 2u + 4u + 11u);
  spec.filter = ConnectivityFilter::ConnectedOnly;
  auto connected = expand_corpus(spec);
  EXPECT_EQ(connected.size(), 1u + 2u + 6u);
  for (const auto& inst : connected) EXPECT_TRUE(is_connected(inst.graph));
  spec.filter = ConnectivityFilter::IncludeDisconnected;
  EXPECT_EQ(expand_corpus(spec).size(), 17u + 9u);
  EXPECT_EQ(parse_connectivity_filter("connected_only"), ConnectivityFilter::ConnectedOnly);
  EXPECT_EQ(to_string(ConnectivityFilter::IncludeDisconnected), "include_disconnected");
  EXPECT_THROW(parse_connectivity_filter("some"), std::invalid_argument);
}

TEST(Corpus, IncludeDisconnectedPassesConnectivityBothWays) {
  CorpusSpec spec;
  spec.families = {{"all_graphs", {{"n_min", 2}, {"n_max", 5}}},
                   {"random_sweep", {{"k", 3}, {"n_min", 4}, {"n_max", 6}, {"count", 10}}}};
  spec.filter = ConnectivityFilter::IncludeDisconnected;
  auto report = certify_corpus(spec);
  std::size_t connected = 0, disconnected = 0;
  for (const auto& inst : report.instances) (is_connected(inst.graph) ? connected : disconnected)++;
  EXPECT_GT(connected, 0u);
  EXPECT_GT(disconnected, 0u);
  EXPECT_EQ(report.counts.at(TheoremId::T3_1).pass, report.instances.size());
  EXPECT_EQ(report.failures(), 0u);
}

TEST(Corpus, DesignsPassEquivalenceAndInterval) {
  auto report = certify_corpus(CorpusSpec::design_corpus());
  EXPECT_EQ(report.failures(), 0u);
  EXPECT_EQ(report.counts.at(TheoremId::T3_8).pass, report.instances.size());
  EXPECT_EQ(report.counts.at(TheoremId::T3_9).pass, report.instances.size());
}

TEST(Corpus, ReportIsByteIdenticalAcrossRunsAndThreadCounts) {
  CorpusSpec spec;
  spec.seed = 9;
  spec.families = {{"random_sweep", {{"k", 3}, {"n_min", 5}, {"n_max", 7}, {"count", 6}}},
                   {"all_graphs", {{"n_min", 4}, {"n_max", 4}}}};
  SolverOptions serial;
  SolverOptions parallel;
  parallel.threads = 3;
  const auto header = make_header("certify", "test", serial);
  auto a = corpus_json(header, certify_corpus(spec, serial)).dump();
  auto b = corpus_json(header, certify_corpus(spec, serial)).dump();
  auto c = corpus_json(header, certify_corpus(spec, parallel)).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
}

TEST(Corpus, CountsCoverEveryTheorem) {
  CorpusReport report = certify_instances({{"P3", path_graph(3)}});
  EXPECT_TRUE(report.failing_instances.empty());
  EXPECT_EQ(report.counts.size(), all_theorems().size());
}
