#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hyperperron/cli.hpp"
#include "hyperperron/generators.hpp"
#include "hyperperron/report.hpp"

using namespace hyperperron;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string golden(const std::string& name) {
  const std::string path = std::string(GOLDEN_DIR) + "/" + name;
  std::ifstream probe(path);
  EXPECT_TRUE(probe.good()) << "missing golden file " << path;
  return read_file(path);
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST(Cli, GoldenAlphaPath) {
  auto r = run({"alpha", "--gen", "path_graph", "--n", "3", "--method", "both", "--json", "--threads", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, golden("alpha_path3.json"));
  EXPECT_NE(r.out.find("0.3819660113"), std::string::npos);
}

TEST(Cli, GoldenCertifyFano) {
  auto r = run({"certify", "--gen", "fano_plane", "--json", "--threads", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, golden("certify_fano.json"));
}

TEST(Cli, GoldenCertifyFanoTableHasThirteenSections) {
  auto r = run({"certify", "--gen", "fano_plane", "--threads", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, golden("certify_fano.txt"));
  std::size_t sections = 0;
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);) sections += (!line.empty() && line[0] == '[') ? 1 : 0;
  EXPECT_EQ(sections, 13u);
  EXPECT_EQ(r.out.find("fail"), std::string::npos);
}

TEST(Cli, GoldenGenRandomUniform) {
  auto a = run({"gen", "random_uniform", "--n", "6", "--k", "3", "--m", "4", "--seed", "1"});
  auto b = run({"gen", "random_uniform", "--n", "6", "--k", "3", "--m", "4", "--seed", "1"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, golden("gen_random_uniform.txt"));
  EXPECT_EQ(parse_string(a.out), random_uniform(6, 3, 4, 1));
}

TEST(Cli, GoldenResistanceAndDesign) {
  auto r = run({"resistance", "--gen", "path_graph", "--n", "3", "--json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, golden("resistance_path3.json"));
  auto d = run({"design", "--gen", "fano_plane", "--json"});
  EXPECT_EQ(d.code, 0) << d.err;
  EXPECT_EQ(d.out, golden("design_fano.json"));
}

TEST(Cli, AlphaFromFile) {
  auto path = temp_file("p3.hg", "3 2\n1 2\n2 3\n");
  auto r = run({"alpha", "--input", path, "--method", "both", "--json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("0.3819660113"), std::string::npos);
}

TEST(Cli, OutputsReproduceLibraryCalls) {
  const auto g = fano_plane();
  SolverOptions opts;
  opts.threads = 1;
  opts.seed = 5;
  opts.method = Method::Both;

  auto alpha = run({"alpha", "--gen", "fano_plane", "--json", "--seed", "5", "--method", "both", "--threads", "1"});
  EXPECT_EQ(alpha.out,
            alpha_json(make_header("alpha", "fano_plane", opts), g, perron_summary(g, opts)).dump(2) + "\n");

  auto table = run({"alpha", "--gen", "fano_plane", "--seed", "5", "--method", "both", "--threads", "1"});
  EXPECT_EQ(table.out, alpha_table(make_header("alpha", "fano_plane", opts), g, perron_summary(g, opts)));

  auto cert = run({"certify", "--gen", "fano_plane", "--json", "--seed", "5", "--method", "both", "--threads", "1"});
  EXPECT_EQ(cert.out, certificates_json(make_header("certify", "fano_plane", opts),
                                        certify_instance(g, "fano_plane", opts))
                              .dump(2) +
                          "\n");

  auto design = run({"design", "--gen", "fano_plane"});
  EXPECT_EQ(design.out, design_table(make_header("design", "fano_plane", SolverOptions{}), design_report(g)));
}

TEST(Cli, ExitCodesAndDiagnostics) {
  auto none = run({});
  EXPECT_EQ(none.code, cli::kUsageError);
  EXPECT_FALSE(none.err.empty());

  auto both = run({"alpha", "--gen", "fano_plane", "--input", "x.hg"});
  EXPECT_EQ(both.code, cli::kUsageError);
  EXPECT_NE(both.err.find("--input"), std::string::npos);

  auto missing = run({"alpha", "--input", "/nonexistent/file.hg"});
  EXPECT_EQ(missing.code, cli::kUsageError);
  EXPECT_NE(missing.err.find("--input"), std::string::npos);

  auto bad = temp_file("bad.hg", "3 2\n1 2\n1 1\n");
  auto parse = run({"alpha", "--input", bad});
  EXPECT_EQ(parse.code, cli::kUsageError);
  EXPECT_NE(parse.err.find("line 3"), std::string::npos) << parse.err;

  auto method = run({"alpha", "--gen", "fano_plane", "--method", "newton"});
  EXPECT_EQ(method.code, cli::kUsageError);
  EXPECT_NE(method.err.find("--method"), std::string::npos);

  auto family = run({"alpha", "--gen", "nope"});
  EXPECT_EQ(family.code, cli::kUsageError);
  EXPECT_NE(family.err.find("--gen"), std::string::npos);

  auto param = run({"alpha", "--gen", "path_graph"});
  EXPECT_EQ(param.code, cli::kUsageError);
  EXPECT_NE(param.err.find("--n"), std::string::npos);

  auto graph_only = run({"resistance", "--gen", "fano_plane"});
  EXPECT_EQ(graph_only.code, cli::kUsageError);
  EXPECT_NE(graph_only.err.find("k = 2"), std::string::npos);

  auto starved = run({"alpha", "--gen", "random_uniform", "--n", "8", "--k", "3", "--m", "12", "--seed", "3",
                      "--method", "power", "--tol", "1e-300"});
  EXPECT_EQ(starved.code, cli::kNotConverged);

  auto help = run({"--help"});
  EXPECT_EQ(help.code, cli::kOk);
  EXPECT_NE(help.out.find("certify"), std::string::npos);
}

TEST(Cli, CertifyDesignCorpus) {
  auto r = run({"certify", "--corpus", "designs", "--json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"failing_instances\": []"), std::string::npos);
  auto clash = run({"certify", "--corpus", "designs", "--gen", "fano_plane"});
  EXPECT_EQ(clash.code, cli::kUsageError);
}

TEST(Cli, BoundsListsOnlyBoundCertificates) {
  auto r = run({"bounds", "--gen", "path_graph", "--n", "4", "--json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.find("T3.1"), std::string::npos);
  EXPECT_EQ(r.out.find("T4.1"), std::string::npos);
  EXPECT_NE(r.out.find("T3.2"), std::string::npos);
  EXPECT_NE(r.out.find("L2.3"), std::string::npos);
}
