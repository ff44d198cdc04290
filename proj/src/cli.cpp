#include "hyperperron/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>

#include "hyperperron/certify.hpp"
#include "hyperperron/generators.hpp"
#include "hyperperron/hypergraph.hpp"
#include "hyperperron/perron.hpp"
#include "hyperperron/report.hpp"
#include "hyperperron/resistance.hpp"

namespace hyperperron::cli {

namespace {

struct Options {
  std::string input;
  std::string gen;
  std::string corpus;
  std::map<std::string, std::int64_t> params;
  double tol = SolverOptions{}.tol;
  std::size_t starts = SolverOptions{}.starts;
  std::uint64_t seed = 0;
  std::string method = "auto";
  bool json = false;
  std::size_t threads = 0;
  std::string filter;
  std::size_t max_n = 14;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* cmd, Options& o, bool instance_input, bool solver) {
  if (instance_input) {
    cmd->add_option("--input", o.input, "Hypergraph file in the canonical format");
    cmd->add_option("--gen", o.gen, "Generator family (see the gen verb)");
  }
  for (const char* p : {"n", "k", "m", "l"}) {
    cmd->add_option_function<std::int64_t>(std::string("--") + p, [&o, p](std::int64_t v) { o.params[p] = v; },
                                           std::string("Generator parameter ") + p);
  }
  cmd->add_option("--seed", o.seed, "Seed for solver starts and random generators");
  if (solver) {
    cmd->add_option("--tol", o.tol, "Solver tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--starts", o.starts, "Projected-gradient starts")->check(CLI::PositiveNumber);
    cmd->add_option("--method", o.method, "auto, pg, power or both")
        ->check(CLI::IsMember({"auto", "pg", "power", "both"}));
    cmd->add_option("--threads", o.threads, "Worker threads (0: available parallelism)");
  }
  cmd->add_flag("--json", o.json, "Structured JSON output");
}

SolverOptions solver_options(const Options& o) {
  SolverOptions s;
  s.tol = o.tol;
  s.starts = o.starts;
  s.seed = o.seed;
  s.method = parse_method(o.method);
  s.threads = o.threads;
  return s;
}

GeneratorSpec generator_spec(const std::string& family, const Options& o) {
  GeneratorSpec g{family, o.params};
  if (family == "random_uniform") g.params["seed"] = static_cast<std::int64_t>(o.seed);
  return g;
}

struct Instance {
  std::string id;
  Hypergraph graph;
};

Instance load_instance(const Options& o) {
  if (o.input.empty() == o.gen.empty()) {
    throw CLI::ValidationError("input", "exactly one of --input FILE or --gen NAME is required");
  }
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) throw InputError("--input: cannot open '" + o.input + "'");
    try {
      return {o.input, parse(in)};
    } catch (const ParseError& e) {
      throw InputError("--input " + o.input + ": " + e.what());
    }
  }
  try {
    auto spec = generator_spec(o.gen, o);
    return {spec.id(), generate(spec)};
  } catch (const std::invalid_argument& e) {
    throw InputError("--gen " + o.gen + ": " + e.what());
  }
}

void emit(std::ostream& out, const Options& o, const Json& json, const std::string& table) {
  if (o.json) {
    out << json.dump(2) << "\n";
  } else {
    out << table;
  }
}

int certificate_exit(const std::vector<Certificate>& certs) {
  bool indeterminate = false;
  for (const auto& c : certs) {
    if (c.outcome == Outcome::Fail) return kCertificateFailure;
    indeterminate = indeterminate || c.outcome == Outcome::Indeterminate;
  }
  return indeterminate ? kNotConverged : kOk;
}

const std::set<TheoremId> kBoundTheorems = {TheoremId::T3_2, TheoremId::T3_3, TheoremId::T3_4, TheoremId::C3_5,
                                            TheoremId::T3_6, TheoremId::C3_7, TheoremId::L2_3};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inverse Perron values of uniform hypergraphs and the bounds built on them"};
  app.name("hyperperron");
  app.require_subcommand(1);

  Options o;
  auto* alpha = app.add_subcommand("alpha", "Inverse Perron values alpha_j, alpha and beta");
  add_common(alpha, o, true, true);
  auto* bounds = app.add_subcommand("bounds", "Exact cut and distance quantities against their spectral bounds");
  add_common(bounds, o, true, true);
  auto* resistance = app.add_subcommand("resistance", "Resistance distances and Kirchhoff indices (graphs only)");
  add_common(resistance, o, true, false);
  auto* design = app.add_subcommand("design", "2-design detection and edge-connectivity interval");
  add_common(design, o, true, false);
  auto* certify = app.add_subcommand("certify", "Certificates for every applicable result");
  add_common(certify, o, true, true);
  certify->add_option("--corpus", o.corpus, "Built-in corpus instead of one instance")
      ->check(CLI::IsMember({"default", "designs"}));
  certify->add_option("--filter", o.filter, "Corpus connectivity filter")
      ->check(CLI::IsMember({"all", "connected_only", "include_disconnected"}));
  certify->add_option("--max-n", o.max_n, "Largest corpus instance");
  auto* gen = app.add_subcommand("gen", "Print a generated hypergraph in the canonical format");
  std::string family;
  gen->add_option("family", family, "Generator family")->required()->check(CLI::IsMember(generator_families()));
  add_common(gen, o, false, false);

  std::vector<const char*> argv{"hyperperron"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    const SolverOptions opts = solver_options(o);
    if (gen->parsed()) {
      auto g = generate(generator_spec(family, o));
      if (o.json) {
        out << hypergraph_json(g).dump(2) << "\n";
      } else {
        out << render(g);
      }
      return kOk;
    }

    if (certify->parsed() && !o.corpus.empty()) {
      if (!o.input.empty() || !o.gen.empty()) {
        throw CLI::ValidationError("corpus", "--corpus cannot be combined with --input or --gen");
      }
      CorpusSpec spec = o.corpus == "designs" ? CorpusSpec::design_corpus() : CorpusSpec::default_corpus(o.seed);
      spec.seed = o.seed;
      spec.max_n = o.max_n;
      if (!o.filter.empty()) spec.filter = parse_connectivity_filter(o.filter);
      const auto report = certify_corpus(spec, opts);
      const auto header = make_header("certify", "corpus:" + o.corpus, opts);
      emit(out, o, corpus_json(header, report), corpus_table(header, report));
      return certificate_exit(report.certificates);
    }

    const Instance inst = load_instance(o);
    if (alpha->parsed()) {
      const auto summary = perron_summary(inst.graph, opts);
      const auto header = make_header("alpha", inst.id, opts);
      emit(out, o, alpha_json(header, inst.graph, summary), alpha_table(header, inst.graph, summary));
      if (!summary.converged) {
        err << "warning: some alpha_j did not converge\n";
        return kNotConverged;
      }
      return kOk;
    }
    if (bounds->parsed() || certify->parsed()) {
      auto certs = certify_instance(inst.graph, inst.id, opts);
      const char* verb = certify->parsed() ? "certify" : "bounds";
      if (bounds->parsed()) {
        std::erase_if(certs, [](const Certificate& c) { return kBoundTheorems.count(c.theorem) == 0; });
      }
      const auto header = make_header(verb, inst.id, opts);
      emit(out, o, certificates_json(header, certs), certificates_table(header, certs));
      return certificate_exit(certs);
    }
    if (resistance->parsed()) {
      const auto report = resistance_matrix(inst.graph, inst.graph.n() - 1, o.seed);
      const auto header = make_header("resistance", inst.id, opts);
      emit(out, o, resistance_json(header, report), resistance_table(header, report));
      return kOk;
    }
    if (design->parsed()) {
      const auto report = design_report(inst.graph);
      const auto header = make_header("design", inst.id, opts);
      emit(out, o, design_json(header, report), design_table(header, report));
      return kOk;
    }
    throw std::logic_error("no verb handled");
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const NumericalFailure& e) {
    err << "error: " << e.what() << "\n";
    return kNotConverged;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::runtime_error& e) {
    // Enumeration limits and singular principal submatrices: the input is
    // outside what the verb accepts.
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace hyperperron::cli
