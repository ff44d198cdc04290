#ifndef HYPERPERRON_CERTIFY_HPP
#define HYPERPERRON_CERTIFY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hyperperron/certificate.hpp"
#include "hyperperron/generators.hpp"
#include "hyperperron/hypergraph.hpp"
#include "hyperperron/perron.hpp"

namespace hyperperron {

/// All applicable certificates for one instance, ordered by theorem id and
/// then vertex. Inapplicable results get a single skipped certificate.
std::vector<Certificate> certify_instance(const Hypergraph& h, std::string_view instance_id,
                                          const SolverOptions& opts = {});
/// Same, reusing an already computed summary for h.
std::vector<Certificate> certify_instance(const Hypergraph& h, std::string_view instance_id,
                                          const PerronSummary& summary, const SolverOptions& opts = {});

/// Tolerance for "all alpha_j equal Delta(k-1)/(n-1)".
inline constexpr double kDesignSpectralTolerance = 1e-6;

/// True when every alpha_j is within kDesignSpectralTolerance of
/// Delta(k-1)/(n-1).
bool spectral_design_criterion(const Hypergraph& h, const PerronSummary& summary);

enum class ConnectivityFilter { All, ConnectedOnly, IncludeDisconnected };
std::string to_string(ConnectivityFilter f);
ConnectivityFilter parse_connectivity_filter(const std::string& name);

/// One corpus family. `kind` is either a generator family (one instance),
/// "all_graphs" (params n_min, n_max: every graph up to isomorphism), or
/// "random_sweep" (params k, n_min, n_max, count: `count` random_uniform
/// instances per n with m and seed drawn from the corpus seed).
struct CorpusFamily {
  std::string kind;
  std::map<std::string, std::int64_t> params;
};

struct CorpusSpec {
  std::vector<CorpusFamily> families;
  std::size_t max_n = 14;
  std::uint64_t seed = 0;
  ConnectivityFilter filter = ConnectivityFilter::All;

  /// All graphs on 2..6 vertices, random 3-uniform on 4..7, random 4-uniform
  /// on 5..6, and the named families.
  static CorpusSpec default_corpus(std::uint64_t seed = 0);
  /// Named 2-designs: Fano plane, complete graphs, complete k-uniform
  /// hypergraphs, single edges.
  static CorpusSpec design_corpus();
};

struct CorpusInstance {
  std::string id;
  Hypergraph graph;
};

/// Deterministic for a fixed spec.
std::vector<CorpusInstance> expand_corpus(const CorpusSpec& spec);

struct OutcomeCounts {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
  std::size_t indeterminate = 0;
  std::size_t total() const { return pass + fail + skipped + indeterminate; }
};

struct CorpusReport {
  std::uint64_t seed = 0;
  std::vector<CorpusInstance> instances;
  std::vector<Certificate> certificates;
  std::map<TheoremId, OutcomeCounts> counts;
  /// Canonical text of every instance with at least one failing certificate.
  std::vector<std::pair<std::string, std::string>> failing_instances;

  std::size_t failures() const;
};

CorpusReport certify_corpus(const CorpusSpec& spec, const SolverOptions& opts = {});
CorpusReport certify_instances(std::vector<CorpusInstance> instances, const SolverOptions& opts = {});

}  // namespace hyperperron

#endif  // HYPERPERRON_CERTIFY_HPP
