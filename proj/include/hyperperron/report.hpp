#ifndef HYPERPERRON_REPORT_HPP
#define HYPERPERRON_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperperron/certificate.hpp"
#include "hyperperron/certify.hpp"
#include "hyperperron/combinatorics.hpp"
#include "hyperperron/hypergraph.hpp"
#include "hyperperron/perron.hpp"
#include "hyperperron/resistance.hpp"

namespace hyperperron {

using Json = nlohmann::ordered_json;

/// Identifies a run in every report.
struct ReportHeader {
  std::string verb;
  std::string instance;
  std::uint64_t seed = 0;
  std::string method;
  double tol = 0.0;
  std::size_t starts = 0;
};

ReportHeader make_header(std::string verb, std::string instance, const SolverOptions& opts);

/// v rounded to 10 significant digits.
double round10(double v);
/// v printed with 10 significant digits.
std::string format10(double v);

Json header_json(const ReportHeader& h);
std::string header_line(const ReportHeader& h);

Json to_json(const Certificate& c);
Json to_json(const PerronResult& r);

Json alpha_json(const ReportHeader& header, const Hypergraph& h, const PerronSummary& s);
std::string alpha_table(const ReportHeader& header, const Hypergraph& h, const PerronSummary& s);

Json certificates_json(const ReportHeader& header, const std::vector<Certificate>& certs);
std::string certificates_table(const ReportHeader& header, const std::vector<Certificate>& certs);

Json corpus_json(const ReportHeader& header, const CorpusReport& report);
std::string corpus_table(const ReportHeader& header, const CorpusReport& report);

Json resistance_json(const ReportHeader& header, const ResistanceReport& r);
std::string resistance_table(const ReportHeader& header, const ResistanceReport& r);

/// Combinatorial design view: parameters, edge-connectivity interval and
/// exact e(G) when within the enumeration limit.
struct DesignReport {
  std::optional<DesignParams> params;
  std::optional<DesignBounds> bounds;
  std::optional<CutOptimum> edge_connectivity;
};
DesignReport design_report(const Hypergraph& h);
Json design_json(const ReportHeader& header, const DesignReport& d);
std::string design_table(const ReportHeader& header, const DesignReport& d);

Json hypergraph_json(const Hypergraph& h);

}  // namespace hyperperron

#endif  // HYPERPERRON_REPORT_HPP
