#include "hyperperron/report.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

namespace hyperperron {

namespace {

Json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round10(v);
}

Json vertex_json(std::optional<Vertex> v) {
  if (!v) return nullptr;
  return *v + 1;
}

Json vertices_json(const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(v + 1);
  return out;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

std::string vertex_text(std::optional<Vertex> v) { return v ? std::to_string(*v + 1) : "-"; }

}  // namespace

ReportHeader make_header(std::string verb, std::string instance, const SolverOptions& opts) {
  return {std::move(verb), std::move(instance), opts.seed, to_string(opts.method), opts.tol, opts.starts};
}

double round10(double v) {
  if (!std::isfinite(v)) return v;
  return std::stod(format10(v));
}

std::string format10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

Json header_json(const ReportHeader& h) {
  Json out;
  out["verb"] = h.verb;
  out["instance"] = h.instance;
  out["seed"] = h.seed;
  out["method"] = h.method;
  out["tol"] = number(h.tol);
  out["starts"] = h.starts;
  return out;
}

std::string header_line(const ReportHeader& h) {
  return "# " + h.verb + " instance=" + h.instance + " seed=" + std::to_string(h.seed) + " method=" + h.method +
         " tol=" + format10(h.tol) + " starts=" + std::to_string(h.starts) + "\n";
}

Json to_json(const Certificate& c) {
  Json out;
  out["theorem_id"] = to_string(c.theorem);
  out["instance_id"] = c.instance_id;
  out["vertex"] = vertex_json(c.vertex);
  const bool compared = c.outcome != Outcome::Skipped;
  out["lhs"] = compared ? number(c.lhs) : Json(nullptr);
  out["rhs"] = compared ? number(c.rhs) : Json(nullptr);
  out["slack"] = compared ? number(c.slack) : Json(nullptr);
  out["tol"] = compared ? number(c.tol) : Json(nullptr);
  out["outcome"] = to_string(c.outcome);
  out["detail"] = c.detail;
  return out;
}

Json to_json(const PerronResult& r) {
  Json out;
  out["vertex"] = r.vertex + 1;
  out["alpha"] = number(r.value);
  out["method"] = to_string(r.method);
  out["converged"] = r.converged;
  out["kkt_residual"] = number(r.kkt_residual);
  out["iterations"] = r.iterations;
  Json x = Json::array();
  for (double v : r.minimizer) x.push_back(number(v));
  out["minimizer"] = std::move(x);
  out["note"] = r.note;
  return out;
}

Json alpha_json(const ReportHeader& header, const Hypergraph& h, const PerronSummary& s) {
  Json out;
  out["header"] = header_json(header);
  out["n"] = h.n();
  out["k"] = h.k();
  out["m"] = h.m();
  Json per = Json::array();
  for (const auto& r : s.per_vertex) per.push_back(to_json(r));
  out["per_vertex"] = std::move(per);
  out["alpha"] = number(s.alpha);
  out["beta"] = number(s.beta);
  out["argmin_vertex"] = s.argmin_vertex + 1;
  out["argmax_vertex"] = s.argmax_vertex + 1;
  out["converged"] = s.converged;
  return out;
}

std::string alpha_table(const ReportHeader& header, const Hypergraph& h, const PerronSummary& s) {
  std::ostringstream out;
  out << header_line(header);
  out << "n=" << h.n() << " k=" << h.k() << " m=" << h.m() << "\n";
  out << pad("vertex", 8) << pad("alpha_j", 18) << pad("method", 20) << pad("converged", 11) << pad("kkt", 18)
      << "iterations\n";
  for (const auto& r : s.per_vertex) {
    out << pad(std::to_string(r.vertex + 1), 8) << pad(format10(r.value), 18) << pad(to_string(r.method), 20)
        << pad(r.converged ? "yes" : "no", 11) << pad(format10(r.kkt_residual), 18) << r.iterations << "\n";
  }
  out << "alpha=" << format10(s.alpha) << " at vertex " << s.argmin_vertex + 1 << "\n";
  out << "beta=" << format10(s.beta) << " at vertex " << s.argmax_vertex + 1 << "\n";
  out << "converged=" << (s.converged ? "yes" : "no") << "\n";
  return out.str();
}

Json certificates_json(const ReportHeader& header, const std::vector<Certificate>& certs) {
  Json out;
  out["header"] = header_json(header);
  Json list = Json::array();
  for (const auto& c : certs) list.push_back(to_json(c));
  out["certificates"] = std::move(list);
  return out;
}

std::string certificates_table(const ReportHeader& header, const std::vector<Certificate>& certs) {
  std::ostringstream out;
  out << header_line(header);
  std::optional<TheoremId> section;
  for (const auto& c : certs) {
    if (!section || *section != c.theorem) {
      section = c.theorem;
      out << "[" << to_string(c.theorem) << "]\n";
    }
    out << "  " << pad(to_string(c.outcome), 14) << pad("v=" + vertex_text(c.vertex), 6);
    if (c.outcome != Outcome::Skipped) {
      out << pad("lhs=" + format10(c.lhs), 22) << pad("rhs=" + format10(c.rhs), 22)
          << pad("slack=" + format10(c.slack), 24);
    }
    out << c.detail << "\n";
  }
  return out.str();
}

Json corpus_json(const ReportHeader& header, const CorpusReport& report) {
  Json out;
  out["header"] = header_json(header);
  out["instances"] = report.instances.size();
  Json summary;
  for (const auto& [id, c] : report.counts) {
    Json row;
    row["pass"] = c.pass;
    row["fail"] = c.fail;
    row["skipped"] = c.skipped;
    row["indeterminate"] = c.indeterminate;
    summary[to_string(id)] = std::move(row);
  }
  out["summary"] = std::move(summary);
  Json failing = Json::array();
  for (const auto& [id, text] : report.failing_instances) {
    Json row;
    row["instance_id"] = id;
    row["hypergraph"] = text;
    failing.push_back(std::move(row));
  }
  out["failing_instances"] = std::move(failing);
  Json list = Json::array();
  for (const auto& c : report.certificates) list.push_back(to_json(c));
  out["certificates"] = std::move(list);
  return out;
}

std::string corpus_table(const ReportHeader& header, const CorpusReport& report) {
  std::ostringstream out;
  out << header_line(header);
  out << "instances=" << report.instances.size() << " certificates=" << report.certificates.size() << "\n";
  out << pad("theorem", 9) << pad("pass", 8) << pad("fail", 8) << pad("skipped", 9) << "indeterminate\n";
  for (const auto& [id, c] : report.counts) {
    out << pad(to_string(id), 9) << pad(std::to_string(c.pass), 8) << pad(std::to_string(c.fail), 8)
        << pad(std::to_string(c.skipped), 9) << c.indeterminate << "\n";
  }
  for (const auto& c : report.certificates) {
    if (c.outcome != Outcome::Fail && c.outcome != Outcome::Indeterminate) continue;
    out << to_string(c.outcome) << " " << to_string(c.theorem) << " " << c.instance_id
        << " v=" << vertex_text(c.vertex) << " lhs=" << format10(c.lhs) << " rhs=" << format10(c.rhs)
        << " slack=" << format10(c.slack) << " " << c.detail << "\n";
  }
  for (const auto& [id, text] : report.failing_instances) out << "failing instance " << id << ":\n" << text;
  return out.str();
}

Json resistance_json(const ReportHeader& header, const ResistanceReport& r) {
  Json out;
  out["header"] = header_json(header);
  out["n"] = r.r.rows();
  out["pivot"] = r.pivot + 1;
  out["condition"] = number(r.condition);
  out["kirchhoff_index"] = number(r.kf);
  Json kf_i = Json::array();
  Json r_i = Json::array();
  for (std::size_t i = 0; i < r.kf_i.size(); ++i) {
    kf_i.push_back(number(r.kf_i[i]));
    r_i.push_back(number(r.r_i[i]));
  }
  out["resistance_centrality"] = std::move(kf_i);
  out["resistance_eccentricity"] = std::move(r_i);
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < r.r.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < r.r.cols(); ++j) row.push_back(number(r.r(i, j)));
    rows.push_back(std::move(row));
  }
  out["resistance"] = std::move(rows);
  return out;
}

std::string resistance_table(const ReportHeader& header, const ResistanceReport& r) {
  std::ostringstream out;
  out << header_line(header);
  out << "Kf=" << format10(r.kf) << " pivot=" << r.pivot + 1 << " condition=" << format10(r.condition) << "\n";
  out << pad("vertex", 8) << pad("Kf_i", 18) << "r_i\n";
  for (std::size_t i = 0; i < r.kf_i.size(); ++i) {
    out << pad(std::to_string(i + 1), 8) << pad(format10(r.kf_i[i]), 18) << format10(r.r_i[i]) << "\n";
  }
  out << "resistance matrix:\n";
  for (Eigen::Index i = 0; i < r.r.rows(); ++i) {
    for (Eigen::Index j = 0; j < r.r.cols(); ++j) out << (j > 0 ? " " : "") << format10(r.r(i, j));
    out << "\n";
  }
  return out.str();
}

DesignReport design_report(const Hypergraph& h) {
  DesignReport out;
  out.params = detect_2_design(h);
  if (out.params) out.bounds = design_edge_connectivity_bounds(*out.params);
  if (h.n() >= 2 && h.n() <= kEdgeConnectivityLimit) out.edge_connectivity = edge_connectivity(h);
  return out;
}

Json design_json(const ReportHeader& header, const DesignReport& d) {
  Json out;
  out["header"] = header_json(header);
  out["design"] = d.params.has_value();
  if (d.params) {
    Json p;
    p["n"] = d.params->n();
    p["b"] = d.params->b();
    p["k"] = d.params->k();
    p["r"] = d.params->r();
    p["lambda"] = d.params->lambda();
    p["symmetric"] = d.params->symmetric();
    out["params"] = std::move(p);
    out["edge_connectivity_lower"] = number(d.bounds->lower);
    out["edge_connectivity_upper"] = number(d.bounds->upper);
    out["edge_connectivity_exact"] = d.bounds->exact ? Json(*d.bounds->exact) : Json(nullptr);
  } else {
    out["params"] = nullptr;
  }
  if (d.edge_connectivity) {
    out["edge_connectivity"] = d.edge_connectivity->cut_size;
    out["witness"] = vertices_json(d.edge_connectivity->witness);
  } else {
    out["edge_connectivity"] = nullptr;
    out["witness"] = nullptr;
  }
  return out;
}

std::string design_table(const ReportHeader& header, const DesignReport& d) {
  std::ostringstream out;
  out << header_line(header);
  if (d.params) {
    out << "2-(" << d.params->n() << "," << d.params->b() << "," << d.params->k() << "," << d.params->r() << ","
        << d.params->lambda() << ") design" << (d.params->symmetric() ? " (symmetric)" : "") << "\n";
    out << "edge connectivity bounds: " << format10(d.bounds->lower) << " <= e(G) <= " << format10(d.bounds->upper)
        << "\n";
    if (d.bounds->exact) out << "symmetric design: e(G) = " << *d.bounds->exact << "\n";
  } else {
    out << "not a 2-design\n";
  }
  if (d.edge_connectivity) {
    out << "e(G)=" << d.edge_connectivity->cut_size << " witness {";
    for (std::size_t i = 0; i < d.edge_connectivity->witness.size(); ++i)
      out << (i > 0 ? "," : "") << d.edge_connectivity->witness[i] + 1;
    out << "}\n";
  } else {
    out << "e(G) not enumerated (n above " << kEdgeConnectivityLimit << ")\n";
  }
  return out.str();
}

Json hypergraph_json(const Hypergraph& h) {
  Json out;
  out["n"] = h.n();
  out["k"] = h.k();
  Json edges = Json::array();
  for (const auto& e : h.edges()) edges.push_back(vertices_json(e));
  out["edges"] = std::move(edges);
  return out;
}

}  // namespace hyperperron
