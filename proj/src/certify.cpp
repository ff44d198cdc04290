#include "hyperperron/certify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hyperperron/combinatorics.hpp"
#include "hyperperron/resistance.hpp"
#include "parallel.hpp"

namespace hyperperron {

namespace {

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(10);
  out << v;
  return out.str();
}

std::string list(const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(vs[i] + 1);
  }
  return s + "}";
}

}  // namespace

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids = {
      TheoremId::T3_1, TheoremId::T3_2, TheoremId::T3_3, TheoremId::T3_4, TheoremId::C3_5,
      TheoremId::T3_6, TheoremId::C3_7, TheoremId::T3_8, TheoremId::T3_9, TheoremId::L2_3,
      TheoremId::T4_1, TheoremId::T4_2, TheoremId::C4_3,
  };
  return ids;
}

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T3_1: return "T3.1";
    case TheoremId::T3_2: return "T3.2";
    case TheoremId::T3_3: return "T3.3";
    case TheoremId::T3_4: return "T3.4";
    case TheoremId::C3_5: return "C3.5";
    case TheoremId::T3_6: return "T3.6";
    case TheoremId::C3_7: return "C3.7";
    case TheoremId::T3_8: return "T3.8";
    case TheoremId::T3_9: return "T3.9";
    case TheoremId::L2_3: return "L2.3";
    case TheoremId::T4_1: return "T4.1";
    case TheoremId::T4_2: return "T4.2";
    case TheoremId::C4_3: return "C4.3";
  }
  throw std::logic_error("unknown theorem id");
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Skipped: return "skipped";
    case Outcome::Indeterminate: return "indeterminate";
  }
  throw std::logic_error("unknown outcome");
}

double default_tolerance(double lhs, double rhs) {
  return 1e-7 * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

Certificate inequality(TheoremId id, std::string_view instance, std::optional<Vertex> vertex, double lhs,
                       double rhs, std::string detail) {
  return inequality(id, instance, vertex, lhs, rhs, default_tolerance(lhs, rhs), std::move(detail));
}

Certificate inequality(TheoremId id, std::string_view instance, std::optional<Vertex> vertex, double lhs,
                       double rhs, double tol, std::string detail) {
  Certificate c;
  c.theorem = id;
  c.instance_id = std::string(instance);
  c.vertex = vertex;
  c.lhs = lhs;
  c.rhs = rhs;
  c.slack = lhs - rhs;
  c.tol = tol;
  // NaN slack fails.
  c.outcome = (c.slack >= -tol) ? Outcome::Pass : Outcome::Fail;
  c.detail = std::move(detail);
  return c;
}

Certificate skipped(TheoremId id, std::string_view instance, std::string reason) {
  Certificate c;
  c.theorem = id;
  c.instance_id = std::string(instance);
  c.outcome = Outcome::Skipped;
  c.detail = std::move(reason);
  return c;
}

void mark_indeterminate(Certificate& c, std::string_view reason) {
  c.outcome = Outcome::Indeterminate;
  if (!c.detail.empty()) c.detail += "; ";
  c.detail += "indeterminate: ";
  c.detail += reason;
}

bool spectral_design_criterion(const Hypergraph& h, const PerronSummary& summary) {
  const double target = static_cast<double>(h.max_degree() * (h.k() - 1)) / static_cast<double>(h.n() - 1);
  return std::all_of(summary.per_vertex.begin(), summary.per_vertex.end(), [&](const PerronResult& r) {
    return std::abs(r.value - target) <= kDesignSpectralTolerance;
  });
}

std::vector<Certificate> certify_instance(const Hypergraph& h, std::string_view instance_id,
                                          const SolverOptions& opts) {
  if (h.n() < 2) throw std::invalid_argument("certification needs at least 2 vertices");
  return certify_instance(h, instance_id, perron_summary(h, opts), opts);
}

std::vector<Certificate> certify_instance(const Hypergraph& h, std::string_view id, const PerronSummary& s,
                                          const SolverOptions& opts) {
  const std::size_t n = h.n();
  const std::size_t k = h.k();
  if (n < 2) throw std::invalid_argument("certification needs at least 2 vertices");
  if (s.per_vertex.size() != n) throw std::invalid_argument("Perron summary belongs to a different instance");

  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  const bool connected = is_connected(h);
  double alpha_sum = 0.0;
  for (const auto& r : s.per_vertex) alpha_sum += r.value;
  const std::string not_converged = "some alpha_j did not converge";

  std::vector<Certificate> out;
  auto push = [&](Certificate c, bool converged, std::string_view reason) {
    if (!converged && c.outcome != Outcome::Skipped) mark_indeterminate(c, reason);
    out.push_back(std::move(c));
  };

  // Connectivity against positivity of the largest inverse Perron value.
  {
    const bool spectral = s.beta > opts.connectivity_tol;
    const bool agree = spectral == connected;
    push(inequality(TheoremId::T3_1, id, std::nullopt, agree ? 1.0 : 0.0, 1.0, 0.0,
                    std::string("lhs 1 iff (BFS connected) == (beta > ") + fmt(opts.connectivity_tol) +
                        "); connected=" + (connected ? "true" : "false") + ", beta=" + fmt(s.beta) +
                        " at vertex " + std::to_string(s.argmax_vertex + 1)),
         s.converged, not_converged);
  }

  if (n <= kBalancedCutLimit) {
    const auto bw = bipartition_width(h);
    const double parity = (n % 2 == 0) ? 1.0 : -1.0;
    const double factor = (nd + parity) / (kd * (nd + 1.0));
    push(inequality(TheoremId::T3_2, id, std::nullopt, static_cast<double>(bw.cut_size), factor * alpha_sum,
                    "lhs bw(G); rhs (n+(-1)^n)/(k(n+1)) sum_j alpha_j with n " +
                        std::string(n % 2 == 0 ? "even" : "odd") + ", factor " + fmt(factor) + ", sum " +
                        fmt(alpha_sum) + "; witness S=" + list(bw.witness)),
         s.converged, not_converged);

    const auto iso = isoperimetric_number(h);
    push(inequality(TheoremId::T3_3, id, std::nullopt, iso.value, (s.alpha + s.beta) / kd,
                    "lhs i(G) = " + std::to_string(iso.cut_size) + "/" + std::to_string(iso.witness.size()) +
                        " at S=" + list(iso.witness) + "; rhs (alpha+beta)/k with alpha=" + fmt(s.alpha) +
                        ", beta=" + fmt(s.beta)),
         s.converged, not_converged);
  } else {
    const std::string reason = "n = " + std::to_string(n) + " exceeds the bw/i(G) enumeration limit " +
                               std::to_string(kBalancedCutLimit);
    out.push_back(skipped(TheoremId::T3_2, id, reason));
    out.push_back(skipped(TheoremId::T3_3, id, reason));
  }

  const double ecc_scale = kd / (2.0 * (kd - 1.0) * (nd - 1.0));
  if (connected) {
    for (Vertex j = 0; j < n; ++j) {
      const auto& r = s.per_vertex[j];
      const auto ecc = eccentricity(h, j);
      push(inequality(TheoremId::T3_4, id, j, static_cast<double>(ecc.value()), ecc_scale / r.value,
                      "lhs ecc(j); rhs k/(2(k-1)(n-1) alpha_j) with alpha_j=" + fmt(r.value)),
           r.converged, "alpha_j did not converge: " + r.note);
    }
    const double diam = static_cast<double>(diameter(h).value());
    const double rad = static_cast<double>(radius(h).value());
    const double diam_rhs = ecc_scale / s.alpha;
    const double rad_rhs = ecc_scale / s.beta;
    const std::string both = "diam=" + fmt(diam) + " vs k/(2(k-1)(n-1) alpha)=" + fmt(diam_rhs) + ", rad=" +
                             fmt(rad) + " vs k/(2(k-1)(n-1) beta)=" + fmt(rad_rhs);
    Certificate c = (diam - diam_rhs <= rad - rad_rhs)
                        ? inequality(TheoremId::C3_5, id, std::nullopt, diam, diam_rhs,
                                     "lhs diam; rhs k/(2(k-1)(n-1) alpha) (tighter of the two); " + both)
                        : inequality(TheoremId::C3_5, id, std::nullopt, rad, rad_rhs,
                                     "lhs rad; rhs k/(2(k-1)(n-1) beta) (tighter of the two); " + both);
    push(std::move(c), s.converged, not_converged);
  } else {
    out.push_back(skipped(TheoremId::T3_4, id, "disconnected: eccentricities are infinite"));
    out.push_back(skipped(TheoremId::C3_5, id, "disconnected: diameter and radius are infinite"));
  }

  for (Vertex j = 0; j < n; ++j) {
    const auto& r = s.per_vertex[j];
    const double d = static_cast<double>(h.degree(j));
    push(inequality(TheoremId::T3_6, id, j, (kd - 1.0) * d / (nd - 1.0), r.value,
                    "lhs (k-1) d_j/(n-1) with d_j=" + std::to_string(h.degree(j)) + "; rhs alpha_j"),
         r.converged, "alpha_j did not converge: " + r.note);
  }

  push(inequality(TheoremId::C3_7, id, std::nullopt, (kd - 1.0) * kd * static_cast<double>(h.m()) / (nd - 1.0),
                  alpha_sum, "lhs (k-1)km/(n-1) with m=" + std::to_string(h.m()) + "; rhs sum_j alpha_j"),
       s.converged, not_converged);

  const auto design = detect_2_design(h);
  if (connected) {
    const bool spectral = spectral_design_criterion(h, s);
    const bool agree = spectral == design.has_value();
    const double target = static_cast<double>(h.max_degree() * (k - 1)) / (nd - 1.0);
    std::string detail = "lhs 1 iff (2-design) == (all alpha_j within " + fmt(kDesignSpectralTolerance) +
                         " of Delta(k-1)/(n-1) = " + fmt(target) + "); design=" +
                         (design ? "true" : "false") + ", spectral=" + (spectral ? "true" : "false") +
                         ", alpha in [" + fmt(s.alpha) + ", " + fmt(s.beta) + "]";
    push(inequality(TheoremId::T3_8, id, std::nullopt, agree ? 1.0 : 0.0, 1.0, 0.0, std::move(detail)),
         s.converged, not_converged);
  } else {
    out.push_back(skipped(TheoremId::T3_8, id, "disconnected: only connected instances are compared"));
  }

  std::optional<CutOptimum> ec;
  if (n <= kEdgeConnectivityLimit) ec = edge_connectivity(h);
  const std::string ec_reason = "n = " + std::to_string(n) + " exceeds the e(G) enumeration limit " +
                                std::to_string(kEdgeConnectivityLimit);

  if (!design) {
    out.push_back(skipped(TheoremId::T3_9, id, "not a 2-design"));
  } else if (!ec) {
    out.push_back(skipped(TheoremId::T3_9, id, ec_reason));
  } else {
    // Integer comparison: ceil(n lambda / k) <= e <= floor((n-1) lambda / (k-1)).
    const std::size_t lo = (design->n() * design->lambda() + design->k() - 1) / design->k();
    const std::size_t hi = (design->n() - 1) * design->lambda() / (design->k() - 1);
    const double e = static_cast<double>(ec->cut_size);
    const std::string params = "2-(" + std::to_string(design->n()) + "," + std::to_string(design->b()) + "," +
                               std::to_string(design->k()) + "," + std::to_string(design->r()) + "," +
                               std::to_string(design->lambda()) + ") design" +
                               (design->symmetric() ? ", symmetric (interval pins e = k = r)" : "") +
                               "; e(G)=" + std::to_string(ec->cut_size) + " at S=" + list(ec->witness);
    const double lo_slack = e - static_cast<double>(lo);
    const double hi_slack = static_cast<double>(hi) - e;
    out.push_back(lo_slack <= hi_slack
                      ? inequality(TheoremId::T3_9, id, std::nullopt, e, static_cast<double>(lo), 0.0,
                                   "lhs e(G); rhs ceil(n lambda/k) (tighter side); " + params)
                      : inequality(TheoremId::T3_9, id, std::nullopt, static_cast<double>(hi), e, 0.0,
                                   "lhs floor((n-1) lambda/(k-1)); rhs e(G) (tighter side); " + params));
  }

  if (ec) {
    push(inequality(TheoremId::L2_3, id, std::nullopt, static_cast<double>(ec->cut_size), nd / kd * s.alpha,
                    "lhs e(G) at S=" + list(ec->witness) + "; rhs (n/k) alpha with alpha=" + fmt(s.alpha)),
         s.per_vertex[s.argmin_vertex].converged, "alpha did not converge");
  } else {
    out.push_back(skipped(TheoremId::L2_3, id, ec_reason));
  }

  if (k != 2 || !connected) {
    const std::string reason =
        k != 2 ? "resistance bounds apply to graphs only (k = 2)" : "disconnected: L(i) is singular";
    out.push_back(skipped(TheoremId::T4_1, id, reason));
    out.push_back(skipped(TheoremId::T4_2, id, reason));
    out.push_back(skipped(TheoremId::C4_3, id, reason));
  } else {
    for (auto& c : check_resistance_bounds(h, s, resistance_matrix(h, n - 1, opts.seed), id)) out.push_back(std::move(c));
  }
  return out;
}

std::string to_string(ConnectivityFilter f) {
  switch (f) {
    case ConnectivityFilter::All: return "all";
    case ConnectivityFilter::ConnectedOnly: return "connected_only";
    case ConnectivityFilter::IncludeDisconnected: return "include_disconnected";
  }
  throw std::logic_error("unknown connectivity filter");
}

ConnectivityFilter parse_connectivity_filter(const std::string& name) {
  if (name == "all") return ConnectivityFilter::All;
  if (name == "connected_only") return ConnectivityFilter::ConnectedOnly;
  if (name == "include_disconnected") return ConnectivityFilter::IncludeDisconnected;
  throw std::invalid_argument("unknown connectivity filter '" + name +
                              "' (expected all, connected_only or include_disconnected)");
}

CorpusSpec CorpusSpec::default_corpus(std::uint64_t seed) {
  CorpusSpec spec;
  spec.seed = seed;
  spec.filter = ConnectivityFilter::IncludeDisconnected;
  spec.families = {
      {"all_graphs", {{"n_min", 2}, {"n_max", 6}}},
      {"random_sweep", {{"k", 3}, {"n_min", 4}, {"n_max", 7}, {"count", 40}}},
      {"random_sweep", {{"k", 4}, {"n_min", 5}, {"n_max", 6}, {"count", 30}}},
      {"fano_plane", {}},
      {"complete_kuniform", {{"n", 5}, {"k", 3}}},
      {"complete_kuniform", {{"n", 6}, {"k", 3}}},
      {"complete_kuniform", {{"n", 6}, {"k", 4}}},
      {"complete_kuniform", {{"n", 3}, {"k", 3}}},
      {"complete_kuniform", {{"n", 4}, {"k", 4}}},
      {"complete_graph", {{"n", 7}}},
      {"complete_graph", {{"n", 8}}},
      {"path_graph", {{"n", 8}}},
      {"path_graph", {{"n", 10}}},
      {"cycle_graph", {{"n", 7}}},
      {"cycle_graph", {{"n", 10}}},
      {"loose_path", {{"k", 3}, {"l", 2}}},
      {"loose_path", {{"k", 3}, {"l", 3}}},
      {"loose_path", {{"k", 4}, {"l", 2}}},
  };
  return spec;
}

CorpusSpec CorpusSpec::design_corpus() {
  CorpusSpec spec;
  spec.filter = ConnectivityFilter::ConnectedOnly;
  spec.families = {
      {"fano_plane", {}},
      {"complete_graph", {{"n", 2}}},
      {"complete_graph", {{"n", 3}}},
      {"complete_graph", {{"n", 4}}},
      {"complete_graph", {{"n", 5}}},
      {"complete_graph", {{"n", 6}}},
      {"complete_kuniform", {{"n", 3}, {"k", 3}}},
      {"complete_kuniform", {{"n", 4}, {"k", 4}}},
      {"complete_kuniform", {{"n", 5}, {"k", 5}}},
      {"complete_kuniform", {{"n", 4}, {"k", 3}}},
      {"complete_kuniform", {{"n", 5}, {"k", 3}}},
      {"complete_kuniform", {{"n", 6}, {"k", 3}}},
      {"complete_kuniform", {{"n", 5}, {"k", 4}}},
      {"complete_kuniform", {{"n", 6}, {"k", 4}}},
  };
  return spec;
}

namespace {

std::int64_t param(const CorpusFamily& f, const std::string& name) {
  auto it = f.params.find(name);
  if (it == f.params.end()) throw GeneratorError("corpus family " + f.kind + " needs parameter " + name);
  return it->second;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<CorpusInstance> expand_corpus(const CorpusSpec& spec) {
  std::vector<CorpusInstance> raw;
  std::mt19937_64 rng(spec.seed);
  for (const auto& f : spec.families) {
    if (f.kind == "all_graphs") {
      const auto lo = static_cast<std::size_t>(param(f, "n_min"));
      const auto hi = static_cast<std::size_t>(param(f, "n_max"));
      for (std::size_t n = lo; n <= hi; ++n) {
        auto graphs = all_graphs(n);
        for (std::size_t i = 0; i < graphs.size(); ++i) {
          raw.push_back({"all_graphs(n=" + std::to_string(n) + ")#" + std::to_string(i + 1), std::move(graphs[i])});
        }
      }
    } else if (f.kind == "random_sweep") {
      const auto k = param(f, "k");
      const auto lo = param(f, "n_min");
      const auto hi = param(f, "n_max");
      const auto count = param(f, "count");
      for (auto n = lo; n <= hi; ++n) {
        const auto total = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
        if (total == 0) throw GeneratorError("random_sweep: k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
        const std::uint64_t m_max = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(2 * n));
        for (std::int64_t c = 0; c < count; ++c) {
          const auto m = static_cast<std::int64_t>(1 + rng() % m_max);
          const auto seed = static_cast<std::int64_t>(rng() >> 1);
          GeneratorSpec g{"random_uniform", {{"n", n}, {"k", k}, {"m", m}, {"seed", seed}}};
          raw.push_back({g.id(), generate(g)});
        }
      }
    } else {
      GeneratorSpec g{f.kind, f.params};
      raw.push_back({g.id(), generate(g)});
    }
  }

  std::vector<CorpusInstance> out;
  for (auto& inst : raw) {
    if (inst.graph.n() > spec.max_n || inst.graph.n() < 2) continue;
    const bool connected = is_connected(inst.graph);
    if (spec.filter == ConnectivityFilter::ConnectedOnly && !connected) continue;
    if (spec.filter == ConnectivityFilter::IncludeDisconnected && connected && inst.graph.m() > 0) {
      if (inst.graph.n() + 1 <= spec.max_n) {
        CorpusInstance extra{"with_isolated(" + inst.id + ",1)", with_isolated(inst.graph, 1)};
        out.push_back(std::move(inst));
        out.push_back(std::move(extra));
        continue;
      }
    }
    out.push_back(std::move(inst));
  }
  return out;
}

std::size_t CorpusReport::failures() const {
  std::size_t total = 0;
  for (const auto& [id, c] : counts) total += c.fail;
  return total;
}

CorpusReport certify_corpus(const CorpusSpec& spec, const SolverOptions& opts) {
  SolverOptions o = opts;
  o.seed = spec.seed;
  auto report = certify_instances(expand_corpus(spec), o);
  report.seed = spec.seed;
  return report;
}

CorpusReport certify_instances(std::vector<CorpusInstance> instances, const SolverOptions& opts) {
  CorpusReport report;
  report.seed = opts.seed;
  std::vector<std::vector<Certificate>> slots(instances.size());
  // Parallelism is across instances; each instance solves its vertices serially.
  SolverOptions inner = opts;
  inner.threads = 1;
  detail::parallel_for(instances.size(), opts.threads, [&](std::size_t i) {
    slots[i] = certify_instance(instances[i].graph, instances[i].id, inner);
  });

  for (TheoremId id : all_theorems()) report.counts[id] = {};
  for (std::size_t i = 0; i < instances.size(); ++i) {
    bool failed = false;
    for (auto& c : slots[i]) {
      auto& counts = report.counts[c.theorem];
      switch (c.outcome) {
        case Outcome::Pass: ++counts.pass; break;
        case Outcome::Fail: ++counts.fail; failed = true; break;
        case Outcome::Skipped: ++counts.skipped; break;
        case Outcome::Indeterminate: ++counts.indeterminate; break;
      }
      report.certificates.push_back(std::move(c));
    }
    if (failed) report.failing_instances.emplace_back(instances[i].id, render(instances[i].graph));
  }
  report.instances = std::move(instances);
  return report;
}

}  // namespace hyperperron
