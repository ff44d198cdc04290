#include "hyperperron/perron.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hyperperron/tensor_form.hpp"
#include "parallel.hpp"

namespace hyperperron {

std::string to_string(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::ProjectedGradient: return "pg";
    case Method::ShiftedPower: return "power";
    case Method::Both: return "both";
  }
  return "?";
}

std::string to_string(MethodTag m) {
  switch (m) {
    case MethodTag::ProjectedGradient: return "projected_gradient";
    case MethodTag::ShiftedPower: return "shifted_power";
    case MethodTag::ExactK2: return "exact_k2";
    case MethodTag::BlockReduction: return "block_reduction";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  if (name == "auto") return Method::Auto;
  if (name == "pg") return Method::ProjectedGradient;
  if (name == "power") return Method::ShiftedPower;
  if (name == "both") return Method::Both;
  throw std::invalid_argument("unknown method '" + name + "' (expected auto|pg|power|both)");
}

namespace {

constexpr double kGradientFloor = 1e-12;
constexpr double kPerturbation = 1e-12;
constexpr double kKktLimit = 1e-6;
constexpr double kAgreement = 1e-6;
constexpr double kExactAgreement = 1e-8;
constexpr std::size_t kStallWindow = 10;
constexpr double kStallRelative = 1e-12;
constexpr double kStationarity = 1e-7;

void check_instance(const Hypergraph& h, Vertex j) {
  if (h.n() < 2) throw std::invalid_argument("inverse Perron value needs at least 2 vertices");
  if (j >= h.n()) throw std::out_of_range("vertex " + std::to_string(j + 1) + " out of range");
}

double ipow(double base, std::size_t exp) {
  double r = 1.0;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

double root(double v, std::size_t k) {
  if (k == 2) return std::sqrt(v);
  return std::pow(v, 1.0 / static_cast<double>(k));
}

// The problem restricted to V \ {j}: local ids 0..n-2, full degrees on the
// diagonal, and only the edges that avoid j.
struct Reduced {
  std::size_t k = 0;
  std::vector<Vertex> global;
  std::vector<double> degree;
  std::vector<Edge> edges;
  std::vector<std::vector<std::size_t>> incident;

  Reduced(const Hypergraph& h, Vertex j) : k(h.k()) {
    std::vector<std::size_t> local(h.n(), 0);
    for (Vertex v = 0; v < h.n(); ++v) {
      if (v == j) continue;
      local[v] = global.size();
      global.push_back(v);
      degree.push_back(static_cast<double>(h.degree(v)));
    }
    incident.resize(global.size());
    for (std::size_t e = 0; e < h.m(); ++e) {
      if (h.contains(e, j)) continue;
      Edge le;
      for (Vertex v : h.edge(e)) le.push_back(local[v]);
      for (auto v : le) incident[v].push_back(edges.size());
      edges.push_back(std::move(le));
    }
  }

  std::size_t size() const { return global.size(); }
};

// Full-length x from a local vector, normalised so sum x^k = 1.
std::vector<double> to_minimizer(const Reduced& r, Vertex j, std::vector<double> local) {
  double norm = 0.0;
  for (double v : local) norm += ipow(v, r.k);
  norm = root(norm, r.k);
  for (auto& v : local) v /= norm;
  return embed_without(j, local);
}

double kkt_of(const Hypergraph& h, Vertex j, double value, const std::vector<double>& x) {
  return h_eigen_residual(h, j, value, restrict_without(j, x)).residual_inf;
}

// ---------------------------------------------------------------- power ---

// One block of s I - L(j): a set of local vertices closed under the edges
// avoiding j. Indices here are block-local.
struct Block {
  std::size_t k = 0;
  std::vector<std::size_t> members;  // Reduced-local ids
  std::vector<double> diagonal;      // s - d_i
  std::vector<Edge> edges;
  std::vector<std::vector<std::size_t>> incident;
};

std::vector<Block> split_blocks(const Reduced& r, double shift) {
  const std::size_t size = r.size();
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> label(size, unset);
  std::vector<Block> blocks;
  for (std::size_t start = 0; start < size; ++start) {
    if (label[start] != unset) continue;
    Block b;
    b.k = r.k;
    std::vector<std::size_t> stack{start};
    label[start] = blocks.size();
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      b.members.push_back(u);
      for (auto e : r.incident[u])
        for (auto w : r.edges[e])
          if (label[w] == unset) {
            label[w] = blocks.size();
            stack.push_back(w);
          }
    }
    std::sort(b.members.begin(), b.members.end());
    blocks.push_back(std::move(b));
  }
  for (auto& b : blocks) {
    std::vector<std::size_t> pos(size, 0);
    for (std::size_t i = 0; i < b.members.size(); ++i) pos[b.members[i]] = i;
    b.incident.resize(b.members.size());
    for (auto m : b.members) b.diagonal.push_back(shift - r.degree[m]);
    for (std::size_t e = 0; e < r.edges.size(); ++e) {
      if (label[r.edges[e].front()] != static_cast<std::size_t>(&b - blocks.data())) continue;
      Edge le;
      for (auto v : r.edges[e]) le.push_back(pos[v]);
      for (auto v : le) b.incident[v].push_back(b.edges.size());
      b.edges.push_back(std::move(le));
    }
  }
  return blocks;
}

// (s I - L(j)) y^{k-1} restricted to the block.
void apply_shifted(const Block& b, const std::vector<double>& y, std::vector<double>& out) {
  for (std::size_t i = 0; i < y.size(); ++i) {
    double acc = b.diagonal[i] * ipow(y[i], b.k - 1);
    for (auto e : b.incident[i]) {
      double p = 1.0;
      for (auto l : b.edges[e])
        if (l != i) p *= y[l];
      acc += p;
    }
    out[i] = acc;
  }
}

void normalize_k(std::vector<double>& y, std::size_t k) {
  double norm = 0.0;
  for (double v : y) norm += ipow(v, k);
  norm = root(norm, k);
  for (auto& v : y) v /= norm;
}

struct PowerOutcome {
  std::vector<double> y;  // block-local, unit k-norm
  double lower = 0.0;     // Collatz-Wielandt bounds on rho
  double upper = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

// Normalised power iteration y <- ((s I - L(j)) y^{k-1})^{[1/(k-1)]}. The block
// is weakly irreducible with a positive diagonal, so min/max of the ratios
// (T y^{k-1})_i / y_i^{k-1} bracket rho and close on convergence.
PowerOutcome power_block(const Block& b, const SolverOptions& opts) {
  const std::size_t size = b.members.size();
  const std::size_t k = b.k;
  PowerOutcome out;
  out.y.assign(size, 1.0);
  normalize_k(out.y, k);
  std::vector<double> t(size);
  double epsilon = kPerturbation;
  double previous = 0.0;
  std::size_t stall = 0;
  for (std::size_t it = 1; it <= opts.max_iter; ++it) {
    out.iterations = it;
    apply_shifted(b, out.y, t);
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
      double ratio = t[i] / ipow(out.y[i], k - 1);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    out.lower = lo;
    out.upper = hi;
    if (hi - lo <= opts.tol * std::max(1.0, hi)) {
      out.converged = true;
      break;
    }
    // The perturbation keeps every coordinate strictly positive; once the
    // bracket stops moving it is dropped so it cannot bias the fixed point.
    if (std::abs(hi - previous) <= kStallRelative * std::max(1.0, hi)) {
      if (++stall >= kStallWindow) {
        epsilon = 0.0;
        stall = 0;
      }
    } else {
      stall = 0;
    }
    previous = hi;
    for (std::size_t i = 0; i < size; ++i) out.y[i] = root(t[i], k - 1) + epsilon;
    normalize_k(out.y, k);
  }
  return out;
}

// Same iteration on all of V \ {j} at once; only the value is meaningful.
// Stops when the value stalls.
PowerOutcome power_whole(const Reduced& r, double shift, const SolverOptions& opts) {
  Block whole;
  whole.k = r.k;
  whole.members.resize(r.size());
  std::iota(whole.members.begin(), whole.members.end(), std::size_t{0});
  for (auto d : r.degree) whole.diagonal.push_back(shift - d);
  whole.edges = r.edges;
  whole.incident = r.incident;

  const std::size_t k = r.k;
  PowerOutcome out;
  out.y.assign(r.size(), 1.0);
  normalize_k(out.y, k);
  std::vector<double> t(r.size());
  double previous = 0.0;
  std::size_t stall = 0;
  for (std::size_t it = 1; it <= opts.max_iter; ++it) {
    out.iterations = it;
    apply_shifted(whole, out.y, t);
    double rayleigh = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) rayleigh += out.y[i] * t[i];
    out.lower = out.upper = rayleigh;
    if (std::abs(rayleigh - previous) <= kStallRelative * std::max(1.0, rayleigh)) {
      if (++stall >= kStallWindow) {
        out.converged = true;
        break;
      }
    } else {
      stall = 0;
    }
    previous = rayleigh;
    for (std::size_t i = 0; i < t.size(); ++i) out.y[i] = root(t[i], k - 1) + kPerturbation;
    normalize_k(out.y, k);
  }
  return out;
}

// ------------------------------------------------------ projected gradient ---

// f(y) = sum_i d_i y_i - k sum_e prod_{i in e} y_i^{1/k}
double simplex_objective(const Reduced& r, const std::vector<double>& y) {
  double total = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) total += r.degree[i] * y[i];
  const double kd = static_cast<double>(r.k);
  for (const auto& e : r.edges) {
    double p = 1.0;
    for (auto v : e) p *= root(y[v], r.k);
    total -= kd * p;
  }
  return total;
}

struct DescentOutcome {
  std::vector<double> y;
  double value = 0.0;
  std::size_t iterations = 0;
  bool stopped = false;  // convergence rule met before the budget ran out
};

// y_i * df/dy_i = d_i y_i - sum_{e ni i} prod_{l in e} y_l^{1/k}; bounded even
// where the plain gradient is singular.
void scaled_gradient(const Reduced& r, const std::vector<double>& y, std::vector<double>& s) {
  for (std::size_t i = 0; i < y.size(); ++i) s[i] = r.degree[i] * y[i];
  for (const auto& e : r.edges) {
    double p = 1.0;
    for (auto v : e) p *= root(y[v], r.k);
    for (auto v : e) s[v] -= p;
  }
}

DescentOutcome descend(const Reduced& r, std::vector<double> y, const SolverOptions& opts) {
  const std::size_t size = y.size();
  std::vector<double> s(size), d(size), trial(size);
  double fy = simplex_objective(r, y);
  DescentOutcome out;
  std::size_t stall = 0;
  double step = 1.0;
  for (std::size_t it = 1; it <= opts.max_iter; ++it) {
    out.iterations = it;
    // Gradient projected onto the simplex tangent space in the metric
    // diag(y): d_i = -y_i (g_i - f), using sum_i y_i g_i = f (degree-1
    // homogeneity).
    scaled_gradient(r, y, s);
    double f = 0.0;
    for (double v : s) f += v;
    double slope = 0.0;
    double max_step = std::numeric_limits<double>::infinity();
    const double ymax = *std::max_element(y.begin(), y.end());
    double stationarity = 0.0;  // the H-eigen residual on the support
    for (std::size_t i = 0; i < size; ++i) {
      d[i] = f * y[i] - s[i];
      if (y[i] > 0.0) slope -= d[i] * d[i] / y[i];
      if (d[i] < 0.0) max_step = std::min(max_step, -y[i] / d[i]);
      if (y[i] > kSupportTolerance * ymax)
        stationarity = std::max(stationarity, std::abs(d[i]) / root(y[i], r.k));
    }
    if (stall >= kStallWindow && stationarity <= kStationarity) {
      out.stopped = true;
      break;
    }
    if (slope == 0.0) {
      out.stopped = true;
      break;
    }
    // Backtracking by halving; each search starts from twice the last
    // accepted step, capped at 1 and kept strictly inside the orthant.
    step = std::min({1.0, 2.0 * step, 0.99 * max_step});
    double fz = fy;
    bool accepted = false;
    while (step > 1e-30) {
      double sum = 0.0;
      for (std::size_t i = 0; i < size; ++i) {
        trial[i] = std::max(y[i] + step * d[i], 0.0);
        sum += trial[i];
      }
      for (auto& v : trial) v /= sum;
      fz = simplex_objective(r, trial);
      if (fz <= fy + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {  // no descent left at working precision
      out.stopped = true;
      break;
    }
    double change = std::abs(fy - fz) / std::max(1.0, std::abs(fy));
    y.swap(trial);
    fy = fz;
    stall = change < kStallRelative ? stall + 1 : 0;
  }
  // Polish: drop coordinates that have decayed below the floor and evaluate
  // the objective on the rounded support.
  double ymax = *std::max_element(y.begin(), y.end());
  double sum = 0.0;
  for (auto& v : y) {
    if (v < kGradientFloor * ymax) v = 0.0;
    sum += v;
  }
  for (auto& v : y) v /= sum;
  out.value = simplex_objective(r, y);
  out.y = std::move(y);
  return out;
}

std::vector<std::vector<double>> starting_points(std::size_t size, const SolverOptions& opts, Vertex j) {
  std::vector<std::vector<double>> starts;
  starts.emplace_back(size, 1.0 / static_cast<double>(size));
  std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                    static_cast<std::uint32_t>(j)};
  std::mt19937_64 rng(seq);
  for (std::size_t s = 1; s < opts.starts; ++s) {
    std::vector<double> y(size);
    double sum = 0.0;
    for (auto& v : y) {
      v = 0.01 + static_cast<double>(rng() >> 11) * 0x1.0p-53;
      sum += v;
    }
    for (auto& v : y) v /= sum;
    starts.push_back(std::move(y));
  }
  return starts;
}

bool agree(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max(1.0, std::max(a, b)); }

std::string format(double v) {
  std::ostringstream out;
  out.precision(10);
  out << v;
  return out.str();
}

}  // namespace

PerronResult solve_projected_gradient(const Hypergraph& h, Vertex j, const SolverOptions& opts) {
  check_instance(h, j);
  Reduced r(h, j);
  PerronResult best;
  best.vertex = j;
  best.method = MethodTag::ProjectedGradient;
  best.value = std::numeric_limits<double>::infinity();
  bool all_stopped = true;
  std::size_t total_iterations = 0;
  for (auto& start : starting_points(r.size(), opts, j)) {
    auto run = descend(r, std::move(start), opts);
    total_iterations += run.iterations;
    all_stopped = all_stopped && run.stopped;
    if (run.value < best.value) {
      best.value = run.value;
      std::vector<double> x(run.y.size());
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = root(run.y[i], r.k);
      best.minimizer = to_minimizer(r, j, std::move(x));
    }
  }
  best.iterations = total_iterations;
  best.value = laplacian_form(h, best.minimizer);
  best.kkt_residual = kkt_of(h, j, best.value, best.minimizer);
  best.converged = all_stopped && best.kkt_residual <= kKktLimit;
  if (!all_stopped) best.note = "iteration budget exhausted";
  else if (!best.converged) best.note = "KKT residual " + format(best.kkt_residual) + " above 1e-6";
  return best;
}

PerronResult solve_shifted_power(const Hypergraph& h, Vertex j, const SolverOptions& opts) {
  check_instance(h, j);
  Reduced r(h, j);
  const double shift = static_cast<double>(h.max_degree()) + 1.0;
  auto blocks = split_blocks(r, shift);

  PerronResult out;
  out.vertex = j;
  out.converged = true;
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> best_local;
  bool best_is_diagonal = false;

  for (const auto& b : blocks) {
    if (b.edges.empty()) {
      // A vertex on no edge avoiding j: its value is its own degree.
      double value = r.degree[b.members.front()];
      if (value < best) {
        best = value;
        best_local.assign(r.size(), 0.0);
        best_local[b.members.front()] = 1.0;
        best_is_diagonal = true;
      }
      continue;
    }
    auto run = power_block(b, opts);
    out.iterations += run.iterations;
    if (!run.converged) {
      out.converged = false;
      out.note = "power iteration budget exhausted (bracket " + format(shift - run.upper) + ", " +
                 format(shift - run.lower) + ")";
    }
    double value = shift - 0.5 * (run.lower + run.upper);
    if (value < best) {
      best = value;
      best_local.assign(r.size(), 0.0);
      for (std::size_t i = 0; i < b.members.size(); ++i) best_local[b.members[i]] = run.y[i];
      best_is_diagonal = false;
    }
  }

  out.method = best_is_diagonal ? MethodTag::BlockReduction : MethodTag::ShiftedPower;
  out.minimizer = to_minimizer(r, j, std::move(best_local));
  out.value = laplacian_form(h, out.minimizer);
  out.kkt_residual = kkt_of(h, j, out.value, out.minimizer);

  if (blocks.size() > 1) {
    auto whole = power_whole(r, shift, opts);
    out.iterations += whole.iterations;
    double perturbed = shift - whole.upper;
    if (!whole.converged || !agree(perturbed, out.value, kAgreement)) {
      out.converged = false;
      out.note = "perturbed whole-space iteration gives " + format(perturbed) + " vs block value " +
                 format(out.value);
    }
  }
  if (out.converged && out.kkt_residual > kKktLimit) {
    out.converged = false;
    out.note = "KKT residual " + format(out.kkt_residual) + " above 1e-6";
  }
  return out;
}

PerronResult solve_exact_k2(const Hypergraph& h, Vertex j) {
  check_instance(h, j);
  if (h.k() != 2) throw std::invalid_argument("exact eigensolver path requires k = 2");
  Reduced r(h, j);
  const auto size = static_cast<Eigen::Index>(r.size());
  Eigen::MatrixXd sub = Eigen::MatrixXd::Zero(size, size);
  for (Eigen::Index i = 0; i < size; ++i) sub(i, i) = r.degree[static_cast<std::size_t>(i)];
  for (const auto& e : r.edges) {
    auto a = static_cast<Eigen::Index>(e[0]);
    auto b = static_cast<Eigen::Index>(e[1]);
    sub(a, b) -= 1.0;
    sub(b, a) -= 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sub);
  PerronResult out;
  out.vertex = j;
  out.method = MethodTag::ExactK2;
  out.converged = solver.info() == Eigen::Success;
  out.value = solver.eigenvalues()(0);
  std::vector<double> local(r.size());
  for (std::size_t i = 0; i < local.size(); ++i)
    local[i] = std::abs(solver.eigenvectors()(static_cast<Eigen::Index>(i), 0));
  out.minimizer = to_minimizer(r, j, std::move(local));
  out.kkt_residual = kkt_of(h, j, out.value, out.minimizer);
  out.iterations = 1;
  return out;
}

PerronResult inverse_perron(const Hypergraph& h, Vertex j, const SolverOptions& opts) {
  check_instance(h, j);
  switch (opts.method) {
    case Method::ProjectedGradient: return solve_projected_gradient(h, j, opts);
    case Method::ShiftedPower: return solve_shifted_power(h, j, opts);
    case Method::Auto:
      if (h.k() == 2) {
        auto exact = solve_exact_k2(h, j);
        auto power = solve_shifted_power(h, j, opts);
        if (power.converged && !agree(exact.value, power.value, kExactAgreement)) {
          exact.converged = false;
          exact.note = "dense eigensolver " + format(exact.value) + " disagrees with power iteration " +
                       format(power.value);
        }
        return exact;
      }
      [[fallthrough]];
    case Method::Both: {
      auto pg = solve_projected_gradient(h, j, opts);
      auto power = solve_shifted_power(h, j, opts);
      if (pg.converged && power.converged) {
        auto out = pg.value < power.value ? pg : power;
        out.iterations = pg.iterations + power.iterations;
        if (!agree(pg.value, power.value, kAgreement)) {
          out.converged = false;
          out.note = "solvers disagree: projected gradient " + format(pg.value) + ", shifted power " +
                     format(power.value);
        }
        return out;
      }
      if (power.converged) return power;
      if (pg.converged) return pg;
      auto out = pg.value < power.value ? pg : power;
      out.note = "neither solver converged: " + pg.note + "; " + power.note;
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

PerronSummary perron_summary(const Hypergraph& h, const SolverOptions& opts) {
  PerronSummary out;
  out.per_vertex.resize(h.n());
  detail::parallel_for(h.n(), opts.threads, [&](std::size_t j) {
    SolverOptions local = opts;
    local.threads = 1;
    out.per_vertex[j] = inverse_perron(h, j, local);
  });
  out.converged = true;
  out.alpha = std::numeric_limits<double>::infinity();
  out.beta = -std::numeric_limits<double>::infinity();
  for (const auto& r : out.per_vertex) {
    out.converged = out.converged && r.converged;
    // Strict comparisons keep the smallest vertex id on ties.
    if (r.value < out.alpha) {
      out.alpha = r.value;
      out.argmin_vertex = r.vertex;
    }
    if (r.value > out.beta) {
      out.beta = r.value;
      out.argmax_vertex = r.vertex;
    }
  }
  return out;
}

bool is_connected_spectral(const Hypergraph& h, const SolverOptions& opts) {
  if (h.n() == 1) return true;
  return perron_summary(h, opts).beta > opts.connectivity_tol;
}

double oracle_grid(const Hypergraph& h, Vertex j, std::size_t resolution) {
  check_instance(h, j);
  const std::size_t parts = h.n() - 1;
  if (parts > 5) throw std::invalid_argument("grid oracle limited to n - 1 <= 5");
  if (resolution == 0) throw std::invalid_argument("grid resolution must be positive");

  // With y = c / resolution and x = y^{1/k}: L x^k = sum_i d_i y_i - k sum_e prod_{i in e} x_i.
  const double res = static_cast<double>(resolution);
  const double kd = static_cast<double>(h.k());
  std::vector<double> root_table(resolution + 1);
  for (std::size_t c = 0; c <= resolution; ++c) {
    root_table[c] = std::pow(static_cast<double>(c) / res, 1.0 / kd);
  }
  std::vector<std::size_t> count(h.n(), 0);
  double best = std::numeric_limits<double>::infinity();

  auto evaluate = [&] {
    double diagonal = 0.0;
    for (Vertex v = 0; v < h.n(); ++v) diagonal += static_cast<double>(h.degree(v) * count[v]);
    double products = 0.0;
    for (const auto& e : h.edges()) {
      double p = 1.0;
      for (Vertex v : e) p *= root_table[count[v]];
      products += p;
    }
    return diagonal / res - kd * products;
  };

  // All compositions of `resolution` into `parts` nonnegative parts.
  auto walk = [&](auto&& self, std::size_t part, std::size_t remaining) -> void {
    Vertex v = part < j ? part : part + 1;
    if (part + 1 == parts) {
      count[v] = remaining;
      best = std::min(best, evaluate());
      return;
    }
    for (std::size_t c = 0; c <= remaining; ++c) {
      count[v] = c;
      self(self, part + 1, remaining - c);
    }
  };
  walk(walk, 0, resolution);
  return best;
}

}  // namespace hyperperron
