#ifndef HYPERPERRON_TESTS_ORACLES_HPP
#define HYPERPERRON_TESTS_ORACLES_HPP

// Slow, independent reference implementations used only by the tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "hyperperron/generators.hpp"
#include "hyperperron/hypergraph.hpp"

namespace oracle {

using hyperperron::Hypergraph;
using hyperperron::Vertex;

/// Explicit order-k Laplacian tensor as a flat n^k array.
struct DenseTensor {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<double> entries;

  std::size_t index(const std::vector<std::size_t>& idx) const {
    std::size_t flat = 0;
    for (auto i : idx) flat = flat * n + i;
    return flat;
  }
};

inline DenseTensor dense_laplacian(const Hypergraph& h) {
  DenseTensor t;
  t.n = h.n();
  t.k = h.k();
  std::size_t size = 1;
  for (std::size_t i = 0; i < t.k; ++i) size *= t.n;
  t.entries.assign(size, 0.0);
  double factorial = 1.0;
  for (std::size_t i = 2; i < t.k; ++i) factorial *= static_cast<double>(i);
  for (const auto& e : h.edges()) {
    std::vector<std::size_t> perm(e.begin(), e.end());
    std::sort(perm.begin(), perm.end());
    do {
      t.entries[t.index(perm)] -= 1.0 / factorial;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  for (Vertex v = 0; v < t.n; ++v) {
    std::vector<std::size_t> diag(t.k, v);
    t.entries[t.index(diag)] += static_cast<double>(h.degree(v));
  }
  return t;
}

/// sum over all index tuples of L_{i1..ik} x_i1 ... x_ik.
inline double dense_form(const DenseTensor& t, const std::vector<double>& x) {
  double total = 0.0;
  std::vector<std::size_t> idx(t.k, 0);
  for (std::size_t flat = 0; flat < t.entries.size(); ++flat) {
    std::size_t rest = flat;
    double p = t.entries[flat];
    for (std::size_t d = t.k; d-- > 0;) {
      p *= x[rest % t.n];
      rest /= t.n;
    }
    total += p;
  }
  return total;
}

/// (L x^{k-1})_i: contract all but the first index.
inline std::vector<double> dense_apply(const DenseTensor& t, const std::vector<double>& x) {
  std::vector<double> out(t.n, 0.0);
  for (std::size_t flat = 0; flat < t.entries.size(); ++flat) {
    std::size_t rest = flat;
    double p = t.entries[flat];
    for (std::size_t d = t.k; d-- > 1;) {
      p *= x[rest % t.n];
      rest /= t.n;
    }
    out[rest] += p;
  }
  return out;
}

/// Smallest eigenvalue of [[a, b], [b, c]].
inline double min_eigenvalue_2x2(double a, double b, double c) {
  return 0.5 * (a + c) - std::sqrt(0.25 * (a - c) * (a - c) + b * b);
}

/// Connectivity by union-find over edges.
inline std::size_t union_find_components(const Hypergraph& h) {
  std::vector<std::size_t> parent(h.n());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : h.edges())
    for (std::size_t i = 1; i < e.size(); ++i) parent[find(e[i])] = find(e[0]);
  std::size_t count = 0;
  for (Vertex v = 0; v < h.n(); ++v) count += find(v) == v ? 1 : 0;
  return count;
}

/// All-pairs distances by Floyd-Warshall on the co-occurrence graph;
/// nullopt for unreachable pairs.
inline std::vector<std::vector<std::optional<std::size_t>>> floyd_warshall(const Hypergraph& h) {
  const std::size_t n = h.n();
  const std::size_t inf = std::numeric_limits<std::size_t>::max() / 4;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (Vertex v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& e : h.edges())
    for (auto a : e)
      for (auto b : e)
        if (a != b) d[a][b] = 1;
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) d[a][b] = std::min(d[a][b], d[a][m] + d[m][b]);
  std::vector<std::vector<std::optional<std::size_t>>> out(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (d[a][b] < inf) out[a][b] = d[a][b];
  return out;
}

/// Cut size of S given as a membership vector.
inline std::size_t cut_size(const Hypergraph& h, const std::vector<bool>& in) {
  std::size_t c = 0;
  for (const auto& e : h.edges()) {
    bool any_in = false, any_out = false;
    for (auto v : e) (in[v] ? any_in : any_out) = true;
    c += (any_in && any_out) ? 1 : 0;
  }
  return c;
}

struct Brute {
  std::size_t bw = 0;
  double iso = 0.0;
  std::size_t ec = 0;
};

/// bw, i(G) and e(G) by visiting every subset through a counter over
/// membership vectors.
inline Brute brute_cuts(const Hypergraph& h) {
  const std::size_t n = h.n();
  Brute out;
  out.bw = std::numeric_limits<std::size_t>::max();
  out.iso = std::numeric_limits<double>::infinity();
  out.ec = std::numeric_limits<std::size_t>::max();
  std::vector<bool> in(n, false);
  while (true) {
    std::size_t i = 0;
    while (i < n && in[i]) in[i++] = false;
    if (i == n) break;
    in[i] = true;
    const std::size_t size = static_cast<std::size_t>(std::count(in.begin(), in.end(), true));
    if (size == n) continue;
    const std::size_t c = cut_size(h, in);
    out.ec = std::min(out.ec, c);
    if (size == n / 2) out.bw = std::min(out.bw, c);
    if (2 * size <= n) out.iso = std::min(out.iso, static_cast<double>(c) / static_cast<double>(size));
  }
  return out;
}

/// Rounds a point of the simplex to the lattice with the given resolution
/// (largest-remainder method), so the sum stays exactly `resolution`.
inline std::vector<double> round_to_lattice(const std::vector<double>& y, std::size_t resolution) {
  const double res = static_cast<double>(resolution);
  std::vector<double> out(y.size());
  std::vector<std::pair<double, std::size_t>> remainders;
  std::size_t used = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double scaled = y[i] * res;
    const double floor_value = std::floor(scaled);
    out[i] = floor_value;
    used += static_cast<std::size_t>(floor_value);
    remainders.emplace_back(scaled - floor_value, i);
  }
  std::sort(remainders.begin(), remainders.end(), [](auto a, auto b) { return a.first > b.first; });
  for (std::size_t t = 0; used < resolution; ++t, ++used) out[remainders[t].second] += 1.0;
  for (auto& v : out) v /= res;
  return out;
}

/// Random hypergraphs for property tests.
inline std::vector<Hypergraph> random_family(std::uint64_t seed, std::size_t count, std::size_t n_max,
                                             std::size_t k_max) {
  std::mt19937_64 rng(seed);
  std::vector<Hypergraph> out;
  while (out.size() < count) {
    const std::size_t k = 2 + rng() % (k_max - 1);
    const std::size_t n = k + rng() % (n_max - k + 1);
    std::size_t total = 1;
    for (std::size_t i = 1; i <= k; ++i) total = total * (n - k + i) / i;
    const std::size_t m = 1 + rng() % std::min<std::size_t>(total, 2 * n);
    out.push_back(hyperperron::random_uniform(n, k, m, rng()));
  }
  return out;
}

}  // namespace oracle

#endif  // HYPERPERRON_TESTS_ORACLES_HPP
