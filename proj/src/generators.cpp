#include "hyperperron/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace hyperperron {

namespace {

// Exact binomial for desk-scale arguments; saturates instead of overflowing.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    if (r > UINT64_MAX / (n - k + i)) return UINT64_MAX;
    r = r * (n - k + i) / i;
  }
  return r;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw GeneratorError(what);
}

}  // namespace

Hypergraph complete_graph(std::size_t n) { return complete_kuniform(n, 2); }

Hypergraph complete_kuniform(std::size_t n, std::size_t k) {
  require(k >= 2, "complete_kuniform: k must be at least 2");
  require(n >= k, "complete_kuniform: n must be at least k");
  require(binomial(n, k) <= 200000, "complete_kuniform: too many edges");
  std::vector<Edge> edges;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    Edge e;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) e.push_back(i);
    edges.push_back(std::move(e));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return Hypergraph(n, k, std::move(edges));
}

Hypergraph path_graph(std::size_t n) {
  require(n >= 2, "path_graph: n must be at least 2");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Hypergraph(n, 2, std::move(edges));
}

Hypergraph cycle_graph(std::size_t n) {
  require(n >= 3, "cycle_graph: n must be at least 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Hypergraph(n, 2, std::move(edges));
}

Hypergraph loose_path(std::size_t k, std::size_t length) {
  require(k >= 2, "loose_path: k must be at least 2");
  require(length >= 1, "loose_path: length must be at least 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < length; ++i) {
    Edge e(k);
    std::iota(e.begin(), e.end(), i * (k - 1));
    edges.push_back(std::move(e));
  }
  return Hypergraph(length * (k - 1) + 1, k, std::move(edges));
}

Hypergraph fano_plane() {
  return Hypergraph(7, 3,
                    {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

Hypergraph random_uniform(std::size_t n, std::size_t k, std::size_t m, std::uint64_t seed) {
  require(k >= 2, "random_uniform: k must be at least 2");
  require(n >= k, "random_uniform: n must be at least k");
  require(m <= binomial(n, k), "random_uniform: m exceeds C(n,k)");
  std::mt19937_64 rng(seed);
  std::set<Edge> chosen;
  std::vector<Edge> edges;
  std::vector<Vertex> pool(n);
  while (edges.size() < m) {
    std::iota(pool.begin(), pool.end(), Vertex{0});
    // Partial Fisher-Yates with raw engine output keeps the stream portable.
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t j = i + static_cast<std::size_t>(rng() % (n - i));
      std::swap(pool[i], pool[j]);
    }
    Edge e(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(e.begin(), e.end());
    if (chosen.insert(e).second) edges.push_back(std::move(e));
  }
  return Hypergraph(n, k, std::move(edges));
}

Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
  require(a.k() == b.k(), "disjoint_union: uniformity mismatch");
  std::vector<Edge> edges = a.edges();
  for (Edge e : b.edges()) {
    for (auto& v : e) v += a.n();
    edges.push_back(std::move(e));
  }
  return Hypergraph(a.n() + b.n(), a.k(), std::move(edges));
}

Hypergraph with_isolated(const Hypergraph& h, std::size_t extra) {
  return Hypergraph(h.n() + extra, h.k(), h.edges());
}

std::vector<Hypergraph> all_graphs(std::size_t n) {
  require(n >= 1 && n <= 6, "all_graphs: n must be in 1..6");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::vector<std::vector<std::size_t>> pair_index(n, std::vector<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      pair_index[i][j] = pair_index[j][i] = pairs.size();
      pairs.emplace_back(i, j);
    }

  // For every vertex permutation, where each pair bit moves to.
  std::vector<std::vector<std::size_t>> moves;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    std::vector<std::size_t> to(pairs.size());
    for (std::size_t p = 0; p < pairs.size(); ++p)
      to[p] = pair_index[perm[pairs[p].first]][perm[pairs[p].second]];
    moves.push_back(std::move(to));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Hypergraph> out;
  const std::uint32_t total = 1u << pairs.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    bool canonical = true;
    for (const auto& to : moves) {
      std::uint32_t image = 0;
      for (std::size_t p = 0; p < pairs.size(); ++p)
        if (mask >> p & 1u) image |= 1u << to[p];
      if (image < mask) {
        canonical = false;
        break;
      }
    }
    if (!canonical) continue;
    std::vector<Edge> edges;
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (mask >> p & 1u) edges.push_back({pairs[p].first, pairs[p].second});
    out.emplace_back(n, 2, std::move(edges));
  }
  return out;
}

std::string GeneratorSpec::id() const {
  std::ostringstream out;
  out << family;
  if (!params.empty()) {
    out << '(';
    bool first = true;
    for (const auto& [key, value] : params) {
      if (!first) out << ',';
      first = false;
      out << key << '=' << value;
    }
    out << ')';
  }
  return out.str();
}

namespace {

std::size_t param(const GeneratorSpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) {
    throw GeneratorError(spec.family + ": missing parameter --" + key);
  }
  if (it->second < 0) throw GeneratorError(spec.family + ": parameter --" + key + " is negative");
  return static_cast<std::size_t>(it->second);
}

}  // namespace

Hypergraph generate(const GeneratorSpec& spec) {
  const auto& f = spec.family;
  if (f == "complete_graph") return complete_graph(param(spec, "n"));
  if (f == "complete_kuniform") return complete_kuniform(param(spec, "n"), param(spec, "k"));
  if (f == "path_graph") return path_graph(param(spec, "n"));
  if (f == "cycle_graph") return cycle_graph(param(spec, "n"));
  if (f == "loose_path") return loose_path(param(spec, "k"), param(spec, "l"));
  if (f == "fano_plane") return fano_plane();
  if (f == "random_uniform") {
    auto seed = spec.params.count("seed") ? param(spec, "seed") : 0;
    return random_uniform(param(spec, "n"), param(spec, "k"), param(spec, "m"), seed);
  }
  throw GeneratorError("unknown generator family '" + f + "'");
}

const std::vector<std::string>& generator_families() {
  static const std::vector<std::string> names = {
      "complete_graph", "complete_kuniform", "path_graph",    "cycle_graph",
      "loose_path",     "fano_plane",        "random_uniform"};
  return names;
}

}  // namespace hyperperron
