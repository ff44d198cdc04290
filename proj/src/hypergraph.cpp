#include "hyperperron/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

namespace hyperperron {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Hypergraph::Hypergraph(std::size_t n, std::size_t k, std::vector<Edge> edges)
    : n_(n), k_(k), edges_(std::move(edges)), incidence_(n) {
  if (n_ == 0) throw InvalidHypergraph("vertex count must be positive");
  if (k_ < 2) throw InvalidHypergraph("uniformity must be at least 2");
  for (auto& e : edges_) {
    if (e.size() != k_) {
      throw InvalidHypergraph("edge has " + std::to_string(e.size()) +
                              " vertices, expected " + std::to_string(k_));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw InvalidHypergraph("edge repeats a vertex");
    }
    if (e.back() >= n_) {
      throw InvalidHypergraph("vertex id " + std::to_string(e.back() + 1) + " out of range");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InvalidHypergraph("duplicate edge");
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    for (Vertex v : edges_[e]) incidence_[v].push_back(e);
  }
}

const std::vector<std::size_t>& Hypergraph::incident(Vertex v) const {
  if (v >= n_) throw std::out_of_range("vertex " + std::to_string(v + 1) + " out of range");
  return incidence_[v];
}

std::size_t Hypergraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& inc : incidence_) best = std::max(best, inc.size());
  return best;
}

std::size_t Hypergraph::min_degree() const {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& inc : incidence_) best = std::min(best, inc.size());
  return best;
}

bool Hypergraph::contains(std::size_t e, Vertex v) const {
  return std::binary_search(edges_[e].begin(), edges_[e].end(), v);
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t to_count(std::string_view tok, std::size_t line, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("malformed ") + what + " '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Hypergraph parse(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokens(line);
    if (toks.empty() || toks.front().front() == '#') continue;

    if (!header) {
      if (toks.size() != 2) throw ParseError(lineno, "malformed header, expected \"n k\"");
      std::size_t n = to_count(toks[0], lineno, "header");
      std::size_t k = to_count(toks[1], lineno, "header");
      if (n == 0) throw ParseError(lineno, "malformed header, vertex count must be positive");
      if (k < 2) throw ParseError(lineno, "malformed header, uniformity must be at least 2");
      header.emplace(n, k);
      continue;
    }

    auto [n, k] = *header;
    if (toks.size() != k) {
      throw ParseError(lineno, "edge has " + std::to_string(toks.size()) +
                                   " vertices, expected " + std::to_string(k));
    }
    Edge e;
    e.reserve(k);
    for (auto tok : toks) {
      std::size_t v = to_count(tok, lineno, "vertex id");
      if (v < 1 || v > n) {
        throw ParseError(lineno, "vertex id " + std::string(tok) + " out of range 1.." +
                                     std::to_string(n));
      }
      e.push_back(v - 1);
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw ParseError(lineno, "duplicate vertex inside edge");
    }
    if (!seen.insert(e).second) throw ParseError(lineno, "duplicate edge");
    edges.push_back(std::move(e));
  }
  if (!header) throw ParseError(lineno == 0 ? 1 : lineno, "malformed header, input is empty");
  return Hypergraph(header->first, header->second, std::move(edges));
}

Hypergraph parse_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse(in);
}

std::string render(const Hypergraph& h) {
  std::ostringstream out;
  out << h.n() << ' ' << h.k() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out << ' ';
      out << e[i] + 1;
    }
    out << '\n';
  }
  return out.str();
}

ComponentLabeling components(const Hypergraph& h) {
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  ComponentLabeling out;
  out.labels.assign(h.n(), unset);
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < h.n(); ++start) {
    if (out.labels[start] != unset) continue;
    out.labels[start] = out.count;
    stack.push_back(start);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (auto e : h.incident(u)) {
        for (Vertex w : h.edge(e)) {
          if (out.labels[w] == unset) {
            out.labels[w] = out.count;
            stack.push_back(w);
          }
        }
      }
    }
    ++out.count;
  }
  return out;
}

bool is_connected(const Hypergraph& h) { return components(h).count == 1; }

std::vector<Distance> distances_from(const Hypergraph& h, Vertex source) {
  if (source >= h.n()) throw std::out_of_range("vertex " + std::to_string(source + 1) + " out of range");
  std::vector<Distance> dist(h.n());
  std::vector<bool> edge_used(h.m(), false);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    for (auto e : h.incident(u)) {
      // An edge first reached from u gives every member distance d(u)+1 at most;
      // later visits cannot improve on that.
      if (edge_used[e]) continue;
      edge_used[e] = true;
      for (Vertex w : h.edge(e)) {
        if (!dist[w]) {
          dist[w] = *dist[u] + 1;
          queue.push(w);
        }
      }
    }
  }
  return dist;
}

Distance distance(const Hypergraph& h, Vertex u, Vertex v) {
  if (v >= h.n()) throw std::out_of_range("vertex " + std::to_string(v + 1) + " out of range");
  return distances_from(h, u)[v];
}

Distance eccentricity(const Hypergraph& h, Vertex v) {
  std::size_t best = 0;
  for (const auto& d : distances_from(h, v)) {
    if (!d) return std::nullopt;
    best = std::max(best, *d);
  }
  return best;
}

Distance diameter(const Hypergraph& h) {
  std::size_t best = 0;
  for (Vertex v = 0; v < h.n(); ++v) {
    auto ecc = eccentricity(h, v);
    if (!ecc) return std::nullopt;
    best = std::max(best, *ecc);
  }
  return best;
}

Distance radius(const Hypergraph& h) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < h.n(); ++v) {
    auto ecc = eccentricity(h, v);
    if (!ecc) return std::nullopt;
    best = std::min(best, *ecc);
  }
  return best;
}

}  // namespace hyperperron
