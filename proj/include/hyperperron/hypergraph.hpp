#ifndef HYPERPERRON_HYPERGRAPH_HPP
#define HYPERPERRON_HYPERGRAPH_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyperperron {

/// Vertex ids are 0-based inside the library. Files and user-facing output
/// use 1-based ids.
using Vertex = std::size_t;
using Edge = std::vector<Vertex>;

class InvalidHypergraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parse failure carrying the 1-based line number of the offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Immutable k-uniform hypergraph.
///
/// Every edge holds exactly k distinct vertices from [0, n). Edges are kept in
/// canonical order: each edge sorted ascending, the edge list sorted
/// lexicographically. Duplicate edges are rejected. Isolated vertices are
/// allowed.
class Hypergraph {
 public:
  Hypergraph(std::size_t n, std::size_t k, std::vector<Edge> edges);

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t m() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_[e]; }

  /// Indices of the edges containing v, ascending.
  const std::vector<std::size_t>& incident(Vertex v) const;

  std::size_t degree(Vertex v) const { return incident(v).size(); }
  std::size_t max_degree() const;
  std::size_t min_degree() const;

  bool contains(std::size_t e, Vertex v) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incidence_;
};

/// Reads the canonical text format: header "n k", then one edge per line as
/// k space-separated 1-based vertex ids. Lines starting with '#' and blank
/// lines are ignored.
Hypergraph parse(std::istream& in);
Hypergraph parse_string(std::string_view text);

/// Writes the canonical text format (1-based, canonical edge order).
std::string render(const Hypergraph& h);

struct ComponentLabeling {
  std::vector<std::size_t> labels;  // labels[v] in [0, count)
  std::size_t count = 0;
};

/// Connected components; a vertex in no edge is its own component.
/// Labels are assigned in order of the smallest vertex of each component.
ComponentLabeling components(const Hypergraph& h);

bool is_connected(const Hypergraph& h);

/// Shortest-path length in edges; std::nullopt encodes +infinity.
using Distance = std::optional<std::size_t>;

Distance distance(const Hypergraph& h, Vertex u, Vertex v);

/// Breadth-first distances from source to every vertex.
std::vector<Distance> distances_from(const Hypergraph& h, Vertex source);

/// std::nullopt when some vertex is unreachable (infinite eccentricity).
Distance eccentricity(const Hypergraph& h, Vertex v);
Distance diameter(const Hypergraph& h);
Distance radius(const Hypergraph& h);

}  // namespace hyperperron

#endif  // HYPERPERRON_HYPERGRAPH_HPP
