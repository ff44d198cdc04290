#ifndef HYPERPERRON_GENERATORS_HPP
#define HYPERPERRON_GENERATORS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hyperperron/hypergraph.hpp"

namespace hyperperron {

class GeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Hypergraph complete_graph(std::size_t n);
Hypergraph complete_kuniform(std::size_t n, std::size_t k);
Hypergraph path_graph(std::size_t n);
Hypergraph cycle_graph(std::size_t n);
/// ℓ edges of size k, consecutive edges sharing exactly one vertex.
Hypergraph loose_path(std::size_t k, std::size_t length);
/// The symmetric 2-(7,7,3,3,1) design with blocks
/// 123 145 167 246 257 347 356.
Hypergraph fano_plane();
/// m distinct k-subsets of [n] drawn from a seeded mt19937_64.
Hypergraph random_uniform(std::size_t n, std::size_t k, std::size_t m, std::uint64_t seed);

/// Vertices of b are shifted past those of a.
Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b);
Hypergraph with_isolated(const Hypergraph& h, std::size_t extra);

/// One representative per isomorphism class of simple graphs on n vertices
/// (n <= 7), in increasing order of the canonical edge mask.
std::vector<Hypergraph> all_graphs(std::size_t n);

/// Named generator invocation, e.g. {"random_uniform", {n:6, k:3, m:4, seed:1}}.
struct GeneratorSpec {
  std::string family;
  std::map<std::string, std::int64_t> params;

  /// Stable id such as "random_uniform(k=3,m=4,n=6,seed=1)".
  std::string id() const;
};

Hypergraph generate(const GeneratorSpec& spec);

/// Families accepted by generate().
const std::vector<std::string>& generator_families();

}  // namespace hyperperron

#endif  // HYPERPERRON_GENERATORS_HPP
