#include "hyperperron/combinatorics.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace hyperperron {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> edge_masks(const Hypergraph& h) {
  std::vector<Mask> masks;
  masks.reserve(h.m());
  for (const auto& e : h.edges()) {
    Mask m = 0;
    for (Vertex v : e) m |= Mask{1} << v;
    masks.push_back(m);
  }
  return masks;
}

std::size_t cut_of(const std::vector<Mask>& edges, Mask s) {
  std::size_t count = 0;
  for (Mask e : edges)
    if ((e & s) != 0 && (e & ~s) != 0) ++count;
  return count;
}

std::vector<Vertex> members(Mask s) {
  std::vector<Vertex> out;
  for (Vertex v = 0; s != 0; ++v, s >>= 1)
    if (s & 1u) out.push_back(v);
  return out;
}

void gate(const Hypergraph& h, std::size_t limit, const char* what) {
  if (h.n() < 2) throw std::invalid_argument(std::string(what) + " needs at least 2 vertices");
  if (h.n() > limit) {
    throw EnumerationTooLarge(std::string(what) + ": n = " + std::to_string(h.n()) +
                              " exceeds the exact enumeration limit " + std::to_string(limit));
  }
}

// Calls fn(mask) for every size-`size` subset of [n] in lexicographic order
// of the sorted member lists.
template <typename Fn>
void for_each_subset_of_size(std::size_t n, std::size_t size, Fn&& fn) {
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    Mask m = 0;
    for (auto i : idx) m |= Mask{1} << i;
    fn(m);
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t t = i; t < size; ++t) idx[t] = idx[t - 1] + 1;
  }
}

}  // namespace

CutReport cut(const Hypergraph& h, std::span<const Vertex> subset) {
  std::vector<bool> in(h.n(), false);
  for (Vertex v : subset) {
    if (v >= h.n()) throw std::out_of_range("vertex " + std::to_string(v + 1) + " out of range");
    if (in[v]) throw std::invalid_argument("subset repeats vertex " + std::to_string(v + 1));
    in[v] = true;
  }
  if (subset.empty() || subset.size() == h.n()) {
    throw std::invalid_argument("cut subset must be proper and nonempty");
  }
  CutReport out;
  out.subset.assign(subset.begin(), subset.end());
  std::sort(out.subset.begin(), out.subset.end());
  std::size_t inside_total = 0;
  for (const auto& e : h.edges()) {
    std::size_t inside = 0;
    for (Vertex v : e) inside += in[v] ? 1 : 0;
    if (inside > 0 && inside < e.size()) {
      ++out.cut_size;
      inside_total += inside;
    }
  }
  out.empty_cut = out.cut_size == 0;
  if (!out.empty_cut) out.t_value = static_cast<double>(inside_total) / static_cast<double>(out.cut_size);
  return out;
}

CutOptimum bipartition_width(const Hypergraph& h) {
  gate(h, kBalancedCutLimit, "bipartition width");
  const auto edges = edge_masks(h);
  std::size_t best = SIZE_MAX;
  Mask witness = 0;
  for_each_subset_of_size(h.n(), h.n() / 2, [&](Mask s) {
    auto c = cut_of(edges, s);
    if (c < best) {
      best = c;
      witness = s;
    }
  });
  return {best, members(witness)};
}

IsoperimetricOptimum isoperimetric_number(const Hypergraph& h) {
  gate(h, kBalancedCutLimit, "isoperimetric number");
  const auto edges = edge_masks(h);
  std::size_t best_cut = 0;
  std::size_t best_size = 0;
  std::vector<Vertex> witness;
  for (std::size_t size = 1; size <= h.n() / 2; ++size) {
    for_each_subset_of_size(h.n(), size, [&](Mask s) {
      auto c = cut_of(edges, s);
      // c / size against best_cut / best_size without division.
      if (best_size == 0 || c * best_size < best_cut * size) {
        best_cut = c;
        best_size = size;
        witness = members(s);
      } else if (c * best_size == best_cut * size) {
        auto candidate = members(s);
        if (candidate < witness) {
          best_cut = c;
          best_size = size;
          witness = std::move(candidate);
        }
      }
    });
  }
  return {static_cast<double>(best_cut) / static_cast<double>(best_size), best_cut, std::move(witness)};
}

CutOptimum edge_connectivity(const Hypergraph& h) {
  gate(h, kEdgeConnectivityLimit, "edge connectivity");
  const auto edges = edge_masks(h);
  const Mask full = (h.n() == 32) ? ~Mask{0} : (Mask{1} << h.n()) - 1;
  // Every cut has a side containing vertex 1, and that side is the
  // lexicographically smaller one.
  std::size_t best = SIZE_MAX;
  std::vector<Vertex> witness;
  const Mask rest = Mask{1} << (h.n() - 1);
  for (Mask other = 0; other < rest; ++other) {
    Mask s = 1u | (other << 1);
    if (s == full) continue;
    auto c = cut_of(edges, s);
    if (c < best) {
      best = c;
      witness = members(s);
    } else if (c == best) {
      auto candidate = members(s);
      if (candidate < witness) witness = std::move(candidate);
    }
  }
  return {best, std::move(witness)};
}

DesignParams::DesignParams(std::size_t n, std::size_t b, std::size_t k, std::size_t r, std::size_t lambda)
    : n_(n), b_(b), k_(k), r_(r), lambda_(lambda) {
  if (n == 0 || b == 0 || k < 2 || r == 0 || lambda == 0) {
    throw std::invalid_argument("design parameters must be positive with k >= 2");
  }
  if (lambda * (n - 1) != r * (k - 1)) {
    throw std::invalid_argument("design parameters violate lambda(n-1) = r(k-1)");
  }
  if (n * r != b * k) throw std::invalid_argument("design parameters violate nr = bk");
}

std::optional<DesignParams> detect_2_design(const Hypergraph& h) {
  const std::size_t n = h.n();
  if (h.m() == 0 || n < 2 || n < h.k()) return std::nullopt;
  const std::size_t r = h.degree(0);
  for (Vertex v = 1; v < n; ++v)
    if (h.degree(v) != r) return std::nullopt;

  std::vector<std::size_t> pairs(n * n, 0);
  for (const auto& e : h.edges())
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = a + 1; b < e.size(); ++b) ++pairs[e[a] * n + e[b]];
  const std::size_t lambda = pairs[0 * n + 1];
  if (lambda == 0) return std::nullopt;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (pairs[a * n + b] != lambda) return std::nullopt;

  // Double counting makes the constructor's identities automatic here; a
  // throw would mean the pair or degree counts above are wrong.
  try {
    return DesignParams(n, h.m(), h.k(), r, lambda);
  } catch (const std::invalid_argument& err) {
    throw std::logic_error(std::string("inconsistent design counts: ") + err.what());
  }
}

DesignBounds design_edge_connectivity_bounds(const DesignParams& d) {
  DesignBounds out;
  out.lower = static_cast<double>(d.n() * d.lambda()) / static_cast<double>(d.k());
  out.upper = static_cast<double>((d.n() - 1) * d.lambda()) / static_cast<double>(d.k() - 1);
  if (d.symmetric()) out.exact = d.k();
  return out;
}

}  // namespace hyperperron
