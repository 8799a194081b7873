#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hamcert/errors.hpp"
#include "hamcert/families.hpp"
#include "hamcert/graph.hpp"

namespace hamcert {

// SplitMix64. Fully specified so that sampled corpora are reproducible in
// any language:
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31)
// Uniform doubles take the top 53 bits: (next() >> 11) * 2^-53.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound). Modulo bias is below 2^-40 for the bounds
  // used here.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

// Erdos-Renyi G(n, p); edges drawn in graph6 pair order, one uniform each.
inline Graph random_graph(int n, double p, SplitMix64& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must be in [0, 1]");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (rng.uniform() < p) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

inline std::vector<Graph> sample_random(int n, double p, int count, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Graph> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(random_graph(n, p, rng));
  return out;
}

// Degree-preserving double edge swap: ab, cd -> ac, bd when the result stays
// simple. Returns false when the drawn pair of edges cannot be swapped.
inline bool try_edge_swap(Graph& g, SplitMix64& rng) {
  const auto edges = g.edges();
  if (edges.size() < 2) return false;
  auto [a, b] = edges[rng.below(edges.size())];
  auto [c, d] = edges[rng.below(edges.size())];
  if (rng.below(2)) std::swap(c, d);
  if (a == c || a == d || b == c || b == d) return false;
  if (g.adjacent(a, c) || g.adjacent(b, d)) return false;
  g = g.without_edge(a, b).without_edge(c, d).with_edge(a, c).with_edge(b, d);
  return true;
}

// Random k-regular graph: a k-regular circulant scrambled by `swaps`
// attempted degree-preserving swaps.
inline Graph random_regular(int n, int k, std::uint64_t seed, int swaps = 0) {
  Graph g = construct(family::Circulant{n, detail::regular_connections(n, k)});
  SplitMix64 rng(seed);
  if (swaps <= 0) swaps = 20 * n * k;
  for (int i = 0; i < swaps; ++i) try_edge_swap(g, rng);
  return g;
}

}  // namespace hamcert
