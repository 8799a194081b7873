#pragma once

#include <deque>
#include <string>
#include <vector>

#include "hamcert/errors.hpp"
#include "hamcert/graph.hpp"

namespace hamcert {

struct ClosureResult {
  Graph graph;
  std::vector<Edge> added;  // in insertion order
  int k = 0;
};

// k-closure: repeatedly join nonadjacent u, v with d(u) + d(v) >= k until no
// such pair remains. The fixpoint is order independent; pairs are processed
// from a lexicographic worklist, and each insertion re-enqueues the pairs at
// its endpoints, so the added-edge list is reproducible. k = 0 yields K_n.
inline ClosureResult k_closure(const Graph& g, int k) {
  if (k < 0) throw InputError("closure parameter k must be >= 0, got " + std::to_string(k));
  const int n = g.order();
  Graph h = g;
  std::vector<int> deg = g.degrees();
  std::vector<char> queued(static_cast<std::size_t>(n) * n, 0);
  std::deque<Edge> work;
  auto push = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    if (h.adjacent(u, v) || queued[u * n + v]) return;
    queued[u * n + v] = 1;
    work.emplace_back(u, v);
  };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) push(u, v);

  ClosureResult out{g, {}, k};
  while (!work.empty()) {
    auto [u, v] = work.front();
    work.pop_front();
    queued[u * n + v] = 0;
    if (h.adjacent(u, v) || deg[u] + deg[v] < k) continue;
    h = h.with_edge(u, v);
    ++deg[u];
    ++deg[v];
    out.added.emplace_back(u, v);
    for (int x = 0; x < n; ++x) {
      if (x != u) push(u, x);
      if (x != v) push(v, x);
    }
  }
  out.graph = h;
  return out;
}

}  // namespace hamcert
