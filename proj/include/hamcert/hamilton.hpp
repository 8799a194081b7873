#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "hamcert/errors.hpp"
#include "hamcert/graph.hpp"

namespace hamcert {

inline constexpr int kDefaultOracleCap = 20;
inline constexpr int kMaxOracleCap = 24;

struct HamiltonProfile {
  bool has_path = false;
  bool has_cycle = false;
  bool hamilton_connected = false;
  std::optional<std::vector<Vertex>> witness_path;
  std::optional<Edge> failing_pair;  // endpoints with no Hamiltonian path between them
};

// Oracle cap from HAMCERT_ORACLE_CAP when set and valid, else the default.
inline int oracle_cap_from_env() {
  if (const char* env = std::getenv("HAMCERT_ORACLE_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= kMaxOracleCap) return static_cast<int>(v);
  }
  return kDefaultOracleCap;
}

namespace detail {

// reach[mask] holds the endpoints v such that some path from a seed vertex
// visits exactly `mask` and ends at v. Seeds are the single-vertex masks in
// `starts`.
inline std::vector<std::uint32_t> path_table(const Graph& g, std::uint32_t starts) {
  const int n = g.order();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> reach(std::size_t{full} + 1, 0);
  std::vector<std::uint32_t> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = static_cast<std::uint32_t>(g.row(v));
  for (std::uint32_t s = starts; s != 0; s &= s - 1) {
    const std::uint32_t b = s & (~s + 1);
    reach[b] = b;
  }
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const std::uint32_t ends = reach[mask];
    if (ends == 0) continue;
    for (std::uint32_t rest = full & ~mask; rest != 0; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      if (adj[u] & ends) reach[mask | (std::uint32_t{1} << u)] |= std::uint32_t{1} << u;
    }
  }
  return reach;
}

inline std::vector<Vertex> reconstruct(const Graph& g, const std::vector<std::uint32_t>& reach,
                                       std::uint32_t full) {
  std::vector<Vertex> path;
  std::uint32_t mask = full;
  int v = std::countr_zero(reach[full]);
  path.push_back(v);
  while (std::popcount(mask) > 1) {
    mask &= ~(std::uint32_t{1} << v);
    const std::uint32_t prev = reach[mask] & static_cast<std::uint32_t>(g.row(v));
    v = std::countr_zero(prev);
    path.push_back(v);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace detail

// Exact Hamiltonian path / cycle / Hamilton-connectedness by subset dynamic
// programming over (visited set, endpoint). Hamilton-connectedness runs one
// table per start vertex and reads all endpoints off the full set.
//
// Conventions: K_1 and K_2 are Hamilton-connected; no graph on fewer than 3
// vertices has a Hamiltonian cycle; disconnected graphs are all-false.
inline HamiltonProfile hamilton_profile(const Graph& g, int cap = kDefaultOracleCap) {
  if (cap < 1 || cap > kMaxOracleCap)
    throw CapacityError("oracle cap must be in [1, " + std::to_string(kMaxOracleCap) + "]");
  const int n = g.order();
  if (n > cap)
    throw CapacityError("graph order " + std::to_string(n) + " exceeds the oracle cap of " +
                        std::to_string(cap));

  HamiltonProfile p;
  if (n == 1) {
    p.has_path = true;
    p.hamilton_connected = true;
    p.witness_path = std::vector<Vertex>{0};
    return p;
  }
  const Graph::Row comp0 = g.component_of(0);
  if (comp0 != g.all_mask()) {
    p.failing_pair = Edge{0, std::countr_zero(g.all_mask() & ~comp0)};
    return p;
  }

  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  {
    const auto any = detail::path_table(g, full);
    p.has_path = any[full] != 0;
    if (p.has_path) p.witness_path = detail::reconstruct(g, any, full);
  }

  p.hamilton_connected = true;
  for (int s = 0; s < n - 1; ++s) {
    const auto reach = detail::path_table(g, std::uint32_t{1} << s);
    if (s == 0 && n >= 3) p.has_cycle = (reach[full] & static_cast<std::uint32_t>(g.row(0))) != 0;
    const std::uint32_t later = full & ~((std::uint32_t{2} << s) - 1);
    const std::uint32_t missing = later & ~reach[full];
    if (missing != 0) {
      p.hamilton_connected = false;
      p.failing_pair = Edge{s, std::countr_zero(missing)};
      break;
    }
  }
  return p;
}

struct DegreeSumCheck {
  bool ore_path = false;         // every nonadjacent pair: d(u) + d(v) >= n - 1
  bool ore_cycle = false;        // >= n
  bool erdos_gallai_hc = false;  // >= n + 1
};

inline DegreeSumCheck degree_sum_check(const Graph& g) {
  const int n = g.order();
  int min_sum = 2 * n;  // above every threshold when no nonadjacent pair exists
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) min_sum = std::min(min_sum, g.degree(u) + g.degree(v));
  return {min_sum >= n - 1, min_sum >= n, min_sum >= n + 1};
}

enum class EdgeCountConclusion { None, PathUnlessKv, CycleUnlessKe, HCUnlessKee };

struct EdgeCountClassification {
  std::int64_t r = 0;  // e(G) - C(n-1, 2)
  EdgeCountConclusion conclusion = EdgeCountConclusion::None;
};

// The conclusion is the clause of the edge-count lemma that applies. At n = 6
// the HC clause also fails for K_3 join 3K_1, which has the same edge count as
// K_5 + e + e'; the classification still reports HCUnlessKee there.
inline EdgeCountClassification edge_count_classification(const Graph& g) {
  const std::int64_t n = g.order();
  EdgeCountClassification c;
  c.r = g.edge_count() - (n - 1) * (n - 2) / 2;
  if (c.r >= 2) c.conclusion = EdgeCountConclusion::HCUnlessKee;
  else if (c.r >= 1) c.conclusion = EdgeCountConclusion::CycleUnlessKe;
  else if (c.r >= 0) c.conclusion = EdgeCountConclusion::PathUnlessKv;
  return c;
}

inline const char* to_string(EdgeCountConclusion c) {
  switch (c) {
    case EdgeCountConclusion::None: return "None";
    case EdgeCountConclusion::PathUnlessKv: return "PathUnlessKv";
    case EdgeCountConclusion::CycleUnlessKe: return "CycleUnlessKe";
    case EdgeCountConclusion::HCUnlessKee: return "HCUnlessKee";
  }
  return "None";
}

// A vertex sequence is a Hamiltonian path of g.
inline bool is_hamiltonian_path(const Graph& g, const std::vector<Vertex>& path) {
  if (static_cast<int>(path.size()) != g.order()) return false;
  Graph::Row seen = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const int v = path[i];
    if (v < 0 || v >= g.order() || (seen & Graph::bit(v))) return false;
    seen |= Graph::bit(v);
    if (i > 0 && !g.adjacent(path[i - 1], v)) return false;
  }
  return true;
}

}  // namespace hamcert
