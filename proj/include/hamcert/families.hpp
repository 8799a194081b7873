#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hamcert/errors.hpp"
#include "hamcert/graph.hpp"

namespace hamcert {

// Named graph families. Labeling is deterministic: clique blocks come first,
// then the block they are joined to or attached to.
namespace family {

struct Complete { int n; };
struct CompleteBipartite { int a, b; };
struct Star { int n; };                   // K_{1,n-1}, center 0
struct Cycle { int n; };
struct Path { int n; };
struct CliquePlusIsolated { int n; };     // K_{n-1} on 0..n-2, isolated n-1
struct CliquePlusPendant { int n; };      // n-1 attached to 0
struct CliquePlusTwoEdges { int n; };     // n-1 attached to 0 and 1
struct JoinOfTwoCliques { int n, s; };    // (K_s + K_{n-2-s}) join K_2
struct BalancedBipartiteMinusMatching { int n; };
struct RegularJoinClique { int n, r; };   // R join K_r, R circulant of degree n/2-r
struct RemarkFamily { int r, s; };        // (K_r + K_r) join K_s
struct Circulant { int n; std::vector<int> connections; };

}  // namespace family

using FamilySpec =
    std::variant<family::Complete, family::CompleteBipartite, family::Star, family::Cycle,
                 family::Path, family::CliquePlusIsolated, family::CliquePlusPendant,
                 family::CliquePlusTwoEdges, family::JoinOfTwoCliques,
                 family::BalancedBipartiteMinusMatching, family::RegularJoinClique,
                 family::RemarkFamily, family::Circulant>;

namespace detail {

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw InputError(msg);
}

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph circulant(int n, const std::vector<int>& connections) {
  std::vector<Edge> edges;
  for (int c : connections) {
    require(c % n != 0, "circulant connection must be nonzero modulo n");
    for (int v = 0; v < n; ++v) edges.emplace_back(v, ((v + c) % n + n) % n);
  }
  return Graph::from_edges(n, edges);
}

// Connection set giving a k-regular circulant on m vertices: jumps 1..k/2,
// plus the antipodal jump m/2 when k is odd (requires m even).
inline std::vector<int> regular_connections(int m, int k) {
  require(k >= 0 && k < m, "regular degree must be in [0, order)");
  require(k % 2 == 0 || m % 2 == 0, "odd-degree regular graph needs even order");
  std::vector<int> jumps;
  for (int j = 1; j <= k / 2; ++j) jumps.push_back(j);
  if (k % 2 == 1) jumps.push_back(m / 2);
  return jumps;
}

struct Builder {
  Graph operator()(const family::Complete& f) const {
    require(f.n >= 1, "Complete requires n >= 1");
    return Graph::complete(f.n);
  }
  Graph operator()(const family::CompleteBipartite& f) const {
    require(f.a >= 1 && f.b >= 1, "CompleteBipartite requires a, b >= 1");
    return join(empty_graph(f.a), empty_graph(f.b));
  }
  Graph operator()(const family::Star& f) const {
    require(f.n >= 2, "Star requires n >= 2");
    return join(empty_graph(1), empty_graph(f.n - 1));
  }
  Graph operator()(const family::Cycle& f) const {
    require(f.n >= 3, "Cycle requires n >= 3");
    return circulant(f.n, {1});
  }
  Graph operator()(const family::Path& f) const {
    require(f.n >= 1, "Path requires n >= 1");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < f.n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(f.n, edges);
  }
  Graph operator()(const family::CliquePlusIsolated& f) const {
    require(f.n >= 2, "CliquePlusIsolated requires n >= 2");
    return disjoint_union(Graph::complete(f.n - 1), empty_graph(1));
  }
  Graph operator()(const family::CliquePlusPendant& f) const {
    require(f.n >= 2, "CliquePlusPendant requires n >= 2");
    return (*this)(family::CliquePlusIsolated{f.n}).with_edge(0, f.n - 1);
  }
  Graph operator()(const family::CliquePlusTwoEdges& f) const {
    require(f.n >= 3, "CliquePlusTwoEdges requires n >= 3");
    return (*this)(family::CliquePlusPendant{f.n}).with_edge(1, f.n - 1);
  }
  Graph operator()(const family::JoinOfTwoCliques& f) const {
    require(f.s >= 1 && f.s <= f.n - 3, "JoinOfTwoCliques requires 1 <= s <= n-3");
    return join(disjoint_union(Graph::complete(f.s), Graph::complete(f.n - 2 - f.s)),
                Graph::complete(2));
  }
  Graph operator()(const family::BalancedBipartiteMinusMatching& f) const {
    require(f.n >= 2 && f.n % 2 == 0, "BalancedBipartiteMinusMatching requires even n >= 2");
    const int h = f.n / 2;
    Graph g = join(empty_graph(h), empty_graph(h));
    for (int i = 0; i < h; ++i) g = g.without_edge(i, h + i);
    return g;
  }
  Graph operator()(const family::RegularJoinClique& f) const {
    require(f.n >= 2 && f.n % 2 == 0, "RegularJoinClique requires even n");
    require(f.r >= 1 && f.r <= f.n / 2, "RegularJoinClique requires 1 <= r <= n/2");
    const int m = f.n - f.r;
    const int k = f.n / 2 - f.r;
    require((m * k) % 2 == 0, "RegularJoinClique requires (n-r)(n/2-r) even");
    return join(Graph::complete(f.r), circulant(m, regular_connections(m, k)));
  }
  Graph operator()(const family::RemarkFamily& f) const {
    require(f.r >= 2, "RemarkFamily requires r >= 2");
    require(f.s >= 1, "RemarkFamily requires s >= 1");
    return join(disjoint_union(Graph::complete(f.r), Graph::complete(f.r)),
                Graph::complete(f.s));
  }
  Graph operator()(const family::Circulant& f) const {
    require(f.n >= 1, "Circulant requires n >= 1");
    return circulant(f.n, f.connections);
  }
};

}  // namespace detail

inline Graph construct(const FamilySpec& spec) { return std::visit(detail::Builder{}, spec); }

// Numeric parameters for the kebab-case family names used on the command line.
struct FamilyParams {
  int n = 0;
  int s = 0;
  int r = 0;
  int a = 0;
  int b = 0;
  std::vector<int> connections;
};

inline const std::vector<std::string_view>& family_names() {
  static const std::vector<std::string_view> names = {
      "complete",
      "complete-bipartite",
      "star",
      "cycle",
      "path",
      "clique-plus-isolated",
      "clique-plus-pendant",
      "clique-plus-two-edges",
      "join-of-two-cliques",
      "balanced-bipartite-minus-matching",
      "regular-join-clique",
      "remark-family",
      "circulant",
  };
  return names;
}

inline FamilySpec family_from_name(std::string_view name, const FamilyParams& p) {
  if (name == "complete") return family::Complete{p.n};
  if (name == "complete-bipartite") return family::CompleteBipartite{p.a, p.b};
  if (name == "star") return family::Star{p.n};
  if (name == "cycle") return family::Cycle{p.n};
  if (name == "path") return family::Path{p.n};
  if (name == "clique-plus-isolated") return family::CliquePlusIsolated{p.n};
  if (name == "clique-plus-pendant") return family::CliquePlusPendant{p.n};
  if (name == "clique-plus-two-edges") return family::CliquePlusTwoEdges{p.n};
  if (name == "join-of-two-cliques") return family::JoinOfTwoCliques{p.n, p.s};
  if (name == "balanced-bipartite-minus-matching")
    return family::BalancedBipartiteMinusMatching{p.n};
  if (name == "regular-join-clique") return family::RegularJoinClique{p.n, p.r};
  if (name == "remark-family") return family::RemarkFamily{p.r, p.s};
  if (name == "circulant") return family::Circulant{p.n, p.connections};
  throw InputError("unknown family '" + std::string(name) + "'");
}

}  // namespace hamcert
