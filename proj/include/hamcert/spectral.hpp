#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamcert/eigen.hpp"
#include "hamcert/graph.hpp"
#include "hamcert/rational.hpp"

namespace hamcert {

inline constexpr double kBoundTolerance = 1e-9;
inline constexpr double kEqualityTolerance = 1e-8;

inline DenseMatrix adjacency_matrix(const Graph& g) {
  DenseMatrix a(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j) a(i, j) = g.adjacent(i, j) ? 1.0 : 0.0;
  return a;
}

// Q(G) = D(G) + A(G).
inline DenseMatrix signless_laplacian(const Graph& g) {
  DenseMatrix q = adjacency_matrix(g);
  for (int i = 0; i < g.order(); ++i) q(i, i) = g.degree(i);
  return q;
}

inline double adjacency_radius(const Graph& g) { return symmetric_eigen_max(adjacency_matrix(g)); }
inline double signless_radius(const Graph& g) { return symmetric_eigen_max(signless_laplacian(g)); }

struct SpectralSummary {
  double mu = 0.0;     // largest adjacency eigenvalue
  double gamma = 0.0;  // largest signless Laplacian eigenvalue
  std::int64_t edge_count = 0;
  std::vector<int> degrees;
  std::vector<Rational> avg_neighbor;
  std::int64_t degree_square_sum = 0;
  Rational max_d_plus_m;
};

inline SpectralSummary spectral_summary(const Graph& g) {
  SpectralSummary s;
  s.mu = adjacency_radius(g);
  s.gamma = signless_radius(g);
  s.edge_count = g.edge_count();
  DegreeData dd = degree_data(g);
  s.degrees = std::move(dd.degree);
  s.avg_neighbor = std::move(dd.avg_neighbor);
  for (std::size_t v = 0; v < s.degrees.size(); ++v) {
    s.degree_square_sum += std::int64_t{s.degrees[v]} * s.degrees[v];
    const Rational dm = Rational(s.degrees[v]) + s.avg_neighbor[v];
    if (v == 0 || dm > s.max_d_plus_m) s.max_d_plus_m = dm;
  }
  return s;
}

// Sum over edges of d(u) + d(v); equals the sum of squared degrees.
inline std::int64_t edge_degree_sum(const Graph& g) {
  std::int64_t total = 0;
  for (auto [u, v] : g.edges()) total += g.degree(u) + g.degree(v);
  return total;
}

// Structural recognizers for the equality cases of the bounds below.
namespace equality_case {

// Non-isolated vertices induce a complete graph (edgeless graphs qualify).
inline bool clique_plus_isolated_vertices(const Graph& g) {
  Graph::Row active = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0) active |= Graph::bit(v);
  for (Graph::Row r = active; r != 0; r &= r - 1) {
    const int v = std::countr_zero(r);
    if ((g.row(v) | Graph::bit(v)) != active) return false;
  }
  return true;
}

inline bool has_universal_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == g.order() - 1) return true;
  return false;
}

// K_{n-1} plus one isolated vertex.
inline bool complete_plus_one_isolated(const Graph& g) {
  const int n = g.order();
  if (n < 2) return false;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != 0) continue;
    return g.induced(g.all_mask() & ~Graph::bit(v)).is_complete();
  }
  return false;
}

inline bool is_star(const Graph& g) {
  const int n = g.order();
  if (n < 2 || g.edge_count() != n - 1) return false;
  return has_universal_vertex(g);
}

// Component (given as a vertex mask) is regular or bipartite semiregular.
inline bool component_regular_or_semiregular(const Graph& g, Graph::Row comp) {
  const int first = std::countr_zero(comp);
  bool regular = true;
  for (Graph::Row r = comp; r != 0; r &= r - 1)
    if (g.degree(std::countr_zero(r)) != g.degree(first)) regular = false;
  if (regular) return true;

  // Two-color by BFS layers, then require one degree per side.
  std::vector<int> side(g.order(), -1);
  side[first] = 0;
  std::vector<int> queue{first};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int v = queue[i];
    for (Graph::Row r = g.row(v); r != 0; r &= r - 1) {
      const int u = std::countr_zero(r);
      if (side[u] == -1) {
        side[u] = 1 - side[v];
        queue.push_back(u);
      } else if (side[u] == side[v]) {
        return false;
      }
    }
  }
  int deg[2] = {-1, -1};
  for (Graph::Row r = comp; r != 0; r &= r - 1) {
    const int v = std::countr_zero(r);
    if (deg[side[v]] == -1) deg[side[v]] = g.degree(v);
    if (deg[side[v]] != g.degree(v)) return false;
  }
  return true;
}

// gamma(G) = max(d + m) holds exactly when some component is regular or
// bipartite semiregular and attains the global maximum of d + m. Applied per
// component, since the characterization is only stated for connected graphs.
inline bool signless_attains_degree_plus_avg(const Graph& g) {
  const DegreeData dd = degree_data(g);
  auto dm = [&](int v) { return Rational(dd.degree[v]) + dd.avg_neighbor[v]; };
  Rational global = dm(0);
  for (int v = 1; v < g.order(); ++v) global = std::max(global, dm(v));
  for (Graph::Row comp : g.components()) {
    if (!component_regular_or_semiregular(g, comp)) continue;
    for (Graph::Row r = comp; r != 0; r &= r - 1)
      if (dm(std::countr_zero(r)) == global) return true;
  }
  return false;
}

// Every vertex sees the same number of 2-walks: sum of neighbor degrees is
// constant. This is when the all-ones vector is an eigenvector of A^2.
inline bool constant_two_walks(const Graph& g) {
  std::int64_t first = -1;
  for (int v = 0; v < g.order(); ++v) {
    std::int64_t w = 0;
    for (Graph::Row r = g.row(v); r != 0; r &= r - 1) w += g.degree(std::countr_zero(r));
    if (first == -1) first = w;
    if (w != first) return false;
  }
  return true;
}

// d(u) + d(v) is the same for every edge uv.
inline bool constant_edge_degree_sum(const Graph& g) {
  int first = -1;
  for (auto [u, v] : g.edges()) {
    const int s = g.degree(u) + g.degree(v);
    if (first == -1) first = s;
    if (s != first) return false;
  }
  return true;
}

// gamma = 2 mu exactly when a regular component of degree k has 2k = gamma.
inline bool regular_component_attains(const Graph& g, double gamma) {
  for (Graph::Row comp : g.components()) {
    const int k = g.degree(std::countr_zero(comp));
    bool regular = true;
    for (Graph::Row r = comp; r != 0; r &= r - 1)
      if (g.degree(std::countr_zero(r)) != k) regular = false;
    if (regular && std::abs(2.0 * k - gamma) <= kEqualityTolerance) return true;
  }
  return false;
}

}  // namespace equality_case

// One inequality lhs <= rhs evaluated on a graph.
struct BoundRecord {
  std::string bound;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  bool holds = false;
  bool equality = false;
  bool equality_expected = false;
};

namespace bound_id {
inline constexpr const char* kAdjacencyEdge = "adjacency_edge";
inline constexpr const char* kDegreeAvgNeighbor = "degree_avg_neighbor";
inline constexpr const char* kSignlessDegreeAvg = "signless_degree_avg";
inline constexpr const char* kSignlessEdge = "signless_edge";
inline constexpr const char* kHofmeister = "hofmeister";
inline constexpr const char* kSignlessSquareOverEdges = "signless_square_over_edges";
inline constexpr const char* kSignlessTwiceAdjacency = "signless_twice_adjacency";
}  // namespace bound_id

namespace detail {

inline BoundRecord numeric_bound(std::string id, double lhs, double rhs, bool expected) {
  BoundRecord b{std::move(id), lhs, rhs, rhs - lhs, false, false, expected};
  b.holds = b.slack >= -kBoundTolerance;
  b.equality = std::abs(b.slack) <= kEqualityTolerance;
  return b;
}

inline BoundRecord exact_bound(std::string id, Rational lhs, Rational rhs, bool expected) {
  BoundRecord b{std::move(id), lhs.to_double(), rhs.to_double(), (rhs - lhs).to_double(),
                lhs <= rhs, lhs == rhs, expected};
  return b;
}

}  // namespace detail

// Evaluates every supported spectral bound on g:
//   mu <= -1/2 + sqrt(2m + 1/4)
//   max(d + m) <= 2m/(n-1) + n - 2           (exact, n >= 2)
//   gamma <= max(d + m)
//   gamma <= 2m/(n-1) + n - 2                (n >= 2)
//   sum d^2 <= n mu^2
//   Z/m <= gamma                             (m > 0)
//   2 mu <= gamma
inline std::vector<BoundRecord> bound_suite(const Graph& g) {
  const SpectralSummary s = spectral_summary(g);
  const int n = g.order();
  const std::int64_t m = s.edge_count;
  std::vector<BoundRecord> out;

  out.push_back(detail::numeric_bound(bound_id::kAdjacencyEdge, s.mu,
                                      -0.5 + std::sqrt(2.0 * m + 0.25),
                                      equality_case::clique_plus_isolated_vertices(g)));

  if (n >= 2) {
    const Rational edge_rhs = Rational(2 * m, n - 1) + Rational(n - 2);
    const bool connected = g.is_connected();
    out.push_back(detail::exact_bound(
        bound_id::kDegreeAvgNeighbor, s.max_d_plus_m, edge_rhs,
        equality_case::has_universal_vertex(g) || equality_case::complete_plus_one_isolated(g)));
    out.push_back(detail::numeric_bound(bound_id::kSignlessDegreeAvg, s.gamma,
                                        s.max_d_plus_m.to_double(),
                                        equality_case::signless_attains_degree_plus_avg(g)));
    const bool cor_expected = connected ? (equality_case::is_star(g) || g.is_complete())
                                        : equality_case::complete_plus_one_isolated(g);
    out.push_back(detail::numeric_bound(bound_id::kSignlessEdge, s.gamma, edge_rhs.to_double(),
                                        cor_expected));
  } else {
    out.push_back(detail::numeric_bound(bound_id::kSignlessDegreeAvg, s.gamma,
                                        s.max_d_plus_m.to_double(),
                                        equality_case::signless_attains_degree_plus_avg(g)));
  }

  out.push_back(detail::numeric_bound(bound_id::kHofmeister,
                                      static_cast<double>(s.degree_square_sum),
                                      n * s.mu * s.mu, equality_case::constant_two_walks(g)));

  if (m > 0) {
    out.push_back(detail::numeric_bound(
        bound_id::kSignlessSquareOverEdges,
        static_cast<double>(s.degree_square_sum) / static_cast<double>(m), s.gamma,
        equality_case::constant_edge_degree_sum(g)));
  }

  out.push_back(detail::numeric_bound(bound_id::kSignlessTwiceAdjacency, 2.0 * s.mu, s.gamma,
                                      equality_case::regular_component_attains(g, s.gamma)));
  return out;
}

}  // namespace hamcert
