#pragma once

#include <array>
#include <initializer_list>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hamcert/errors.hpp"
#include "hamcert/rational.hpp"

namespace hamcert {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Largest supported order. One adjacency row fits in a machine word, and
// graph6 uses a single order byte up to this size.
inline constexpr int kMaxOrder = 62;

// Undirected simple graph on vertices 0..n-1, one bit row per vertex.
// Immutable once built; rows beyond n are always zero so defaulted equality
// compares structure exactly.
class Graph {
 public:
  using Row = std::uint64_t;

  explicit Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxOrder) {
      throw InputError("graph order must be in [1, " + std::to_string(kMaxOrder) +
                       "], got " + std::to_string(n));
    }
  }

  // Throws InputError on out-of-range endpoints or loops. Duplicate and
  // reversed pairs collapse into one edge.
  static Graph from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n) {
        throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") has an endpoint outside [0, " + std::to_string(n) + ")");
      }
      if (u == v) throw InputError("loop at vertex " + std::to_string(u));
      g.set_edge(u, v);
    }
    return g;
  }
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  static Graph complete(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.rows_[v] = g.all_mask() & ~bit(v);
    return g;
  }

  int order() const { return n_; }

  bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
  Row row(Vertex v) const { return rows_[v]; }
  Row all_mask() const { return (Row{1} << n_) - 1; }

  int degree(Vertex v) const { return std::popcount(rows_[v]); }

  std::int64_t edge_count() const {
    std::int64_t twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
    return twice / 2;
  }

  std::vector<int> degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
  }

  // Edges (u, v) with u < v, ordered by v then u (graph6 bit order).
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int v = 1; v < n_; ++v)
      for (int u = 0; u < v; ++u)
        if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
  }

  bool is_complete() const { return edge_count() == std::int64_t{n_} * (n_ - 1) / 2; }

  // Vertex mask of the connected component containing v.
  Row component_of(Vertex v) const {
    Row seen = bit(v);
    Row frontier = seen;
    while (frontier != 0) {
      Row next = 0;
      for (Row f = frontier; f != 0; f &= f - 1) next |= rows_[std::countr_zero(f)];
      frontier = next & ~seen;
      seen |= next;
    }
    return seen;
  }

  bool is_connected() const { return component_of(0) == all_mask(); }

  std::vector<Row> components() const {
    std::vector<Row> out;
    Row rest = all_mask();
    while (rest != 0) {
      Row c = component_of(std::countr_zero(rest));
      out.push_back(c);
      rest &= ~c;
    }
    return out;
  }

  // Checks symmetry, loop-freeness, and that rows carry no bits past n.
  bool valid() const {
    for (int v = 0; v < kMaxOrder; ++v) {
      if (v >= n_) {
        if (rows_[v] != 0) return false;
        continue;
      }
      if (rows_[v] & ~all_mask()) return false;
      if (adjacent(v, v)) return false;
      for (int u = 0; u < n_; ++u)
        if (adjacent(u, v) != adjacent(v, u)) return false;
    }
    return true;
  }

  // Induced subgraph on the vertices of `keep`, relabeled in increasing order.
  Graph induced(Row keep) const {
    std::vector<int> ids;
    for (Row k = keep; k != 0; k &= k - 1) ids.push_back(std::countr_zero(k));
    Graph h(static_cast<int>(ids.size()));
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = i + 1; j < ids.size(); ++j)
        if (adjacent(ids[i], ids[j])) h.set_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
  }

  // Image under a vertex permutation: vertex v becomes perm[v].
  Graph relabeled(std::span<const int> perm) const {
    Graph h(n_);
    for (int v = 1; v < n_; ++v)
      for (int u = 0; u < v; ++u)
        if (adjacent(u, v)) h.set_edge(perm[u], perm[v]);
    return h;
  }

  Graph with_edge(Vertex u, Vertex v) const {
    Graph h = *this;
    h.set_edge(u, v);
    return h;
  }

  Graph without_edge(Vertex u, Vertex v) const {
    Graph h = *this;
    h.rows_[u] &= ~bit(v);
    h.rows_[v] &= ~bit(u);
    return h;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

  static constexpr Row bit(Vertex v) { return Row{1} << v; }

 private:
  void set_edge(Vertex u, Vertex v) {
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
  }

  friend Graph complement(const Graph& g);
  friend Graph disjoint_union(const Graph& a, const Graph& b);
  friend Graph join(const Graph& a, const Graph& b);

  int n_;
  std::array<Row, kMaxOrder> rows_{};
};

inline Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int v = 0; v < g.order(); ++v) h.rows_[v] = ~g.rows_[v] & g.all_mask() & ~Graph::bit(v);
  return h;
}

// a on vertices 0..na-1, b shifted to na..na+nb-1.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.order();
  if (na + b.order() > kMaxOrder) throw InputError("union exceeds maximum graph order");
  Graph h(na + b.order());
  for (int v = 0; v < na; ++v) h.rows_[v] = a.rows_[v];
  for (int v = 0; v < b.order(); ++v) h.rows_[na + v] = b.rows_[v] << na;
  return h;
}

inline Graph join(const Graph& a, const Graph& b) {
  Graph h = disjoint_union(a, b);
  const int na = a.order();
  const Graph::Row a_side = a.all_mask();
  const Graph::Row b_side = b.all_mask() << na;
  for (int v = 0; v < na; ++v) h.rows_[v] |= b_side;
  for (int v = na; v < h.order(); ++v) h.rows_[v] |= a_side;
  return h;
}

struct DegreeData {
  std::vector<int> degree;
  // Average degree over the neighborhood; 0 for isolated vertices.
  std::vector<Rational> avg_neighbor;
};

inline DegreeData degree_data(const Graph& g) {
  DegreeData out;
  out.degree = g.degrees();
  out.avg_neighbor.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) {
    const int dv = out.degree[v];
    if (dv == 0) {
      out.avg_neighbor.emplace_back(0);
      continue;
    }
    std::int64_t sum = 0;
    for (Graph::Row r = g.row(v); r != 0; r &= r - 1) sum += out.degree[std::countr_zero(r)];
    out.avg_neighbor.emplace_back(sum, dv);
  }
  return out;
}

}  // namespace hamcert
