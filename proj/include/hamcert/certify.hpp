#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hamcert/errors.hpp"
#include "hamcert/graph.hpp"
#include "hamcert/hamilton.hpp"
#include "hamcert/spectral.hpp"

namespace hamcert {

// Exceptional families that void a criterion's conclusion.
enum class FamilyTag {
  CliquePlusIsolated,         // K_{n-1} + v
  CliquePlusPendant,          // K_{n-1} + e
  CliquePlusTwoEdges,         // K_{n-1} + e + e'
  JoinOfTwoCliques,           // (K_s + K_{n-2-s}) join K_2, 1 <= s <= n-3
  BalancedCompleteBipartite,  // K_{n/2,n/2}
  RegularJoinClique,          // R join K_r, R regular of degree n/2 - r
};

inline constexpr std::array kAllFamilyTags = {
    FamilyTag::CliquePlusIsolated,       FamilyTag::CliquePlusPendant,
    FamilyTag::CliquePlusTwoEdges,       FamilyTag::JoinOfTwoCliques,
    FamilyTag::BalancedCompleteBipartite, FamilyTag::RegularJoinClique,
};

inline const char* to_string(FamilyTag t) {
  switch (t) {
    case FamilyTag::CliquePlusIsolated: return "CliquePlusIsolated";
    case FamilyTag::CliquePlusPendant: return "CliquePlusPendant";
    case FamilyTag::CliquePlusTwoEdges: return "CliquePlusTwoEdges";
    case FamilyTag::JoinOfTwoCliques: return "JoinOfTwoCliques";
    case FamilyTag::BalancedCompleteBipartite: return "BalancedCompleteBipartite";
    case FamilyTag::RegularJoinClique: return "RegularJoinClique";
  }
  return "?";
}

namespace recognize {

namespace detail {

inline Graph::Row universal_vertices(const Graph& g) {
  Graph::Row u = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == g.order() - 1) u |= Graph::bit(v);
  return u;
}

// Some vertex of degree `deg` whose removal leaves a complete graph.
inline bool clique_plus_vertex_of_degree(const Graph& g, int deg) {
  const int n = g.order();
  if (n < 2) return false;
  if (g.edge_count() != std::int64_t{n - 1} * (n - 2) / 2 + deg) return false;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != deg) continue;
    if (g.induced(g.all_mask() & ~Graph::bit(v)).is_complete()) return true;
  }
  return false;
}

}  // namespace detail

inline bool clique_plus_isolated(const Graph& g) { return detail::clique_plus_vertex_of_degree(g, 0); }
inline bool clique_plus_pendant(const Graph& g) { return detail::clique_plus_vertex_of_degree(g, 1); }
inline bool clique_plus_two_edges(const Graph& g) {
  return g.order() >= 3 && detail::clique_plus_vertex_of_degree(g, 2);
}

// Exactly two universal vertices; the rest splits into two cliques.
inline bool join_of_two_cliques(const Graph& g) {
  const int n = g.order();
  if (n < 4) return false;
  const Graph::Row u = detail::universal_vertices(g);
  if (std::popcount(u) != 2) return false;
  const Graph rest = g.induced(g.all_mask() & ~u);
  const auto comps = rest.components();
  if (comps.size() != 2) return false;
  for (Graph::Row c : comps)
    if (!rest.induced(c).is_complete()) return false;
  return true;
}

inline bool balanced_complete_bipartite(const Graph& g) {
  const int n = g.order();
  if (n < 2 || n % 2 != 0) return false;
  const Graph::Row b = g.row(0);
  const Graph::Row a = g.all_mask() & ~b;
  if (std::popcount(a) != n / 2) return false;
  for (int v = 0; v < n; ++v) {
    const Graph::Row expected = (a & Graph::bit(v)) ? b : a;
    if (g.row(v) != expected) return false;
  }
  return true;
}

// U = universal vertices, 1 <= |U| <= n/2, and g - U is (n/2 - |U|)-regular.
inline bool regular_join_clique(const Graph& g) {
  const int n = g.order();
  if (n % 2 != 0) return false;
  const Graph::Row u = detail::universal_vertices(g);
  const int r = std::popcount(u);
  if (r == 0) return false;
  // A universal vertex of R needs n - r - 1 == n/2 - r, which forces n == 2.
  if (r > n / 2) return n == 2;
  const int k = n / 2 - r;
  for (int v = 0; v < n; ++v) {
    if (u & Graph::bit(v)) continue;
    if (std::popcount(g.row(v) & ~u) != k) return false;
  }
  return true;
}

}  // namespace recognize

// All matching tags, in enum order. Matching is structural and therefore
// independent of vertex labels.
inline std::vector<FamilyTag> recognize_exception(const Graph& g) {
  std::vector<FamilyTag> tags;
  if (recognize::clique_plus_isolated(g)) tags.push_back(FamilyTag::CliquePlusIsolated);
  if (recognize::clique_plus_pendant(g)) tags.push_back(FamilyTag::CliquePlusPendant);
  if (recognize::clique_plus_two_edges(g)) tags.push_back(FamilyTag::CliquePlusTwoEdges);
  if (recognize::join_of_two_cliques(g)) tags.push_back(FamilyTag::JoinOfTwoCliques);
  if (recognize::balanced_complete_bipartite(g)) tags.push_back(FamilyTag::BalancedCompleteBipartite);
  if (recognize::regular_join_clique(g)) tags.push_back(FamilyTag::RegularJoinClique);
  return tags;
}

// Membership in the exception set of the complement signless criterion.
inline std::optional<FamilyTag> exceptional_set_member(const Graph& g) {
  if (recognize::join_of_two_cliques(g)) return FamilyTag::JoinOfTwoCliques;
  if (recognize::balanced_complete_bipartite(g)) return FamilyTag::BalancedCompleteBipartite;
  if (recognize::regular_join_clique(g)) return FamilyTag::RegularJoinClique;
  return std::nullopt;
}

enum class CriterionId {
  T31_AdjacencyHC,             // mu(G) > -1/2 + sqrt((n - 3/2)^2 + 2)
  T32_ComplementAdjacencyHC,   // mu(complement) < sqrt((n-2)^2 / n), n >= 4
  T33_SignlessHC,              // gamma(G) > 2(n-2) + 2/(n-1)
  T34_ComplementSignlessHC,    // gamma(complement) <= n - 2, n >= 6
  T41_SignlessPathCycle,       // gamma(G) >= 2(n-2)
  T42_AdjacencyPathCycle,      // mu(G) >= n - 2
};

inline constexpr std::array kAllCriteria = {
    CriterionId::T31_AdjacencyHC,          CriterionId::T32_ComplementAdjacencyHC,
    CriterionId::T33_SignlessHC,           CriterionId::T34_ComplementSignlessHC,
    CriterionId::T41_SignlessPathCycle,    CriterionId::T42_AdjacencyPathCycle,
};

inline const char* to_string(CriterionId c) {
  switch (c) {
    case CriterionId::T31_AdjacencyHC: return "T31";
    case CriterionId::T32_ComplementAdjacencyHC: return "T32";
    case CriterionId::T33_SignlessHC: return "T33";
    case CriterionId::T34_ComplementSignlessHC: return "T34";
    case CriterionId::T41_SignlessPathCycle: return "T41";
    case CriterionId::T42_AdjacencyPathCycle: return "T42";
  }
  return "?";
}

// Accepts the short ids ("T31") and the full enumerator names.
inline CriterionId criterion_from_string(std::string_view s) {
  for (CriterionId c : kAllCriteria) {
    const std::string_view id = to_string(c);
    if (s == id) return c;
  }
  if (s == "T31_AdjacencyHC") return CriterionId::T31_AdjacencyHC;
  if (s == "T32_ComplementAdjacencyHC") return CriterionId::T32_ComplementAdjacencyHC;
  if (s == "T33_SignlessHC") return CriterionId::T33_SignlessHC;
  if (s == "T34_ComplementSignlessHC") return CriterionId::T34_ComplementSignlessHC;
  if (s == "T41_SignlessPathCycle") return CriterionId::T41_SignlessPathCycle;
  if (s == "T42_AdjacencyPathCycle") return CriterionId::T42_AdjacencyPathCycle;
  throw InputError("unknown criterion '" + std::string(s) + "'");
}

enum class CriterionStatus { Satisfied, NotSatisfied, Boundary };
enum class Prediction { HamiltonConnected, HamiltonianCycle, HamiltonianPath, NoPrediction };

inline const char* to_string(CriterionStatus s) {
  switch (s) {
    case CriterionStatus::Satisfied: return "Satisfied";
    case CriterionStatus::NotSatisfied: return "NotSatisfied";
    case CriterionStatus::Boundary: return "Boundary";
  }
  return "?";
}

inline const char* to_string(Prediction p) {
  switch (p) {
    case Prediction::HamiltonConnected: return "HamiltonConnected";
    case Prediction::HamiltonianCycle: return "HamiltonianCycle";
    case Prediction::HamiltonianPath: return "HamiltonianPath";
    case Prediction::NoPrediction: return "NoPrediction";
  }
  return "?";
}

struct CriterionVerdict {
  CriterionId criterion{};
  double lhs = 0.0;
  double threshold = 0.0;
  CriterionStatus status = CriterionStatus::NotSatisfied;
  Prediction predicted = Prediction::NoPrediction;
  std::optional<FamilyTag> exception;
};

struct CriterionOptions {
  // Added to every threshold. Nonzero only to check that the validation
  // harness notices an unsound criterion.
  double threshold_shift = 0.0;
};

inline constexpr double kCriterionTolerance = 1e-9;

inline int minimum_order(CriterionId c) {
  switch (c) {
    case CriterionId::T32_ComplementAdjacencyHC: return 4;
    case CriterionId::T34_ComplementSignlessHC: return 6;
    default: return 2;
  }
}

inline double criterion_threshold(CriterionId c, int n) {
  const double nd = n;
  switch (c) {
    case CriterionId::T31_AdjacencyHC: return -0.5 + std::sqrt((nd - 1.5) * (nd - 1.5) + 2.0);
    case CriterionId::T32_ComplementAdjacencyHC: return std::sqrt((nd - 2) * (nd - 2) / nd);
    case CriterionId::T33_SignlessHC: return 2.0 * (nd - 2) + 2.0 / (nd - 1);
    case CriterionId::T34_ComplementSignlessHC: return nd - 2;
    case CriterionId::T41_SignlessPathCycle: return 2.0 * (nd - 2);
    case CriterionId::T42_AdjacencyPathCycle: return nd - 2;
  }
  return 0.0;
}

// Strict comparisons need a margin of 1e-9 and report Boundary inside it;
// non-strict comparisons accept anything within 1e-9 of the threshold.
inline CriterionVerdict apply_criterion(const Graph& g, CriterionId c,
                                        const CriterionOptions& opts = {}) {
  const int n = g.order();
  if (n < minimum_order(c)) {
    throw InputError(std::string("criterion ") + to_string(c) + " requires order n >= " +
                     std::to_string(minimum_order(c)) + ", got " + std::to_string(n));
  }
  CriterionVerdict v;
  v.criterion = c;
  v.threshold = criterion_threshold(c, n) + opts.threshold_shift;
  const double tol = kCriterionTolerance;
  auto strict_above = [&] { return v.lhs > v.threshold + tol; };
  auto near = [&] { return std::abs(v.lhs - v.threshold) <= tol; };

  auto strict_hc = [&](bool above) {
    if (above) {
      v.status = CriterionStatus::Satisfied;
      v.predicted = Prediction::HamiltonConnected;
    } else {
      v.status = near() ? CriterionStatus::Boundary : CriterionStatus::NotSatisfied;
    }
  };

  switch (c) {
    case CriterionId::T31_AdjacencyHC:
    case CriterionId::T33_SignlessHC:
      v.lhs = c == CriterionId::T31_AdjacencyHC ? adjacency_radius(g) : signless_radius(g);
      strict_hc(strict_above());
      if (v.status == CriterionStatus::Satisfied && recognize::clique_plus_two_edges(g))
        v.exception = FamilyTag::CliquePlusTwoEdges;
      break;

    case CriterionId::T32_ComplementAdjacencyHC:
      v.lhs = adjacency_radius(complement(g));
      strict_hc(v.lhs < v.threshold - tol);
      break;

    case CriterionId::T34_ComplementSignlessHC:
      v.lhs = signless_radius(complement(g));
      if (v.lhs <= v.threshold + tol) {
        v.status = CriterionStatus::Satisfied;
        v.exception = exceptional_set_member(g);
        v.predicted = v.exception ? Prediction::NoPrediction : Prediction::HamiltonConnected;
      }
      break;

    case CriterionId::T41_SignlessPathCycle:
    case CriterionId::T42_AdjacencyPathCycle:
      v.lhs = c == CriterionId::T41_SignlessPathCycle ? signless_radius(g) : adjacency_radius(g);
      if (strict_above()) {
        v.status = CriterionStatus::Satisfied;
        v.predicted = Prediction::HamiltonianCycle;
        if (recognize::clique_plus_pendant(g)) v.exception = FamilyTag::CliquePlusPendant;
      } else if (v.lhs >= v.threshold - tol) {
        v.status = CriterionStatus::Satisfied;
        v.predicted = Prediction::HamiltonianPath;
        if (recognize::clique_plus_isolated(g)) v.exception = FamilyTag::CliquePlusIsolated;
      }
      break;
  }
  return v;
}

inline bool matches_family(const Graph& g, FamilyTag t) {
  switch (t) {
    case FamilyTag::CliquePlusIsolated: return recognize::clique_plus_isolated(g);
    case FamilyTag::CliquePlusPendant: return recognize::clique_plus_pendant(g);
    case FamilyTag::CliquePlusTwoEdges: return recognize::clique_plus_two_edges(g);
    case FamilyTag::JoinOfTwoCliques: return recognize::join_of_two_cliques(g);
    case FamilyTag::BalancedCompleteBipartite: return recognize::balanced_complete_bipartite(g);
    case FamilyTag::RegularJoinClique: return recognize::regular_join_clique(g);
  }
  return false;
}

// The verdict makes no claim, names an exception the graph really belongs
// to, or the oracle confirms the claim.
inline bool verdict_is_sound(const Graph& g, const CriterionVerdict& v,
                             const HamiltonProfile& oracle) {
  if (v.exception) return matches_family(g, *v.exception);
  if (v.predicted == Prediction::NoPrediction) return true;
  switch (v.predicted) {
    case Prediction::HamiltonConnected: return oracle.hamilton_connected;
    case Prediction::HamiltonianCycle: return oracle.has_cycle;
    case Prediction::HamiltonianPath: return oracle.has_path;
    case Prediction::NoPrediction: return true;
  }
  return true;
}

}  // namespace hamcert
