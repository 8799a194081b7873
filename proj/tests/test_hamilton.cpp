#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

#include "hamcert/hamcert.hpp"
#include "test_support.hpp"

namespace hamcert {
namespace {

void expect_agrees_with_brute(const Graph& g) {
  const HamiltonProfile p = hamilton_profile(g);
  const testing::BruteHamilton b = testing::brute_hamilton(g);
  EXPECT_EQ(p.has_path, b.path) << write_graph6(g);
  EXPECT_EQ(p.has_cycle, b.cycle) << write_graph6(g);
  EXPECT_EQ(p.hamilton_connected, b.connected) << write_graph6(g);
  if (p.has_path) {
    ASSERT_TRUE(p.witness_path.has_value());
    EXPECT_TRUE(is_hamiltonian_path(g, *p.witness_path)) << write_graph6(g);
  } else {
    EXPECT_FALSE(p.witness_path.has_value());
  }
  if (!p.hamilton_connected) {
    ASSERT_TRUE(p.failing_pair.has_value()) << write_graph6(g);
  }
}

TEST(Oracle, MatchesBruteForceExhaustive) {
  for (int n = 1; n <= 6; ++n) enumerate_labeled(n, expect_agrees_with_brute);
}

TEST(Oracle, MatchesBruteForceSampledAtEight) {
  for (const Graph& g : sample_random(8, 0.55, 150, 77)) expect_agrees_with_brute(g);
}

TEST(Oracle, FailingPairHasNoHamiltonianPath) {
  // Re-check the reported pair with a DP rooted at one end.
  for (const Graph& g : sample_random(9, 0.6, 200, 3)) {
    const HamiltonProfile p = hamilton_profile(g);
    if (p.hamilton_connected) continue;
    ASSERT_TRUE(p.failing_pair);
    auto [u, v] = *p.failing_pair;
    const std::uint32_t full = (1U << g.order()) - 1;
    const auto reach = detail::path_table(g, 1U << u);
    EXPECT_EQ(reach[full] & (1U << v), 0U) << write_graph6(g);
  }
}

TEST(Oracle, Examples) {
  const HamiltonProfile petersen = hamilton_profile(testing::petersen());
  EXPECT_TRUE(petersen.has_path);
  EXPECT_FALSE(petersen.has_cycle);
  EXPECT_FALSE(petersen.hamilton_connected);

  const HamiltonProfile k33 = hamilton_profile(construct(family::CompleteBipartite{3, 3}));
  EXPECT_TRUE(k33.has_cycle);
  EXPECT_FALSE(k33.hamilton_connected);

  const HamiltonProfile kee = hamilton_profile(construct(family::CliquePlusTwoEdges{6}));
  EXPECT_TRUE(kee.has_cycle);
  EXPECT_FALSE(kee.hamilton_connected);

  const HamiltonProfile k12 = hamilton_profile(Graph::complete(12));
  EXPECT_TRUE(k12.has_path && k12.has_cycle && k12.hamilton_connected);

  const HamiltonProfile c14 = hamilton_profile(construct(family::Cycle{14}));
  EXPECT_TRUE(c14.has_cycle);
  EXPECT_FALSE(c14.hamilton_connected);
}

TEST(Oracle, TinyOrderConventions) {
  const HamiltonProfile k1 = hamilton_profile(Graph(1));
  EXPECT_TRUE(k1.has_path);
  EXPECT_FALSE(k1.has_cycle);
  EXPECT_TRUE(k1.hamilton_connected);

  const HamiltonProfile k2 = hamilton_profile(Graph::complete(2));
  EXPECT_TRUE(k2.has_path);
  EXPECT_FALSE(k2.has_cycle);
  EXPECT_TRUE(k2.hamilton_connected);

  const HamiltonProfile e2 = hamilton_profile(Graph(2));
  EXPECT_FALSE(e2.has_path || e2.has_cycle || e2.hamilton_connected);

  const HamiltonProfile k3 = hamilton_profile(Graph::complete(3));
  EXPECT_TRUE(k3.has_cycle && k3.hamilton_connected);
}

TEST(Oracle, DisconnectedShortCircuits) {
  const Graph g = disjoint_union(Graph::complete(4), Graph::complete(3));
  const HamiltonProfile p = hamilton_profile(g);
  EXPECT_FALSE(p.has_path || p.has_cycle || p.hamilton_connected);
  ASSERT_TRUE(p.failing_pair);
  EXPECT_NE(g.component_of(p.failing_pair->first), g.component_of(p.failing_pair->second));
}

TEST(Oracle, CapacityErrors) {
  EXPECT_THROW(hamilton_profile(Graph::complete(21)), CapacityError);
  EXPECT_THROW(hamilton_profile(Graph::complete(6), 5), CapacityError);
  EXPECT_THROW(hamilton_profile(Graph::complete(4), kMaxOracleCap + 1), CapacityError);
  EXPECT_THROW(hamilton_profile(Graph::complete(4), 0), CapacityError);
  EXPECT_NO_THROW(hamilton_profile(construct(family::Path{21}), 21));
}

TEST(Oracle, CapFromEnvironment) {
  ::setenv("HAMCERT_ORACLE_CAP", "22", 1);
  EXPECT_EQ(oracle_cap_from_env(), 22);
  ::setenv("HAMCERT_ORACLE_CAP", "99", 1);
  EXPECT_EQ(oracle_cap_from_env(), kDefaultOracleCap);
  ::setenv("HAMCERT_ORACLE_CAP", "12x", 1);
  EXPECT_EQ(oracle_cap_from_env(), kDefaultOracleCap);
  ::unsetenv("HAMCERT_ORACLE_CAP");
  EXPECT_EQ(oracle_cap_from_env(), kDefaultOracleCap);
}

TEST(Oracle, ProfileImplications) {
  for (const Graph& g : sample_random(10, 0.5, 300, 10)) {
    const HamiltonProfile p = hamilton_profile(g);
    if (p.hamilton_connected) {
      EXPECT_TRUE(p.has_path && p.has_cycle);
    }
    if (p.has_cycle) {
      EXPECT_TRUE(p.has_path);
    }
    if (p.witness_path) {
      EXPECT_TRUE(is_hamiltonian_path(g, *p.witness_path));
    }
  }
}

TEST(DegreeSum, Examples) {
  const DegreeSumCheck k4 = degree_sum_check(Graph::complete(4));
  EXPECT_TRUE(k4.ore_path && k4.ore_cycle && k4.erdos_gallai_hc);

  const DegreeSumCheck c5 = degree_sum_check(construct(family::Cycle{5}));
  EXPECT_TRUE(c5.ore_path);
  EXPECT_FALSE(c5.ore_cycle);
  EXPECT_FALSE(c5.erdos_gallai_hc);

  const DegreeSumCheck k33 = degree_sum_check(construct(family::CompleteBipartite{3, 3}));
  EXPECT_TRUE(k33.ore_path);
  EXPECT_TRUE(k33.ore_cycle);
  EXPECT_FALSE(k33.erdos_gallai_hc);
}

TEST(DegreeSum, ConsistentWithOracleExhaustive) {
  for (int n = 1; n <= 7; ++n) {
    enumerate_labeled(n, [](const Graph& g) {
      const DegreeSumCheck d = degree_sum_check(g);
      if (!d.ore_path) return;
      const HamiltonProfile p = hamilton_profile(g);
      EXPECT_TRUE(p.has_path) << write_graph6(g);
      if (d.ore_cycle && g.order() >= 3) {
        EXPECT_TRUE(p.has_cycle) << write_graph6(g);
      }
      if (d.erdos_gallai_hc) {
        EXPECT_TRUE(p.hamilton_connected) << write_graph6(g);
      }
    });
  }
}

TEST(EdgeCount, Examples) {
  const Graph kee = construct(family::CliquePlusTwoEdges{6});
  const auto a = edge_count_classification(kee);
  EXPECT_EQ(a.r, 2);
  EXPECT_EQ(a.conclusion, EdgeCountConclusion::HCUnlessKee);

  const auto b = edge_count_classification(construct(family::CliquePlusIsolated{6}));
  EXPECT_EQ(b.r, 0);
  EXPECT_EQ(b.conclusion, EdgeCountConclusion::PathUnlessKv);

  const auto c = edge_count_classification(construct(family::CliquePlusIsolated{6}).without_edge(0, 1));
  EXPECT_EQ(c.r, -1);
  EXPECT_EQ(c.conclusion, EdgeCountConclusion::None);
}

// The r >= 2 clause has one more exception at n = 6: K_3 join 3K_1 has
// C(5,2) + 2 edges, but a Hamiltonian path between two of the universal
// vertices would need four separators for the independent triple.
TEST(EdgeCount, ConsistentWithOracleAtSix) {
  const Graph k3_join_3k1 = join(Graph::complete(3), Graph(3));
  ASSERT_EQ(edge_count_classification(k3_join_3k1).r, 2);
  EXPECT_FALSE(hamilton_profile(k3_join_3k1).hamilton_connected);
  EXPECT_FALSE(testing::brute_hamilton(k3_join_3k1).connected);

  int kee = 0, extra = 0, ke = 0, kv = 0;
  enumerate_labeled(6, [&](const Graph& g) {
    const auto c = edge_count_classification(g);
    if (c.r < 0) return;
    const HamiltonProfile p = hamilton_profile(g);
    if (c.r >= 2 && !p.hamilton_connected) {
      if (recognize::clique_plus_two_edges(g)) {
        ++kee;
      } else {
        EXPECT_TRUE(testing::isomorphic(g, k3_join_3k1)) << write_graph6(g);
        ++extra;
      }
    }
    if (c.r >= 1 && !p.has_cycle) {
      EXPECT_TRUE(recognize::clique_plus_pendant(g)) << write_graph6(g);
      ++ke;
    }
    if (!p.has_path) {
      EXPECT_TRUE(recognize::clique_plus_isolated(g)) << write_graph6(g);
      ++kv;
    }
  });
  // Labelings: 6 * C(5,2) = 60, C(6,3) = 20, 6 * 5 = 30, 6.
  EXPECT_EQ(kee, 60);
  EXPECT_EQ(extra, 20);
  EXPECT_EQ(ke, 30);
  EXPECT_EQ(kv, 6);
}

TEST(EdgeCount, NoExtraExceptionsAtSeven) {
  int kee = 0;
  enumerate_labeled(7, [&](const Graph& g) {
    if (edge_count_classification(g).r < 2) return;
    if (hamilton_profile(g).hamilton_connected) return;
    EXPECT_TRUE(recognize::clique_plus_two_edges(g)) << write_graph6(g);
    ++kee;
  });
  EXPECT_EQ(kee, 7 * 15);
}

TEST(RegularGraphs, CubicOrderSix) {
  std::set<std::string> classes;
  enumerate_labeled(6, [&](const Graph& g) {
    for (int d : g.degrees())
      if (d != 3) return;
    classes.insert(canonical_form(g));
  });
  ASSERT_EQ(classes.size(), 2U);
  const std::string k33 = canonical_form(construct(family::CompleteBipartite{3, 3}));
  const std::string prism = canonical_form(testing::prism());
  EXPECT_TRUE(classes.count(k33));
  EXPECT_TRUE(classes.count(prism));
  EXPECT_TRUE(hamilton_profile(testing::prism()).hamilton_connected);
  EXPECT_FALSE(hamilton_profile(construct(family::CompleteBipartite{3, 3})).hamilton_connected);
}

TEST(RegularGraphs, QuarticOrderNine) {
  for (int i = 0; i < 50; ++i) {
    const Graph g = random_regular(9, 4, 500 + i);
    for (int v = 0; v < 9; ++v) ASSERT_EQ(g.degree(v), 4);
    EXPECT_TRUE(hamilton_profile(g).hamilton_connected) << write_graph6(g);
  }
}

TEST(Enumeration, IsomorphismClassesOfOrderFour) {
  std::set<std::string> classes;
  enumerate_labeled(4, [&](const Graph& g) { classes.insert(canonical_form(g)); });
  EXPECT_EQ(classes.size(), 11U);
}

TEST(Enumeration, CanonicalFormAgreesWithIsomorphism) {
  SplitMix64 rng(61);
  for (int i = 0; i < 200; ++i) {
    const Graph a = random_graph(6, 0.5, rng);
    const Graph b = rng.below(2) ? testing::random_relabel(a, rng) : random_graph(6, 0.5, rng);
    EXPECT_EQ(canonical_form(a) == canonical_form(b), testing::isomorphic(a, b));
  }
}

}  // namespace
}  // namespace hamcert
