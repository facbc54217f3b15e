#include <gtest/gtest.h>

#include <random>

#include "bipower/chordal.hpp"
#include "bipower/cycles.hpp"
#include "bipower/distance.hpp"
#include "bipower/graph.hpp"
#include "bipower/harness.hpp"
#include "bipower/power.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bipower;

TEST(Graph, SingleEdgeIsK11) {
  const auto g = build_graph(1, 1, {{0, 0}});
  EXPECT_TRUE(g.adjacent(0, 0));
  EXPECT_EQ(g.edge_count(), 1U);
  EXPECT_EQ(g.label(x_vertex(0)), "x1");
  EXPECT_EQ(g.label(y_vertex(0)), "y1");
}

TEST(Graph, DuplicateEdgesCollapse) {
  const auto g = build_graph(2, 2, {{0, 1}, {0, 1}, {1, 0}});
  EXPECT_EQ(g.edge_count(), 2U);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 0}}));
}

TEST(Graph, EdgelessIsValid) {
  const auto g = build_graph(2, 2, {});
  EXPECT_EQ(g.edge_count(), 0U);
  EXPECT_FALSE(is_connected(g));
}

TEST(Graph, OutOfRangeEdgeIsInputError) {
  EXPECT_THROW(build_graph(2, 2, {{2, 0}}), InputError);
  EXPECT_THROW(build_graph(2, 2, {{0, 5}}), InputError);
}

TEST(Graph, NeighboursAreSymmetric) {
  const auto g = fixtures::okamoto_graph();
  for (std::size_t x = 0; x < g.x_count(); ++x)
    for (auto y : g.neighbours(x_vertex(x))) {
      const auto back = g.neighbours(y_vertex(y));
      EXPECT_NE(std::find(back.begin(), back.end(), x), back.end());
    }
  EXPECT_EQ(g.neighbours(y_vertex(0)), (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(Graph, PermuteCarriesLabels) {
  const auto g = fixtures::okamoto_graph();
  const auto p = permute(g, {3, 0, 1, 2, 4, 5}, {0, 1, 2, 3, 4});
  EXPECT_EQ(p.label(x_vertex(0)), "x4");
  EXPECT_EQ(p.neighbours(x_vertex(0)), (std::vector<std::size_t>{0}));
  EXPECT_EQ(p.edge_count(), g.edge_count());
}

TEST(Distance, BfsFromX4MatchesPathEnumeration) {
  const auto g = fixtures::okamoto_graph();
  const auto d = bfs_distance(g, x_vertex(3));
  EXPECT_EQ(d.at(x_vertex(3)), 0U);
  EXPECT_EQ(d.at(y_vertex(0)), 1U);
  EXPECT_EQ(d.at(y_vertex(1)), 3U);
  EXPECT_EQ(d.at(y_vertex(4)), 3U);
  for (std::size_t f = 0; f < g.vertex_count(); ++f) {
    const auto v = g.from_flat(f);
    EXPECT_EQ(static_cast<int>(d.at(v)), oracle::path_enumeration_distance(g, x_vertex(3), v));
  }
}

TEST(Distance, CycleAntipode) {
  const auto g = cycle_graph(18);
  EXPECT_EQ(bfs_distance(g, cycle_vertex(0)).at(cycle_vertex(9)), 9U);
}

TEST(Distance, UnreachableIsMarked) {
  const auto g = build_graph(2, 2, {{0, 0}, {1, 1}});
  const auto d = bfs_distance(g, x_vertex(0));
  EXPECT_FALSE(d.reachable(y_vertex(1)));
  EXPECT_EQ(d.at(y_vertex(1)), kUnreachable);
  EXPECT_THROW(shortest_path(g, x_vertex(0), y_vertex(1)), DomainError);
}

TEST(Distance, InvalidSourceIsInputError) {
  const auto g = build_graph(1, 1, {{0, 0}});
  EXPECT_THROW(bfs_distance(g, x_vertex(4)), InputError);
}

TEST(Distance, RandomGraphsAgreeWithFloydWarshall) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto g = gen_random_bipartite(seed, 1 + seed % 6, 1 + (seed / 7) % 6, 0.35);
    const auto fw = oracle::floyd_warshall(g);
    const auto cross = cross_distances(g);
    for (std::size_t f = 0; f < g.vertex_count(); ++f) {
      const auto d = bfs_distance(g, g.from_flat(f));
      for (std::size_t t = 0; t < g.vertex_count(); ++t) {
        const int want = fw[f][t];
        const auto got = d.at(g.from_flat(t));
        if (want == oracle::kNoPath) {
          EXPECT_EQ(got, kUnreachable);
        } else {
          EXPECT_EQ(static_cast<int>(got), want);
          // parity: odd exactly across sides
          EXPECT_EQ(want % 2 == 1, g.from_flat(f).side != g.from_flat(t).side);
        }
      }
    }
    for (std::size_t x = 0; x < g.x_count(); ++x)
      for (std::size_t y = 0; y < g.y_count(); ++y) {
        const int want = fw[x][g.x_count() + y];
        EXPECT_EQ(cross[x][y], want == oracle::kNoPath ? kUnreachable
                                                        : static_cast<std::uint32_t>(want));
      }
  }
}

TEST(Distance, ShortestPathIsLexLeast) {
  const auto g = cycle_graph(8);
  // both directions around the cycle have length 4; the y1 side wins
  const auto p = shortest_path(g, cycle_vertex(0), cycle_vertex(4));
  ASSERT_EQ(p.size(), 5U);
  EXPECT_EQ(p[1], y_vertex(0));  // smallest-index neighbour one layer closer
  for (std::size_t i = 0; i + 1 < p.size(); ++i) EXPECT_TRUE(g.adjacent(p[i], p[i + 1]));
}

TEST(Connectivity, Basics) {
  EXPECT_TRUE(is_connected(build_graph(1, 1, {{0, 0}})));
  EXPECT_FALSE(is_connected(build_graph(2, 2, {{0, 0}, {1, 1}})));
  EXPECT_TRUE(is_connected(fixtures::okamoto_graph()));
  EXPECT_EQ(diameter(cycle_graph(18)), 9U);
}

TEST(Power, KOneIsIdentity) {
  const auto g = fixtures::okamoto_graph();
  EXPECT_TRUE(bipartite_power(g, 1).same_edges(g));
}

TEST(Power, EvenOrZeroKIsContractError) {
  const auto g = fixtures::c6();
  EXPECT_THROW(bipartite_power(g, 2), ContractError);
  EXPECT_THROW(bipartite_power(g, 0), ContractError);
  EXPECT_THROW(bipartite_power(g, -3), ContractError);
}

TEST(Power, IntervalFixtureCubedIsComplete) {
  const auto p = bipartite_power(fixtures::okamoto_graph(), 3);
  EXPECT_EQ(p.edge_count(), 30U);
}

TEST(Power, KeepsLabels) {
  auto g = fixtures::c6();
  g.set_labels({"a1", "a2", "a3"}, {"b1", "b2", "b3"});
  EXPECT_EQ(bipartite_power(g, 3).x_labels(), g.x_labels());
}

TEST(Power, CycleCornersInduceSixCycle) {
  const auto g = cycle_graph(18);
  CycleCertificate corners{{}, 3};
  for (std::size_t t = 0; t < 18; t += 3) corners.vertices.push_back(cycle_vertex(t));
  EXPECT_TRUE(verify_chordless(bipartite_power(g, 3), corners));
  EXPECT_FALSE(verify_chordless(g, corners));
}

TEST(Power, MatchesDefinitionMonotoneAndSaturates) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const auto g = gen_random_bipartite(seed, 1 + seed % 7, 1 + (seed / 5) % 7, 0.3);
    BipartiteGraph prev = g;
    for (int k = 1; k <= 15; k += 2) {
      const auto p = bipartite_power(g, k);
      ASSERT_TRUE(p.same_edges(oracle::naive_power(g, k))) << "seed " << seed << " k " << k;
      for (const auto& [x, y] : prev.edges()) EXPECT_TRUE(p.adjacent(x, y));
      prev = p;
    }
    if (is_connected(g) && g.vertex_count() > 1) {
      const auto d = static_cast<int>(diameter(g));
      const int top = d % 2 ? d : d + 1;
      EXPECT_TRUE(bipartite_power(g, top).same_edges(bipartite_power(g, top + 2)));
      EXPECT_TRUE(bipartite_power(g, top).same_edges(bipartite_power(g, top + 10)));
    }
  }
}

TEST(Power, DisconnectedPairsStayNonAdjacent) {
  const auto g = build_graph(2, 2, {{0, 0}, {1, 1}});
  const auto p = bipartite_power(g, 99);
  EXPECT_FALSE(p.adjacent(0, 1));
  EXPECT_FALSE(p.adjacent(1, 0));
}

TEST(ChordlessSearch, SmallCycles) {
  const auto c6 = find_chordless_cycle(fixtures::c6(), 6);
  ASSERT_TRUE(c6);
  EXPECT_EQ(c6->length(), 6U);
  EXPECT_TRUE(verify_chordless(fixtures::c6(), *c6));
  EXPECT_FALSE(find_chordless_cycle(cycle_graph(4), 6));
  EXPECT_FALSE(find_chordless_cycle(fixtures::c6_with_chord(), 6));
}

TEST(ChordlessSearch, ContractAndCapacity) {
  EXPECT_THROW(find_chordless_cycle(fixtures::c6(), 4), ContractError);
  EXPECT_THROW(find_chordless_cycle(fixtures::c6(), 7), ContractError);
  EXPECT_THROW(find_chordless_cycle(cycle_graph(20), 6, SearchLimits{10}), CapacityError);
  EXPECT_THROW(find_chordless_cycle(fixtures::c6(), 6, SearchLimits{65}), ContractError);
}

TEST(ChordlessSearch, Deterministic) {
  const auto g = gen_random_bipartite(42, 6, 6, 0.4);
  EXPECT_EQ(find_chordless_cycle(g, 6), find_chordless_cycle(g, 6));
}

TEST(ChordlessSearch, AgreesWithSubsetEnumeration) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t nx = 1 + uniform_below(rng, 6), ny = 1 + uniform_below(rng, 6);
    const auto g = gen_random_bipartite(rng(), nx, ny, uniform_unit(rng));
    const auto longest = oracle::longest_induced_cycle(g);
    for (std::size_t min : {6U, 8U, 10U}) {
      const auto c = find_chordless_cycle(g, min);
      ASSERT_EQ(c.has_value(), longest >= min) << write_graph_json(g) << " min " << min;
      if (c) {
        EXPECT_TRUE(verify_chordless(g, *c));
        EXPECT_GE(c->length(), min);
      }
    }
  }
}

TEST(VerifyChordless, Cases) {
  CycleCertificate six{{x_vertex(0), y_vertex(0), x_vertex(1), y_vertex(1), x_vertex(2), y_vertex(2)}, 1};
  EXPECT_TRUE(verify_chordless(fixtures::c6(), six));
  EXPECT_FALSE(verify_chordless(fixtures::c6_with_chord(), six));
  CycleCertificate repeated{{x_vertex(0), y_vertex(0), x_vertex(0), y_vertex(0)}, 1};
  EXPECT_FALSE(verify_chordless(fixtures::c6(), repeated));
  CycleCertificate odd{{x_vertex(0), y_vertex(0), x_vertex(1)}, 1};
  EXPECT_FALSE(verify_chordless(fixtures::c6(), odd));
  CycleCertificate same_side{{x_vertex(0), x_vertex(1), y_vertex(0), y_vertex(1)}, 1};
  EXPECT_FALSE(verify_chordless(fixtures::c6(), same_side));
}
