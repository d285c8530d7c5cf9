#include <gtest/gtest.h>

#include <numeric>

#include "extraconn/generators.hpp"
#include "extraconn/graph.hpp"
#include "extraconn/mycielskian.hpp"
#include "oracle.hpp"

namespace extraconn {
namespace {

TEST(BuildGraph, PathHasExpectedDegrees) {
  const Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(p4.order(), 4);
  EXPECT_EQ(p4.size(), 3);
  EXPECT_EQ(p4.degrees(), (std::vector<int>{1, 2, 2, 1}));
}

TEST(BuildGraph, CycleFive) {
  const Graph c5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  EXPECT_EQ(c5.order(), 5);
  EXPECT_EQ(c5.size(), 5);
}

TEST(BuildGraph, RejectsMalformedInput) {
  EXPECT_THROW(build_graph(3, {{0, 0}}), InputError);
  EXPECT_THROW(build_graph(3, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(build_graph(3, {{0, 1}, {0, 1}}), InputError);
  EXPECT_THROW(build_graph(3, {{0, 3}}), InputError);
  EXPECT_THROW(build_graph(3, {{-1, 2}}), InputError);
}

TEST(BuildGraph, EdgeOrderIrrelevant) {
  EXPECT_EQ(build_graph(4, {{2, 3}, {1, 0}, {2, 1}}), build_graph(4, {{0, 1}, {1, 2}, {2, 3}}));
}

TEST(MinDegree, Examples) {
  EXPECT_EQ(min_degree(gen_named("path:4")), 1);
  EXPECT_EQ(min_degree(gen_named("complete:4")), 3);
  // μ(P4): originals have 2·deg, twins deg+1, root n = 4; the minimum is 2.
  EXPECT_EQ(min_degree(mycielskian(gen_named("path:4")).graph), 2);
  EXPECT_THROW(min_degree(Graph{}), InputError);
}

TEST(SetNeighborhood, Examples) {
  const Graph c5 = gen_named("cycle:5");
  EXPECT_EQ(set_neighborhood(c5, VertexSet(5, {0})), VertexSet(5, {1, 4}));
  const Graph c6 = gen_named("cycle:6");
  EXPECT_EQ(set_neighborhood(c6, VertexSet(6, {1, 2})), VertexSet(6, {0, 3}));
  const Graph k4 = gen_named("complete:4");
  EXPECT_TRUE(set_neighborhood(k4, VertexSet::full(4)).empty());
}

TEST(RemoveAndSplit, Examples) {
  EXPECT_EQ(remove_and_split(gen_named("cycle:6"), VertexSet(6, {0, 3})),
            (std::vector<VertexSet>{VertexSet(6, {1, 2}), VertexSet(6, {4, 5})}));
  EXPECT_EQ(remove_and_split(gen_named("path:5"), VertexSet(5, {2})),
            (std::vector<VertexSet>{VertexSet(5, {0, 1}), VertexSet(5, {3, 4})}));
  EXPECT_EQ(remove_and_split(gen_named("complete:4"), VertexSet(4, {0})),
            (std::vector<VertexSet>{VertexSet(4, {1, 2, 3})}));
  EXPECT_TRUE(remove_and_split(gen_named("complete:4"), VertexSet::full(4)).empty());
}

TEST(Isomorphism, Examples) {
  EXPECT_TRUE(are_isomorphic(gen_named("cycle:4"), gen_named("complete_bipartite:2,2")));
  EXPECT_FALSE(are_isomorphic(gen_named("cycle:5"), gen_named("path:5")));
  EXPECT_TRUE(are_isomorphic(mycielskian(gen_named("complete:2")).graph, gen_named("cycle:5")));
  EXPECT_THROW(are_isomorphic(gen_named("path:13"), gen_named("path:13")), InputError);
}

TEST(Isomorphism, AgreesWithPermutationOracle) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = gen_random(6, 0.5, seed);
    const Graph h = gen_random(6, 0.5, seed + 1000);
    EXPECT_EQ(are_isomorphic(g, h), oracle::isomorphic(g, h)) << seed;
    // Relabelling by reversal is always an isomorphism.
    std::vector<Edge> flipped;
    for (auto [u, v] : g.edges()) flipped.emplace_back(5 - u, 5 - v);
    EXPECT_TRUE(are_isomorphic(g, build_graph(6, flipped)));
  }
}

TEST(VertexSet, Algebra) {
  const VertexSet a(70, {0, 5, 64, 69});
  const VertexSet b(70, {5, 6, 69});
  EXPECT_EQ((a | b), VertexSet(70, {0, 5, 6, 64, 69}));
  EXPECT_EQ((a & b), VertexSet(70, {5, 69}));
  EXPECT_EQ((a - b), VertexSet(70, {0, 64}));
  EXPECT_EQ(a.size(), 4);
  EXPECT_EQ(a.complement().size(), 66);
  EXPECT_TRUE((a & b).is_subset_of(a));
  EXPECT_THROW(VertexSet(4, {4}), InputError);
  EXPECT_THROW((void)(VertexSet(3) | VertexSet(4)), InputError);
  EXPECT_EQ(VertexSet::from_mask(6, 0b1001).members(), (std::vector<int>{0, 3}));
}

// Properties over random graphs: partition, no cross edges, neighbourhoods,
// connectivity and the handshake lemma.
TEST(GraphProperties, RandomGraphs) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 1 + static_cast<int>(seed % 14);
    const Graph g = gen_random(n, 0.35, seed);
    const auto degrees = g.degrees();
    EXPECT_EQ(std::accumulate(degrees.begin(), degrees.end(), 0), 2 * g.size());
    for (int v = 0; v < n; ++v) {
      EXPECT_EQ(set_neighborhood(g, VertexSet(n, {v})), g.neighbor_set(v));
      for (int w : g.neighbors(v)) EXPECT_TRUE(g.adjacent(w, v));
      EXPECT_FALSE(g.adjacent(v, v));
    }
    const VertexSet removed = VertexSet::from_mask(n, seed * 2654435761u);
    const auto parts = remove_and_split(g, removed);
    VertexSet seen(n);
    int prev_min = -1;
    for (const auto& part : parts) {
      EXPECT_FALSE(part.intersects(seen));
      EXPECT_FALSE(part.intersects(removed));
      seen |= part;
      EXPECT_GT(part.members().front(), prev_min);
      prev_min = part.members().front();
      EXPECT_TRUE(set_neighborhood(g, part).is_subset_of(removed));
    }
    EXPECT_EQ(seen, removed.complement());
    const auto a = oracle::matrix_of(g);
    EXPECT_EQ(is_connected(g), oracle::component_sizes(a, std::vector<bool>(static_cast<std::size_t>(n))).size() == 1);
  }
}

}  // namespace
}  // namespace extraconn
