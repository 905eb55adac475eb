#include <gtest/gtest.h>

#include <random>

#include "asigma/families.hpp"
#include "asigma/graph.hpp"
#include "asigma/verification.hpp"

using namespace asigma;

TEST(Graph, RejectsMalformedInput) {
  EXPECT_THROW(Graph(0, {}), std::invalid_argument);
  EXPECT_THROW(Graph(65, {}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph::from_rows(2, {0b10, 0b00}), std::invalid_argument);
  EXPECT_NO_THROW(Graph(64, {{0, 63}}));
}

TEST(Graph, DegreesAndSize) {
  Graph p = path_graph(5);
  EXPECT_EQ(p.size(), 4);
  EXPECT_EQ(p.max_degree(), 2);
  EXPECT_EQ(p.min_degree(), 1);
  EXPECT_EQ(p.degree(0), 1);
  EXPECT_EQ(p.neighbors(2), (VertexSet{1, 3}));
  EXPECT_TRUE(p.adjacent(3, 4));
  EXPECT_FALSE(p.adjacent(0, 4));
}

TEST(Graph, ComplementIsInvolution) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 30; ++k) {
    Graph g = random_connected_graph(2 + k % 12, k % 5, rng);
    Graph c = complement(g);
    EXPECT_EQ(c.size() + g.size(), g.order() * (g.order() - 1) / 2);
    EXPECT_EQ(complement(c), g);
  }
}

TEST(Graph, ConnectivityAndTrees) {
  EXPECT_TRUE(is_tree(path_graph(1)));
  EXPECT_TRUE(is_tree(star_graph(6)));
  EXPECT_FALSE(is_tree(cycle_graph(5)));
  Graph two = disjoint_union(path_graph(3), path_graph(2));
  EXPECT_FALSE(is_connected(two));
  EXPECT_EQ(components(two).size(), 2u);
  EXPECT_FALSE(is_tree(two));
}

TEST(Graph, Bipartition) {
  EXPECT_TRUE(bipartition(cycle_graph(5)).empty());
  EXPECT_FALSE(is_bipartite(complete_graph(3)));
  std::vector<int> c = bipartition(cycle_graph(6));
  ASSERT_EQ(c.size(), 6u);
  for (auto [u, v] : cycle_graph(6).edges()) EXPECT_NE(c[u], c[v]);
}

TEST(Graph, TreePathAndDistances) {
  Graph d = d_graph(10);
  std::vector<int> p = tree_path(d, 1, 9);
  EXPECT_EQ(p.front(), 1);
  EXPECT_EQ(p.back(), 9);
  EXPECT_EQ(static_cast<int>(p.size()) - 1, distances(d, 1)[9]);
  EXPECT_THROW(tree_path(disjoint_union(path_graph(2), path_graph(2)), 0, 3), std::invalid_argument);
}

TEST(Graph, DeletionAndRelabel) {
  Graph c = cycle_graph(6);
  EXPECT_EQ(delete_vertex(c, 2).size(), 4);
  EXPECT_TRUE(is_tree(delete_vertex(c, 2)));
  EXPECT_TRUE(is_tree(delete_edge(c, 0, 1)));
  EXPECT_THROW(delete_edge(path_graph(3), 0, 2), std::invalid_argument);
  EXPECT_THROW(delete_vertex(Graph(1, {}), 0), std::invalid_argument);
  EXPECT_THROW(relabel(c, {0, 1, 2, 3, 4, 4}), std::invalid_argument);
  Graph r = relabel(c, {1, 2, 3, 4, 5, 0});
  EXPECT_EQ(r.size(), 6);
  EXPECT_EQ(r.max_degree(), 2);
}

TEST(Graph, LeavesAndBranchPoints) {
  Graph w = w_graph(11);
  EXPECT_EQ(leaves(w).size(), 4u);
  EXPECT_EQ(branch_points(w), (VertexSet{0, 6}));
  EXPECT_EQ(end_branch_points(w), (VertexSet{0, 6}));
  EXPECT_EQ(internal_edges(w).size(), 6u);
  EXPECT_TRUE(internal_edges(star_graph(5)).empty());
}

TEST(Graph, CutVertices) {
  EXPECT_EQ(cut_vertices(path_graph(5)), (std::vector<int>{1, 2, 3}));
  EXPECT_TRUE(cut_vertices(cycle_graph(5)).empty());
  EXPECT_EQ(cut_vertices(f_graph(3, 3)), (std::vector<int>{2, 3}));
}

TEST(Graph, Subdivision) {
  Graph t = star_graph(3);
  Graph s1 = subdivide_edge(t, {0, 1}, 1);
  Graph s2 = subdivide_edge(t, {0, 1}, 2);
  EXPECT_EQ(s1.order(), 5);
  EXPECT_EQ(s2.order(), 6);
  EXPECT_TRUE(is_tree(s2));
  EXPECT_THROW(subdivide_edge(t, {1, 2}, 1), std::invalid_argument);
  EXPECT_THROW(subdivide_edge(t, {0, 1}, 0), std::invalid_argument);
}

TEST(Graph, NeighbourShiftMovesEdges) {
  // v = 3 has neighbours {2, 4}; moving 4 over to u = 0.
  Graph p = path_graph(5);
  Graph s = shift_neighbors(p, 3, 0, {4});
  EXPECT_EQ(s.size(), p.size());
  EXPECT_TRUE(s.adjacent(0, 4));
  EXPECT_FALSE(s.adjacent(3, 4));
  EXPECT_THROW(shift_neighbors(p, 3, 0, {}), std::invalid_argument);
  EXPECT_THROW(shift_neighbors(p, 3, 0, {1}), std::invalid_argument);
}

TEST(Graph, PendantPaths) {
  Graph g = attach_pendant_paths(cycle_graph(4), 0, {3, 1});
  EXPECT_EQ(g.order(), 8);
  EXPECT_EQ(g.degree(0), 4);
  EXPECT_EQ(leaves(g).size(), 2u);
  EXPECT_THROW(attach_pendant_paths(cycle_graph(4), 0, {0}), std::invalid_argument);
}

TEST(Graph, MaskHelpers) {
  VertexSet s = {0, 5, 63};
  EXPECT_EQ(mask_to_set(set_to_mask(s)), s);
  EXPECT_EQ(induced_subgraph(complete_graph(5), {1, 3, 4}).size(), 3);
}
