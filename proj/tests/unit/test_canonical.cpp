#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "asigma/canonical.hpp"
#include "asigma/families.hpp"
#include "asigma/graph6.hpp"
#include "asigma/verification.hpp"
#include "oracles.hpp"

using namespace asigma;

namespace {

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

}  // namespace

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    Graph g = random_connected_graph(1 + k % 20, k % 7, rng);
    EXPECT_EQ(canonical_code(g), canonical_code(shuffled(g, rng))) << to_graph6(g);
  }
}

TEST(Canonical, FormIsIsomorphicToInput) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    Graph g = random_connected_graph(2 + k % 6, k % 4, rng);
    CanonicalLabeling cl = canonical_labeling(g);
    EXPECT_TRUE(oracle::brute_isomorphic(cl.form, g));
    EXPECT_EQ(relabel(g, cl.order).order(), g.order());
  }
}

TEST(Canonical, AgreesWithBruteForceOnAllSmallGraphs) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<Graph> reps = oracle::connected_graphs(n);
    std::set<std::string> codes;
    for (const Graph& g : reps) codes.insert(canonical_code(g));
    EXPECT_EQ(codes.size(), reps.size()) << "n=" << n;
  }
}

TEST(Canonical, RegularGraphsAreSeparated) {
  // Same degree sequence, different graphs.
  EXPECT_FALSE(is_isomorphic(prism_graph(3), complete_bipartite(3, 3)));
  EXPECT_FALSE(is_isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
  EXPECT_TRUE(is_isomorphic(complement(g1_graph()), g2_graph()));
  std::mt19937_64 rng(9);
  Graph p = prism_graph(5);
  EXPECT_TRUE(is_isomorphic(p, shuffled(p, rng)));
}

TEST(Canonical, MatchesBruteForceIsomorphismOnRandomPairs) {
  std::mt19937_64 rng(17);
  int agree = 0;
  for (int k = 0; k < 300; ++k) {
    int n = 4 + k % 4;
    Graph a = random_connected_graph(n, 2, rng);
    Graph b = random_connected_graph(n, 2, rng);
    if (a.size() != b.size()) continue;
    EXPECT_EQ(is_isomorphic(a, b), oracle::brute_isomorphic(a, b));
    ++agree;
  }
  EXPECT_GT(agree, 50);
}
