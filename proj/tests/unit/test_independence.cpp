#include <gtest/gtest.h>

#include <random>

#include "asigma/families.hpp"
#include "asigma/independence.hpp"
#include "asigma/verification.hpp"
#include "oracles.hpp"

using namespace asigma;

namespace {

void expect_certificate(const Graph& g, const IndependenceCertificate& c) {
  EXPECT_EQ(static_cast<int>(c.witness.size()), c.alpha);
  std::uint64_t m = set_to_mask(c.witness);
  for (int v : c.witness) EXPECT_EQ(g.row(v) & m, 0u);
}

}  // namespace

TEST(Independence, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 300; ++k) {
    int n = 1 + k % 16;
    Graph g = random_connected_graph(n, k % (2 * n + 1), rng);
    IndependenceCertificate c = independence_number(g);
    EXPECT_EQ(c.alpha, oracle::brute_alpha(g));
    expect_certificate(g, c);
  }
}

TEST(Independence, TreeDynamicProgramMatchesExhaustive) {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 200; ++k) {
    Graph t = random_tree(1 + k % 20, rng);
    IndependenceCertificate c = tree_independence(t);
    EXPECT_EQ(c.alpha, oracle::brute_alpha(t));
    expect_certificate(t, c);
  }
  EXPECT_THROW(tree_independence(cycle_graph(4)), std::invalid_argument);
}

TEST(Independence, NamedGraphs) {
  EXPECT_EQ(independence_number(d_graph(10)).alpha, 6);
  EXPECT_EQ(independence_number(w_graph(11)).alpha, 7);
  EXPECT_EQ(independence_number(f_graph(3, 3)).alpha, 2);
  EXPECT_EQ(independence_number(cycle_graph(7)).alpha, 3);
  EXPECT_EQ(independence_number(complete_graph(6)).alpha, 1);
  EXPECT_EQ(independence_number(path_graph(64)).alpha, 32);
}

TEST(Independence, LargeSparseGraphsStayExact) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 5; ++k) {
    Graph g = random_connected_graph(40, 20, rng);
    expect_certificate(g, independence_number(g));
  }
}

TEST(Independence, RestrictedToAllowedSet) {
  Graph p = path_graph(6);
  std::uint64_t allowed = set_to_mask({1, 2, 3});
  IndependenceCertificate c = max_independent_within(p, allowed);
  EXPECT_EQ(c.alpha, 2);
  for (int v : c.witness) EXPECT_TRUE(allowed >> v & 1U);
}

TEST(Independence, LeafContainingSet) {
  std::mt19937_64 rng(37);
  for (int k = 0; k < 100; ++k) {
    Graph t = random_tree(3 + k % 18, rng);
    auto s = leaf_containing_mis(t);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(static_cast<int>(s->size()), oracle::brute_alpha(t));
    std::uint64_t m = set_to_mask(*s);
    for (int l : leaves(t)) EXPECT_TRUE(m >> l & 1U);
  }
  EXPECT_FALSE(leaf_containing_mis(path_graph(2)).has_value());
}
