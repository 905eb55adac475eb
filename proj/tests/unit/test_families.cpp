#include <gtest/gtest.h>

#include <algorithm>

#include "asigma/canonical.hpp"
#include "asigma/families.hpp"
#include "asigma/graph6.hpp"
#include "asigma/independence.hpp"
#include "asigma/search.hpp"
#include "oracles.hpp"

using namespace asigma;

TEST(Families, SpecRoundTrip) {
  for (std::string s : {"path:5", "cycle:7", "star:4", "complete:5", "complete_bipartite:2,3", "d_graph:10",
                        "w_graph:11", "t1:1,2,3,4", "t2:2,1,1,2", "f_graph:3,3", "g1", "g2", "prism:4",
                        "subdivision:star:3", "rooted_attach:1,0,2:path:3"}) {
    FamilySpec spec = parse_family(s);
    EXPECT_EQ(to_string(spec), s);
    EXPECT_EQ(build(parse_family(to_string(spec))), build(spec)) << s;
  }
  EXPECT_THROW(parse_family("nonsense:3"), std::invalid_argument);
  EXPECT_THROW(parse_family("path:x"), std::invalid_argument);
  EXPECT_THROW(parse_family("t2:1,2"), std::invalid_argument);
}

TEST(Families, SpiderAndDoubleSpider) {
  for (int n = 4; n <= 20; ++n) {
    Graph d = d_graph(n);
    EXPECT_TRUE(is_tree(d));
    EXPECT_EQ(d.order(), n);
    EXPECT_EQ(branch_points(d).size(), 1u);
  }
  for (int n = 6; n <= 20; ++n) {
    Graph w = w_graph(n);
    EXPECT_TRUE(is_tree(w));
    EXPECT_EQ(leaves(w).size(), 4u);
  }
  EXPECT_EQ(independence_number(d_graph(10)).alpha, 6);
}

TEST(Families, SubdivisionShapes) {
  Graph t1 = t1_graph({1, 2, 3, 4});
  EXPECT_EQ(t1.order(), 7 + 10);
  EXPECT_EQ(t1.degree(3), 3 + 4);
  Graph t2 = t2_graph({2, 1, 1, 2});
  EXPECT_EQ(t2.order(), 13);
  EXPECT_EQ(t2.degree(0), 3);
  EXPECT_EQ(t2.degree(1), 3);
  EXPECT_TRUE(is_isomorphic(subdivision_graph(star_graph(3)), t1_graph({0, 0, 0, 0})));
  EXPECT_TRUE(is_isomorphic(t2_graph({2, 0, 0, 2}), w_graph(11)));
}

TEST(Families, CliqueBridgeAndComplements) {
  Graph f = f_graph(3, 3);
  EXPECT_EQ(f.size(), 7);
  EXPECT_EQ(independence_number(f).alpha, 2);
  EXPECT_TRUE(oracle::brute_isomorphic(complement(g1_graph()), g2_graph()));
  EXPECT_EQ(prism_graph(3).size(), 9);
}

TEST(Families, RootedAttach) {
  Graph g = rooted_attach(path_graph(3), {0, 2}, {2, 1});
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.degree(0), 3);
  EXPECT_THROW(rooted_attach(path_graph(3), {0}, {1, 2}), std::invalid_argument);
}

TEST(Families, QuotientRemainder) {
  // t = floor((2a-n+1)/(n-a)), l' = remainder.
  for (int n = 12; n <= 40; ++n) {
    auto [t, lp] = t_lp(n, n - 4);
    EXPECT_EQ(4 * t + lp, 2 * (n - 4) - n + 1);
    EXPECT_GE(lp, 0);
    EXPECT_LT(lp, 4);
  }
}

TEST(Families, NormalisationIsIdempotentAndSymmetric) {
  auto a = normalize_counts(Shape::t2, {1, 2, 3, 4});
  EXPECT_EQ(a, normalize_counts(Shape::t2, {4, 3, 2, 1}));
  EXPECT_EQ(normalize_counts(Shape::t2, a), a);
  auto b = normalize_counts(Shape::t1, {3, 1, 2, 5});
  EXPECT_EQ(b, normalize_counts(Shape::t1, {2, 3, 1, 5}));
  EXPECT_EQ(b[3], 5);
}

TEST(Families, CandidateTables) {
  for (int n = 12; n <= 60; ++n) {
    auto unrefined = candidate_rows(n, false);
    auto refined = candidate_rows(n, true);
    auto stored = stored_unrefined_rows(n);
    std::sort(stored.begin(), stored.end());
    EXPECT_EQ(stored, unrefined) << n;
    for (const auto& row : refined) EXPECT_TRUE(std::binary_search(unrefined.begin(), unrefined.end(), row));
    for (const auto& row : unrefined) {
      Graph g = build_row(row);
      EXPECT_EQ(g.order(), n);
      EXPECT_EQ(independence_number(g).alpha, n - 4);
      auto id = identify_candidate(g);
      ASSERT_TRUE(id.has_value());
      EXPECT_EQ(*id, row);
    }
  }
  EXPECT_THROW(candidate_rows(11, false), std::invalid_argument);
}
