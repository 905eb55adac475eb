#include <gtest/gtest.h>

#include <random>

#include "asigma/families.hpp"
#include "asigma/partitions.hpp"
#include "asigma/spectral.hpp"
#include "oracles.hpp"

using namespace asigma;

TEST(Partitions, Validation) {
  Graph p = path_graph(4);
  EXPECT_THROW(validate_partition(p, {{0, 1}, {1, 2, 3}}), std::invalid_argument);
  EXPECT_THROW(validate_partition(p, {{0, 1}, {2}}), std::invalid_argument);
  EXPECT_THROW(validate_partition(p, {{0, 1, 2, 3}, {}}), std::invalid_argument);
  EXPECT_NO_THROW(validate_partition(p, {{0, 3}, {1, 2}}));
}

TEST(Partitions, EquitableDetection) {
  Graph p = path_graph(4);
  EXPECT_TRUE(is_equitable(p, 0.3, {{0, 3}, {1, 2}}));
  EXPECT_FALSE(is_equitable(p, 0.3, {{0, 1}, {2, 3}}));
  EXPECT_TRUE(is_equitable(g2_graph(), 0.7, {{0, 4}, {3, 5}, {1, 2}}));
  EXPECT_TRUE(is_equitable(f_graph(3, 3), 0.2, {{2, 3}, {0, 1, 4, 5}}));
}

TEST(Partitions, QuotientEntriesAndRoot) {
  QuotientMatrix q = quotient_matrix(path_graph(4), 0.5, {{0, 3}, {1, 2}});
  ASSERT_EQ(q.order, 2);
  EXPECT_DOUBLE_EQ(q(0, 0), 0.5);
  EXPECT_DOUBLE_EQ(q(0, 1), 0.5);
  EXPECT_DOUBLE_EQ(q(1, 0), 0.5);
  EXPECT_DOUBLE_EQ(q(1, 1), 1.5);
  EXPECT_NEAR(quotient_lambda(q), oracle::eigen_lambda(path_graph(4), 0.5), 1e-12);
}

TEST(Partitions, ClosedFormQuotientsMatchGraphs) {
  for (double s : {0.0, 0.3, 0.5, 0.75, 0.9}) {
    for (int a = 0; a <= 4; ++a) {
      for (int d = 0; d <= 4; ++d) {
        Graph g = t1_graph({a, a, a, d});
        Partition p = t1_hub_partition(a, d);
        ASSERT_TRUE(is_equitable(g, s, p));
        EXPECT_NEAR(quotient_lambda(quotient_matrix(g, s, p)), oracle::eigen_lambda(g, s), 1e-9);
      }
    }
    for (std::array<int, 4> c : {std::array<int, 4>{2, 1, 1, 2}, {0, 3, 0, 1}, {5, 4, 4, 6}, {1, 0, 2, 0}}) {
      Graph g = t2_graph(c);
      Partition p = t2_block_partition(c);
      ASSERT_TRUE(is_equitable(g, s, p));
      EXPECT_NEAR(quotient_lambda(quotient_matrix(g, s, p)), oracle::eigen_lambda(g, s), 1e-9);
      if (c[0] && c[1] && c[2] && c[3]) {
        QuotientMatrix formal = t2_block_quotient(s, c);
        QuotientMatrix direct = quotient_matrix(g, s, p);
        ASSERT_EQ(formal.order, direct.order);
        for (int i = 0; i < 11; ++i) {
          for (int j = 0; j < 11; ++j) EXPECT_NEAR(formal(i, j), direct(i, j), 1e-14);
        }
      }
    }
  }
}

TEST(Partitions, ClusteredSpectrumStillConverges) {
  Graph g = t2_graph({7, 7, 5, 8});
  double l = quotient_lambda(quotient_matrix(g, 0.9, t2_block_partition({7, 7, 5, 8})));
  EXPECT_NEAR(l, oracle::eigen_lambda(g, 0.9), 1e-9);
}

TEST(Partitions, CharacteristicPolynomial) {
  QuotientMatrix q = t2_block_quotient(0.6, {2, 1, 1, 2});
  std::vector<double> c = charpoly(q);
  ASSERT_EQ(c.size(), 12u);
  EXPECT_DOUBLE_EQ(c[0], 1.0);
  for (double x : {0.0, 0.7, 1.3, 2.9}) {
    EXPECT_NEAR(polyval(c, x), charpoly_at(q, x), 1e-6 * std::max(1.0, std::fabs(charpoly_at(q, x))));
  }
  double l = quotient_lambda(q);
  EXPECT_NEAR(charpoly_at(q, l), 0.0, 1e-8);
}

TEST(Partitions, FactorizationPairsHaveEqualOrder) {
  for (FactorizationId id : all_factorization_ids()) {
    EXPECT_EQ(parse_factorization_id(to_string(id)), id);
    for (int t = 3; t <= 10; ++t) {
      FactorizationPair fp = factorization_pair(id, t);
      int a = 0, b = 0;
      for (int i = 0; i < 4; ++i) {
        a += fp.first[i];
        b += fp.second[i];
      }
      EXPECT_EQ(a, b) << to_string(id) << " t=" << t;
    }
  }
  EXPECT_THROW(parse_factorization_id("nope"), std::invalid_argument);
}

TEST(Partitions, FactorizationIdentities) {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> sig(0.5, 1.0);
  for (FactorizationId id : all_factorization_ids()) {
    for (int k = 0; k < 200; ++k) {
      double s = id == FactorizationId::t1_hub_shift_half ? 0.5 : sig(rng);
      int t = 3 + k % 10;
      double x = std::uniform_real_distribution<double>(0.0, t + 6.0)(rng);
      EXPECT_TRUE(factorization_check(id, s, t, x, 1e-7)) << to_string(id) << " s=" << s << " t=" << t << " x=" << x;
    }
  }
  EXPECT_THROW(evaluate_factorization(FactorizationId::t1_hub_shift_half, 0.6, 4, 1.0), std::invalid_argument);
}
