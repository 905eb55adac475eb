#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "asigma/canonical.hpp"
#include "asigma/enumeration.hpp"
#include "asigma/families.hpp"
#include "asigma/graph6.hpp"
#include "asigma/search.hpp"
#include "asigma/spectral.hpp"
#include "oracles.hpp"

using namespace asigma;

namespace {

std::set<std::string> brute_codes(const std::vector<std::string>& g6) {
  std::set<std::string> out;
  for (const auto& c : g6) out.insert(oracle::brute_canonical(from_graph6(c)));
  return out;
}

}  // namespace

TEST(Search, TreeClassMatchesUnprunedOracle) {
  const std::vector<double> sigmas = {0, 0.25, 0.5, 0.75, 0.9};
  for (int n = 4; n <= 8; ++n) {
    std::vector<Graph> pool = oracle::trees_by_extension(n);
    for (int alpha = (n + 1) / 2; alpha <= n - 1; ++alpha) {
      auto recs = find_minimizers_multi({n, alpha, GraphClass::tree}, sigmas);
      ASSERT_EQ(recs.size(), sigmas.size());
      for (const auto& r : recs) {
        double best = 0;
        auto ref = oracle::naive_minimizers(pool, alpha, r.sigma, 1e-9, &best);
        EXPECT_EQ(brute_codes(r.minimizers), ref) << "n=" << n << " alpha=" << alpha << " sigma=" << r.sigma;
        EXPECT_NEAR(r.min_lambda, best, 1e-10);
      }
    }
  }
}

TEST(Search, ConnectedClassMatchesUnprunedOracle) {
  const std::vector<double> sigmas = {0, 0.3, 0.5, 0.8};
  for (int n = 3; n <= 6; ++n) {
    std::vector<Graph> pool = oracle::connected_graphs(n);
    for (int alpha = 1; alpha <= n - 1; ++alpha) {
      auto recs = find_minimizers_multi({n, alpha, GraphClass::connected}, sigmas);
      for (const auto& r : recs) {
        auto ref = oracle::naive_minimizers(pool, alpha, r.sigma, 1e-9);
        EXPECT_EQ(brute_codes(r.minimizers), ref) << "n=" << n << " alpha=" << alpha << " sigma=" << r.sigma;
      }
    }
  }
}

TEST(Search, NamedMinimizers) {
  EXPECT_EQ(find_minimizers({6, 2, GraphClass::connected}, 0.4).minimizers,
            std::vector<std::string>{canonical_code(f_graph(3, 3))});
  EXPECT_EQ(find_minimizers({10, 6, GraphClass::tree}, 0.5).minimizers,
            std::vector<std::string>{canonical_code(d_graph(10))});
  EXPECT_EQ(find_minimizers({11, 7, GraphClass::tree}, 0.6).minimizers,
            std::vector<std::string>{canonical_code(w_graph(11))});
  EXPECT_EQ(canonical_code(f_graph(3, 3)), "EKYW");
}

TEST(Search, DeterministicAcrossThreadCounts) {
  SearchOptions one, many;
  one.threads = 1;
  many.threads = 4;
  auto a = find_minimizers_multi({13, 9, GraphClass::tree}, {0.0, 0.5, 0.9}, one);
  auto b = find_minimizers_multi({13, 9, GraphClass::tree}, {0.0, 0.5, 0.9}, many);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(to_json(a[i]), to_json(b[i]));
}

TEST(Search, ExternalStream) {
  std::ostringstream os;
  for (const Graph& g : oracle::connected_graphs(5)) os << to_graph6(g) << "\n";
  std::istringstream in(os.str());
  auto src = graph6_stream(in);
  auto recs = find_minimizers_in(*src, {5, 2, GraphClass::connected}, {0.5});
  EXPECT_EQ(recs[0].minimizers, find_minimizers({5, 2, GraphClass::connected}, 0.5).minimizers);
  std::istringstream wrong("Bw\n");
  auto bad = graph6_stream(wrong);
  EXPECT_THROW(find_minimizers_in(*bad, {5, 2, GraphClass::connected}, {0.5}), std::invalid_argument);
}

TEST(Search, InvalidRequests) {
  EXPECT_THROW(find_minimizers({6, 7, GraphClass::connected}, 0.5), std::invalid_argument);
  EXPECT_THROW(find_minimizers({6, 2, GraphClass::connected}, 1.0), std::invalid_argument);
  EXPECT_THROW(find_minimizers({6, 2, GraphClass::connected}, 0.5, -1.0), std::invalid_argument);
  EXPECT_THROW(find_minimizers({23, 12, GraphClass::tree}, 0.5), std::invalid_argument);
  EXPECT_THROW(find_minimizers({6, 2, GraphClass::tree}, 0.5), std::domain_error);
  EXPECT_THROW(parse_graph_class("forest"), std::invalid_argument);
  EXPECT_EQ(parse_graph_class("graph"), GraphClass::connected);
}

TEST(Search, JsonRoundTripIsExact) {
  SearchRecord r = find_minimizers({9, 6, GraphClass::tree}, 0.37);
  std::string j = to_json(r);
  SearchRecord back = search_record_from_json(j);
  EXPECT_EQ(back.min_lambda, r.min_lambda);
  EXPECT_EQ(back.minimizers, r.minimizers);
  EXPECT_EQ(to_json(back), j);
  EXPECT_EQ(j.find("{\"n\":9,\"alpha\":6,\"sigma\":0.37,\"class\":\"tree\",\"min_lambda\":"), 0u);
}

TEST(Search, TieToleranceWidensSet) {
  // Near sigma = 0 several trees share lambda_0 exactly.
  auto tight = find_minimizers({13, 9, GraphClass::tree}, 0.0, 1e-13);
  EXPECT_GE(tight.minimizers.size(), 2u);
  auto wide = find_minimizers({13, 9, GraphClass::tree}, 0.0, 1e-2);
  EXPECT_GE(wide.minimizers.size(), tight.minimizers.size());
  for (const auto& c : tight.minimizers) {
    EXPECT_NE(std::find(wide.minimizers.begin(), wide.minimizers.end(), c), wide.minimizers.end());
  }
}

TEST(Search, ShapeDecomposition) {
  Graph t = t2_graph({2, 1, 1, 2});
  ShapeDecomposition d = shape_decompose(t);
  ASSERT_TRUE(d.witness.has_value());
  EXPECT_EQ(d.witness->skeleton.order(), 4);
  EXPECT_TRUE(is_isomorphic(rebuild_shape(*d.witness), t));
  // Two adjacent hubs with two leaves each: no bipartite split fits.
  EXPECT_FALSE(shape_decompose(rooted_attach(path_graph(2), {0, 1}, {2, 2})).witness.has_value());
  EXPECT_THROW(shape_decompose(cycle_graph(5)), std::invalid_argument);
  // D_10 only decomposes once its bare leg end is read as a pendant-free
  // skeleton leaf: it is P_4 subdivided with counts (2,0,0,1).
  Graph near = rooted_attach(subdivision_graph(path_graph(4)), {0, 1, 2, 3}, {2, 0, 0, 1});
  EXPECT_TRUE(is_isomorphic(near, d_graph(10)));
  ShapeDecomposition dd = shape_decompose(d_graph(10));
  ASSERT_TRUE(dd.witness.has_value());
  EXPECT_EQ(dd.witness->skeleton.order(), 4);
  EXPECT_TRUE(is_isomorphic(rebuild_shape(*dd.witness), near));
  auto row = identify_candidate(t1_graph({0, 3, 3, 1}));
  ASSERT_TRUE(row.has_value());
  EXPECT_EQ(row->counts, normalize_counts(Shape::t1, {0, 3, 3, 1}));
}

TEST(Search, IdentifyCandidates) {
  auto t2 = identify_candidate(t2_graph({3, 2, 2, 4}));
  ASSERT_TRUE(t2.has_value());
  EXPECT_EQ(t2->shape, Shape::t2);
  EXPECT_EQ(t2->counts, normalize_counts(Shape::t2, {3, 2, 2, 4}));
  auto t1 = identify_candidate(t1_graph({2, 3, 1, 0}));
  ASSERT_TRUE(t1.has_value());
  EXPECT_EQ(t1->shape, Shape::t1);
  EXPECT_FALSE(identify_candidate(d_graph(12)).has_value());
}

TEST(Search, StructuralAuditOnMinimizers) {
  for (double s : {0.0, 0.5, 0.9}) {
    auto r = find_minimizers({14, 10, GraphClass::tree}, s, 1e-13);
    for (const auto& c : r.minimizers) {
      AuditReport rep = structural_audit(from_graph6(c), 10);
      EXPECT_EQ(rep.predicates.size(), 6u);
      EXPECT_TRUE(rep.all_pass()) << c << " sigma=" << s;
    }
  }
  EXPECT_THROW(structural_audit(w_graph(11), 5), std::invalid_argument);
  EXPECT_THROW(structural_audit(cycle_graph(6), 3), std::invalid_argument);
}

TEST(Search, StructuralAuditRejectsNonMinimizer) {
  // A long pendant path violates the structure every minimiser has.
  Graph t = attach_pendant_paths(t2_graph({2, 1, 1, 2}), 0, {4});
  int alpha = oracle::brute_alpha(t);
  AuditReport rep = structural_audit(t, alpha);
  EXPECT_FALSE(rep.all_pass());
}

TEST(Search, AttachmentRanges) {
  for (double s : {0.5, 0.6, 0.75}) {
    ASSERT_LE(shape_threshold(4, s), 16);
    auto r = find_minimizers({16, 12, GraphClass::tree}, s);
    for (const auto& c : r.minimizers) EXPECT_TRUE(attachment_range_check(from_graph6(c), s).all_pass()) << c;
  }
  // Unbalanced counts fall outside the sigma >= 1/2 window.
  EXPECT_FALSE(attachment_range_check(t2_graph({9, 0, 0, 0}), 0.6).all_pass());
}
