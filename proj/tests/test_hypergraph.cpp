#include <gtest/gtest.h>

#include "oracles.hpp"
#include "widecover/covers.hpp"
#include "widecover/hypergraph.hpp"
#include "widecover/latin.hpp"

using namespace widecover;

TEST(Hypergraph, BuildH) {
  auto h = build_H({1});
  ASSERT_EQ(h.edges.size(), 1u);
  EXPECT_EQ(h.edges[0], (Triple{1, 1, 1}));
  h = build_H({2, 1});
  std::vector<Triple> expected{{1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 2, 2}, {2, 1, 1}};
  EXPECT_EQ(h.edges, expected);
  h = build_H({1, 1});
  EXPECT_EQ(h.edges, (std::vector<Triple>{{1, 1, 1}, {2, 1, 1}}));
}

TEST(Hypergraph, EdgeCountIsSumOfSquares) {
  for (int n = 0; n <= 10; ++n)
    for (const Partition& y : PartitionRange(n)) {
      std::size_t squares = 0;
      for (int a : y.rows()) squares += static_cast<std::size_t>(a * a);
      EXPECT_EQ(build_H(y).edges.size(), squares);
    }
}

TEST(Hypergraph, ExpandPairs) {
  auto g = expand_k(build_H({1}), 2);
  EXPECT_EQ(g.vertices.size(), 3u);
  EXPECT_EQ(g.edges.size(), 1u);
  g = expand_k(build_H({1, 1}), 2);
  ASSERT_EQ(g.edges.size(), 2u);
  EXPECT_EQ(g.vertices.size(), 5u);
  std::vector<int> shared;
  std::set_intersection(g.edges[0].begin(), g.edges[0].end(), g.edges[1].begin(), g.edges[1].end(),
                        std::back_inserter(shared));
  ASSERT_EQ(shared.size(), 1u);
  const VertexSet& cs = g.vertices[static_cast<std::size_t>(shared[0])];
  EXPECT_EQ(cs, (VertexSet{{Side::column, 1}, {Side::symbol, 1}}));
}

TEST(Hypergraph, ExpandSingletons) {
  auto h = build_H({2, 1});
  auto g = expand_k(h, 1);
  EXPECT_EQ(g.edges.size(), h.edges.size());
  for (const auto& e : g.edges) EXPECT_EQ(e.size(), 3u);
  EXPECT_EQ(g.vertices.size(), 2u + 2 + 2);
  EXPECT_THROW(expand_k(h, 4), ContractViolation);
}

TEST(Hypergraph, SmallValues) {
  EXPECT_EQ(brute_nu2(build_H({1})), 1);
  EXPECT_EQ(brute_nu2(build_H({1, 1})), 1);
  EXPECT_EQ(brute_nu2(build_H({2, 1})), 3);
  EXPECT_EQ(brute_tau2(build_H({1})), 1);
  EXPECT_EQ(brute_tau2(build_H({1, 1})), 1);
  EXPECT_EQ(brute_tau2(build_H({3, 1, 1})), 4);
  EXPECT_EQ(brute_nu2(build_H(Partition{})), 0);
  EXPECT_EQ(brute_tau2(build_H(Partition{})), 0);
}

TEST(Hypergraph, CapacityGuard) {
  EXPECT_THROW(brute_nu2(build_H({9})), CapacityError);
  EXPECT_THROW(brute_tau2(build_H({5, 5, 5})), CapacityError);
  EXPECT_NO_THROW(brute_nu2(build_H({8})));
}

TEST(Hypergraph, TwoCoverAgreesWithExhaustiveOracle) {
  for (int n = 1; n <= 5; ++n)
    for (const Partition& y : PartitionRange(n))
      EXPECT_EQ(brute_tau2(build_H(y)), oracle::two_cover(y.parts())) << y.to_string();
}

TEST(Hypergraph, TwoMatchingAgreesWithFillingOracle) {
  for (int n = 1; n <= 7; ++n)
    for (const Partition& y : PartitionRange(n))
      EXPECT_EQ(brute_nu2(build_H(y)), oracle::partial_filling(y.parts())) << y.to_string();
}

TEST(Hypergraph, WeakDualityOnSmallDiagrams) {
  for (int n = 1; n <= 7; ++n)
    for (const Partition& y : PartitionRange(n)) {
      auto h = build_H(y);
      for (int k = 1; k <= 3; ++k) EXPECT_LE(brute_nu(h, k), brute_tau(h, k)) << y.to_string() << " k=" << k;
    }
}

TEST(Hypergraph, ThirdOrderIsEdgeCount) {
  auto h = build_H({3, 2});
  EXPECT_EQ(brute_nu(h, 3), static_cast<int>(h.edges.size()));
  EXPECT_EQ(brute_tau(h, 3), static_cast<int>(h.edges.size()));
}

TEST(Hypergraph, TrivialCoverBoundAndLatinEquivalence) {
  for (int n = 1; n <= 8; ++n)
    for (const Partition& y : PartitionRange(n)) {
      auto h = build_H(y);
      EXPECT_LE(brute_tau2(h), y.size());
      EXPECT_EQ(brute_nu2(h) == y.size(), find_latin_filling(y).has_value()) << y.to_string();
    }
}
