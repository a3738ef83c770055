#include <gtest/gtest.h>

#include "oracles.hpp"
#include "widecover/partition.hpp"

using namespace widecover;

TEST(Partition, CanonicalizesOnConstruction) {
  Partition y{1, 3, 0, 1};
  EXPECT_EQ(y.parts(), (std::vector<int>{3, 1, 1}));
  EXPECT_EQ(y.size(), 5);
  EXPECT_EQ(y.num_rows(), 3);
  EXPECT_EQ(y.width(), 3);
  EXPECT_EQ(y.row(4), 0);
  EXPECT_THROW(Partition({2, -1}), ContractViolation);
}

TEST(Partition, Parse) {
  EXPECT_EQ(parse_partition("3,1,1").parts(), (std::vector<int>{3, 1, 1}));
  EXPECT_EQ(parse_partition("3,1,1").size(), 5);
  EXPECT_EQ(parse_partition("1 3 1").parts(), (std::vector<int>{3, 1, 1}));
  EXPECT_EQ(parse_partition("2,0,1").parts(), (std::vector<int>{2, 1}));
  EXPECT_TRUE(parse_partition("").empty());
  EXPECT_TRUE(parse_partition(" , ").empty());
  EXPECT_EQ(parse_partition(" 2 ,\t2 ").to_string(), "2,2");
}

TEST(Partition, ParseErrorsNameTheToken) {
  try {
    parse_partition("3,x1,1");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("x1"), std::string::npos);
  }
  EXPECT_THROW(parse_partition("3,-1"), ParseError);
  EXPECT_THROW(parse_partition("1.5"), ParseError);
}

TEST(Partition, Conjugate) {
  EXPECT_EQ(conjugate({3, 1, 1}), (Partition{3, 1, 1}));
  EXPECT_EQ(conjugate({2, 2}), (Partition{2, 2}));
  EXPECT_EQ(conjugate(Partition{}), Partition{});
  EXPECT_EQ(conjugate({4, 2, 1}), (Partition{3, 2, 1, 1}));
}

TEST(Partition, ConjugateMatchesColumnCountsAndIsInvolution) {
  for (int n = 0; n <= 20; ++n)
    for (const Partition& y : PartitionRange(n)) {
      EXPECT_EQ(conjugate(y).parts(), oracle::conjugate(y.parts())) << y.to_string();
      EXPECT_EQ(conjugate(conjugate(y)), y);
    }
}

TEST(Partition, Dominance) {
  EXPECT_TRUE(dominates({3, 1}, {2, 2}));
  EXPECT_FALSE(dominates({2, 2}, {3, 1}));
  EXPECT_TRUE(dominates({5, 2, 1}, {5, 2, 1}));
  EXPECT_THROW(dominates({3}, {2}), ContractViolation);
}

TEST(Partition, DominanceReversedByConjugation) {
  for (int n = 1; n <= 8; ++n) {
    auto all = enumerate_partitions(n);
    for (const auto& x : all)
      for (const auto& y : all) {
        EXPECT_EQ(dominates(x, y), oracle::dominates(x.parts(), y.parts()));
        EXPECT_EQ(dominates(x, y), dominates(conjugate(y), conjugate(x)));
      }
  }
}

TEST(Partition, SubDiagram) {
  Partition y{3, 1, 1};
  EXPECT_EQ(sub_diagram(y, {2, 3}), (Partition{1, 1}));
  EXPECT_EQ(sub_diagram(y, {1, 2, 3}), y);
  EXPECT_EQ(sub_diagram(y, RowSubset{}), Partition{});
  EXPECT_THROW(sub_diagram(y, {4}), ContractViolation);
  EXPECT_THROW(sub_diagram(y, {0}), ContractViolation);
}

TEST(Partition, Wideness) {
  EXPECT_TRUE(is_wide({2, 1}).wide);
  EXPECT_FALSE(is_wide({2, 1}).witness.has_value());
  auto w = is_wide({3, 1, 1});
  EXPECT_FALSE(w.wide);
  EXPECT_EQ(*w.witness, (RowSubset{2, 3}));
  w = is_wide({1, 1});
  EXPECT_FALSE(w.wide);
  EXPECT_EQ(*w.witness, (RowSubset{1, 2}));
  EXPECT_TRUE(is_wide(Partition{}).wide);
}

TEST(Partition, WidenessMatchesSubsetOracle) {
  for (int n = 0; n <= 14; ++n)
    for (const Partition& y : PartitionRange(n)) {
      auto w = is_wide(y);
      ASSERT_EQ(w.wide, oracle::is_wide(y.parts())) << y.to_string();
      if (!w.wide) {
        Partition z = sub_diagram(y, *w.witness);
        EXPECT_FALSE(dominates(z, conjugate(z))) << y.to_string();
      }
    }
}

TEST(Partition, WitnessIsMinimalThenLexicographic) {
  // Exhaustive check of the tie-break on every non-wide diagram up to n = 9.
  for (int n = 1; n <= 9; ++n)
    for (const Partition& y : PartitionRange(n)) {
      auto w = is_wide(y);
      if (w.wide) continue;
      std::optional<std::vector<int>> best;
      const int m = y.num_rows();
      for (unsigned long mask = 1; mask < (1UL << m); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < m; ++i)
          if (mask & (1UL << i)) idx.push_back(i + 1);
        Partition z = sub_diagram(y, RowSubset(idx));
        if (dominates(z, conjugate(z))) continue;
        if (!best || idx.size() < best->size() || (idx.size() == best->size() && idx < *best)) best = idx;
      }
      EXPECT_EQ(w.witness->indices, *best) << y.to_string();
    }
}

TEST(Partition, Enumeration) {
  auto four = enumerate_partitions(4);
  std::vector<Partition> expected{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  EXPECT_EQ(four, expected);
  EXPECT_EQ(enumerate_partitions(5).size(), 7u);
  auto zero = enumerate_partitions(0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero.front().empty());
}

TEST(Partition, EnumerationCountsAndOrder) {
  for (int n = 0; n <= 20; ++n) {
    auto all = enumerate_partitions(n);
    EXPECT_EQ(static_cast<long>(all.size()), oracle::partition_count(n)) << n;
    for (std::size_t t = 1; t < all.size(); ++t) EXPECT_GT(all[t - 1], all[t]);
    for (const auto& y : all) EXPECT_EQ(y.size(), n);
  }
  EXPECT_EQ(partitions_up_to(6).size(), 1u + 1 + 2 + 3 + 5 + 7 + 11);
  EXPECT_EQ(partitions_up_to(6, 5).size(), 7u + 11);
}

TEST(Partition, BoxEnumeration) {
  std::vector<std::vector<int>> seen;
  for_each_partition_in_box(4, 2, 3, [&](std::span<const int> parts) { seen.emplace_back(parts.begin(), parts.end()); });
  EXPECT_EQ(seen, (std::vector<std::vector<int>>{{3, 1}, {2, 2}}));
  long total = 0;
  for (int s = 0; s <= 36; ++s) for_each_partition_in_box(s, 6, 6, [&](std::span<const int>) { ++total; });
  EXPECT_EQ(total, 924);  // C(12, 6)
}

TEST(Partition, FirstDominanceFailure) {
  EXPECT_EQ(first_dominance_failure({1, 1}), 1);
  EXPECT_FALSE(first_dominance_failure({2, 1}).has_value());
  EXPECT_EQ(first_dominance_failure({2, 2, 2}), 1);
  EXPECT_EQ(first_dominance_failure({3, 2, 2}), 2);
}

TEST(Partition, DominanceIsAPartialOrder) {
  for (int n = 1; n <= 10; ++n) {
    auto all = enumerate_partitions(n);
    for (const auto& x : all) {
      EXPECT_TRUE(dominates(x, x));
      for (const auto& y : all) {
        if (!dominates(x, y)) continue;
        if (x != y) {
          EXPECT_FALSE(dominates(y, x));
        }
        for (const auto& z : all) {
          if (dominates(y, z)) {
            EXPECT_TRUE(dominates(x, z));
          }
        }
      }
    }
  }
}

TEST(Partition, WideDiagramsDominateTheirConjugate) {
  for (int n = 0; n <= 16; ++n)
    for (const Partition& y : PartitionRange(n))
      if (is_wide(y).wide) {
        EXPECT_TRUE(dominates(y, conjugate(y))) << y.to_string();
      }
}
