#include <gtest/gtest.h>

#include "oracles.hpp"
#include "widecover/latin.hpp"
#include "widecover/partition.hpp"

using namespace widecover;

TEST(Latin, Validation) {
  auto r = validate_filling({2, 2}, Filling{{{1, 2}, {2, 1}}});
  EXPECT_TRUE(r.latin());
  r = validate_filling({2, 2}, Filling{{{1, 2}, {1, 2}}});
  EXPECT_FALSE(r.valid());
  EXPECT_EQ(r.column_duplicates, (std::vector<Duplicate>{{1, 1}, {2, 2}}));
  EXPECT_TRUE(validate_filling({2, 1}, Filling{{{2, 1}, {1}}}).latin());
}

TEST(Latin, ValidationPartialAndRange) {
  auto r = validate_filling({2, 1}, Filling{{{2, 0}, {}}});
  EXPECT_TRUE(r.valid());
  EXPECT_FALSE(r.complete);
  r = validate_filling({2, 1}, Filling{{{3, 1}, {1}}});
  EXPECT_EQ(r.range_violations, (std::vector<CellRef>{{1, 1}}));
  r = validate_filling({2, 1}, Filling{{{1, 1}, {2}}});
  EXPECT_EQ(r.row_duplicates, (std::vector<Duplicate>{{1, 1}}));
  EXPECT_EQ(r.range_violations, (std::vector<CellRef>{{2, 1}}));
  EXPECT_THROW(validate_filling({2, 1}, Filling{{{1, 2, 3}}}), ContractViolation);
}

TEST(Latin, MaxPartialFilling) {
  EXPECT_EQ(max_partial_filling({2, 1}).size, 3);
  EXPECT_EQ(max_partial_filling({1, 1}).size, 1);
  EXPECT_EQ(max_partial_filling(Partition{}).size, 0);
  EXPECT_THROW(max_partial_filling(Partition{31}), CapacityError);
}

TEST(Latin, MaxPartialFillingAgreesWithOracle) {
  for (int n = 1; n <= 8; ++n)
    for (const Partition& y : PartitionRange(n)) {
      auto r = max_partial_filling(y);
      EXPECT_EQ(r.size, oracle::partial_filling(y.parts())) << y.to_string();
      auto report = validate_filling(y, r.filling);
      EXPECT_TRUE(report.valid());
      EXPECT_EQ(r.filling.filled(), r.size);
    }
}

TEST(Latin, FindLatinFilling) {
  auto f = find_latin_filling({2, 2});
  ASSERT_TRUE(f);
  EXPECT_TRUE(validate_filling({2, 2}, *f).latin());
  EXPECT_FALSE(find_latin_filling({1, 1}));
  EXPECT_EQ(*find_latin_filling({1}), (Filling{{{1}}}));
  EXPECT_EQ(*find_latin_filling(Partition{}), Filling{});
}

TEST(Latin, FindLatinFillingAgreesWithPartialSearch) {
  for (int n = 1; n <= 14; ++n)
    for (const Partition& y : PartitionRange(n)) {
      auto f = find_latin_filling(y);
      bool exists = max_partial_filling(y).size == y.size();
      EXPECT_EQ(f.has_value(), exists) << y.to_string();
      if (f) {
        EXPECT_TRUE(validate_filling(y, *f).latin()) << y.to_string();
      }
    }
}

TEST(Latin, MatchingConversion) {
  Partition y{2, 1};
  Filling f{{{2, 1}, {1}}};
  auto m = filling_to_matching(y, f);
  EXPECT_EQ(m, (std::vector<Triple>{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}}));
  EXPECT_EQ(matching_to_filling(y, m), f);
  EXPECT_EQ(filling_to_matching({1}, Filling{{{1}}}), (std::vector<Triple>{{1, 1, 1}}));
}

TEST(Latin, MatchingConversionErrors) {
  Partition y{2, 1};
  EXPECT_THROW(filling_to_matching(y, Filling{{{2, 0}, {1}}}), ContractViolation);
  EXPECT_THROW(filling_to_matching(y, Filling{{{1, 2}, {1}}}), ContractViolation);
  EXPECT_THROW(matching_to_filling(y, {{1, 1, 1}, {1, 2, 2}, {2, 1, 1}}), ContractViolation);
  EXPECT_THROW(matching_to_filling(y, {{1, 1, 1}, {1, 2, 2}, {2, 2, 1}}), ContractViolation);
  EXPECT_THROW(matching_to_filling(y, {{1, 1, 1}}), ContractViolation);
}

TEST(Latin, RoundTripOverDiagrams) {
  for (int n = 1; n <= 9; ++n)
    for (const Partition& y : PartitionRange(n)) {
      auto f = find_latin_filling(y);
      if (!f) continue;
      EXPECT_EQ(matching_to_filling(y, filling_to_matching(y, *f)), *f);
    }
}

TEST(Latin, LatinDiagramsAreWide) {
  for (int n = 1; n <= 16; ++n)
    for (const Partition& y : PartitionRange(n))
      if (auto f = find_latin_filling(y)) {
        EXPECT_TRUE(is_wide(y).wide) << y.to_string();
        EXPECT_TRUE(validate_filling(y, *f).latin());
      }
}
