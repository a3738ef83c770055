#include <gtest/gtest.h>

#include "widecover/serialize.hpp"
#include "widecover/witness.hpp"

using namespace widecover;

TEST(Witness, MinimalViolation) {
  auto v = minimal_violation({3, 1, 1});
  ASSERT_TRUE(v);
  EXPECT_EQ(v->subset, (RowSubset{2, 3}));
  EXPECT_EQ(v->k, 1);
  EXPECT_FALSE(minimal_violation({2, 1}));
  v = minimal_violation({1, 1});
  ASSERT_TRUE(v);
  EXPECT_EQ(v->subset, (RowSubset{1, 2}));
  EXPECT_EQ(v->k, 1);
}

TEST(Witness, CoverForNonwide) {
  auto w = cover_witness_for_nonwide({1, 1});
  EXPECT_EQ(w.cover.size(), 1);
  EXPECT_TRUE(w.cover.cs.contains(1, 1));

  w = cover_witness_for_nonwide({3, 1, 1});
  EXPECT_EQ(w.cover.size(), 4);
  EXPECT_EQ(w.sub_cover, 1);
  EXPECT_EQ(w.cover.rc, (std::set<IndexPair>{{1, 1}, {1, 2}, {1, 3}}));
  EXPECT_TRUE(validate_2cover({3, 1, 1}, w.cover));
  EXPECT_THROW(cover_witness_for_nonwide({2, 1}), ContractViolation);
}

TEST(Witness, RectangleCoverSizeFormula) {
  // Sub-diagram (1,1), k = 1: Q = [1] x [1] and both rows are T0/T2 with
  // nothing left to cover.
  EXPECT_EQ(rectangle_cover_size({1, 1}, 1), 1);
  for (int n = 1; n <= 11; ++n)
    for (const Partition& z : PartitionRange(n)) {
      auto v = minimal_violation(z);
      if (!v) continue;
      GridSet q = GridSet::rectangle(v->sub.width(), v->k, v->sub.row(v->k));
      EXPECT_EQ(rectangle_cover_size(v->sub, v->k), cover_cost(v->sub, q)) << z.to_string();
      EXPECT_LT(rectangle_cover_size(v->sub, v->k), v->sub.size()) << z.to_string();
    }
}

TEST(Witness, FromCover) {
  PairCover p(1);
  p.cs.insert(1, 1);
  auto w = nonwide_witness_from_cover({1, 1}, p);
  EXPECT_EQ(w.subset, (RowSubset{1, 2}));
  EXPECT_EQ(w.block, 1);
  EXPECT_EQ(w.profile, (Profile{1, 1, {0}, {1}}));

  Partition y{3, 1, 1};
  auto dw = nonwide_witness_from_cover(y, tau2_exact(y).p_opt);
  Partition z = sub_diagram(y, dw.subset);
  EXPECT_FALSE(dominates(z, conjugate(z)));

  EXPECT_THROW(nonwide_witness_from_cover({2, 1}, trivial_cover({2, 1})), ContractViolation);
  EXPECT_THROW(nonwide_witness_from_cover({1, 1}, PairCover(1)), ContractViolation);
}

TEST(Witness, ClassifyRows) {
  Partition y{6, 4, 3, 2, 1};
  Profile prof{2, 3, {1}, {2}};  // D: a <= 2, O_0 = (2,3], T_1 = (3,5], U: a > 5
  RowClasses c = classify_rows(y, prof);
  EXPECT_EQ(c.low, (std::vector<int>{4, 5}));
  EXPECT_EQ(c.ones, (std::vector<std::vector<int>>{{3}}));
  EXPECT_EQ(c.twos, (std::vector<std::vector<int>>{{2}}));
  EXPECT_EQ(c.high, (std::vector<int>{1}));
}

TEST(Witness, RoundTripsOnSmallDiagrams) {
  for (int n = 1; n <= 10; ++n)
    for (const Partition& y : PartitionRange(n)) {
      if (is_wide(y).wide) continue;
      auto cw = cover_witness_for_nonwide(y);
      EXPECT_TRUE(validate_2cover(y, cw.cover));
      EXPECT_LT(cw.cover.size(), y.size());
      auto dw = nonwide_witness_from_cover(y, cw.cover);
      Partition z = sub_diagram(y, dw.subset);
      EXPECT_FALSE(dominates(z, conjugate(z))) << y.to_string();
    }
}

TEST(Witness, Json) {
  auto w = cover_witness_for_nonwide({3, 1, 1});
  Json j = witness_json(w.violation.subset, w.violation.k, w.cover, 5);
  EXPECT_EQ(j.dump(),
            R"({"subset":[2,3],"k":1,"cover":{"rc":[[1,1],[1,2],[1,3]],"rs":[],"cs":[[1,1]]},)"
            R"("sizes":{"cover":4,"diagram":5}})");
  PairCover back = pair_cover_from_json(j["cover"], {3, 1, 1});
  EXPECT_EQ(back, w.cover);
  EXPECT_THROW(pair_cover_from_json(Json::parse(R"({"rc":[[4,1]]})"), {3, 1, 1}), ContractViolation);
  EXPECT_THROW(pair_cover_from_json(Json::parse(R"({"rc":[1]})"), {3, 1, 1}), ContractViolation);
}
