#include "charbound/variety.hpp"

#include <gtest/gtest.h>

#include "charbound/errors.hpp"

namespace charbound {
namespace {

TEST(CompleteIntersection, DimensionAndDegree) {
  EXPECT_EQ(dimension(CompleteIntersection(3, {2})), 2);
  EXPECT_EQ(dimension(CompleteIntersection(4, {2, 2})), 2);
  EXPECT_EQ(dimension(CompleteIntersection(2, {7})), 1);
  EXPECT_EQ(degree(CompleteIntersection(3, {2})), 2);
  EXPECT_EQ(degree(CompleteIntersection(4, {2, 2})), 4);
  EXPECT_EQ(degree(CompleteIntersection(5, {1, 1})), 1);
}

TEST(CompleteIntersection, CanonicalForm) {
  const CompleteIntersection a(6, {3, 2, 2});
  EXPECT_EQ(a.multidegree(), (std::vector<int>{2, 2, 3}));
  EXPECT_EQ(a, CompleteIntersection(6, {2, 3, 2}));
  EXPECT_EQ(a.label(), "X(6;2,2,3)");
  EXPECT_EQ(a.multidegree_string(), "2;2;3");
  EXPECT_EQ(CompleteIntersection(3, {}).label(), "X(3)");
}

TEST(CompleteIntersection, RejectsInvalid) {
  EXPECT_THROW(CompleteIntersection(2, {2, 2}), StructuralError);
  EXPECT_THROW(CompleteIntersection(3, {0}), StructuralError);
  EXPECT_THROW(CompleteIntersection(0, {}), StructuralError);
}

TEST(CompleteIntersection, HyperplaneSection) {
  EXPECT_EQ(hyperplane_section(CompleteIntersection(3, {3})), CompleteIntersection(2, {3}));
  EXPECT_EQ(hyperplane_section(CompleteIntersection(4, {2, 2})), CompleteIntersection(3, {2, 2}));
  EXPECT_THROW(hyperplane_section(CompleteIntersection(2, {4})), DimensionError);
}

TEST(CompleteIntersection, HyperplaneSectionProperties) {
  for (int m = 3; m <= 8; ++m) {
    for (int k = 1; k <= m - 2; ++k) {
      std::vector<int> degrees(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) degrees[static_cast<std::size_t>(i)] = 1 + (i * 3 + m) % 5;
      const CompleteIntersection ci(m, degrees);
      const auto h = ci.hyperplane_section();
      EXPECT_EQ(h.degree(), ci.degree());
      EXPECT_EQ(h.dimension(), ci.dimension() - 1);
    }
  }
}

TEST(CompleteIntersection, Json) {
  const auto ci = variety_from_json(nlohmann::json::parse(R"({"ambient_dim": 4, "multidegree": [3, 2]})"));
  EXPECT_EQ(ci, CompleteIntersection(4, {2, 3}));
  EXPECT_EQ(variety_from_json(to_json(ci)), ci);
  EXPECT_THROW(variety_from_json(nlohmann::json::parse(R"({"ambient_dim": 4})")), StructuralError);
  EXPECT_THROW(variety_from_json(nlohmann::json::parse(R"({"ambient_dim": "4", "multidegree": []})")),
               StructuralError);
}

TEST(CompleteIntersection, CanonicalOrdering) {
  EXPECT_LT(CompleteIntersection(3, {5}), CompleteIntersection(4, {2}));
  EXPECT_LT(CompleteIntersection(4, {5}), CompleteIntersection(4, {2, 2}));
  EXPECT_LT(CompleteIntersection(4, {2, 3}), CompleteIntersection(4, {3, 3}));
}

TEST(MultiIndex, WeightAndValidation) {
  EXPECT_EQ(MultiIndex({1, 2, 2}).weight(), 5);
  EXPECT_EQ(MultiIndex().weight(), 0);
  EXPECT_THROW(MultiIndex({0}), StructuralError);
  EXPECT_EQ(MultiIndex({1, 1}).to_string(), "(1,1)");
}

TEST(MultiIndex, EnumerationCountsPartitions) {
  // Partitions of 0..4: 1 + 1 + 2 + 3 + 5.
  const auto all = multi_indices_up_to(4);
  EXPECT_EQ(all.size(), 12u);
  EXPECT_TRUE(all.front().empty());
  EXPECT_EQ(multi_indices_up_to(7).size(), 1u + 1 + 2 + 3 + 5 + 7 + 11 + 15);
}

TEST(Partition, Basics) {
  const Partition p({3, 1, 0, 0});
  EXPECT_EQ(p.length(), 2u);
  EXPECT_EQ(p.size(), 4);
  EXPECT_EQ(p, Partition({3, 1}));
  EXPECT_THROW(Partition({1, 2}), StructuralError);
  EXPECT_THROW(Partition({-1}), StructuralError);
  EXPECT_TRUE(p.fits_in_box(2, 3));
  EXPECT_FALSE(p.fits_in_box(1, 3));
  EXPECT_FALSE(p.fits_in_box(2, 2));
}

TEST(Partition, ComplementIsInvolution) {
  for (int rows = 1; rows <= 3; ++rows) {
    for (int cols = 1; cols <= 5; ++cols) {
      for (const auto& p : all_partitions_in_box(rows, cols)) {
        const auto c = p.complement(rows, cols);
        EXPECT_EQ(c.size(), rows * cols - p.size());
        EXPECT_EQ(c.complement(rows, cols), p);
      }
    }
  }
  EXPECT_EQ(Partition({2, 1}).complement(2, 3), Partition({2, 1}));
}

TEST(Partition, BoxEnumeration) {
  // Partitions in an a x b box: C(a+b, a).
  EXPECT_EQ(all_partitions_in_box(2, 2).size(), 6u);
  EXPECT_EQ(all_partitions_in_box(3, 5).size(), 56u);
  EXPECT_EQ(partitions_in_box(2, 2, 2).size(), 2u);
}

TEST(ParseIntList, Forms) {
  EXPECT_EQ(parse_int_list("2,1"), (std::vector<int>{2, 1}));
  EXPECT_EQ(parse_int_list("(1, 1)"), (std::vector<int>{1, 1}));
  EXPECT_TRUE(parse_int_list("").empty());
  EXPECT_THROW(parse_int_list("1,x"), StructuralError);
}

}  // namespace
}  // namespace charbound
