#include "charbound/oracle.hpp"

#include <gtest/gtest.h>

#include "charbound/chern.hpp"
#include "charbound/errors.hpp"

namespace charbound {
namespace {

using V = std::vector<Integer>;

TEST(Genus, PlaneCurves) {
  EXPECT_EQ(genus_plane_curve(1), 0);
  EXPECT_EQ(genus_plane_curve(3), 1);
  EXPECT_EQ(genus_plane_curve(4), 3);
  EXPECT_THROW(genus_plane_curve(0), StructuralError);
  for (int d = 1; d <= 12; ++d) {
    const CompleteIntersection curve(2, {d});
    EXPECT_EQ(2 * genus_plane_curve(d) - 2, chern_number(curve, cotangent_chern(curve), MultiIndex({1})));
  }
}

TEST(ExactBetti, Surfaces) {
  EXPECT_EQ(exact_betti(CompleteIntersection(3, {2})), (V{1, 0, 2, 0, 1}));
  EXPECT_EQ(exact_betti(CompleteIntersection(3, {3})), (V{1, 0, 7, 0, 1}));
  EXPECT_EQ(exact_betti(CompleteIntersection(3, {4})), (V{1, 0, 22, 0, 1}));
}

TEST(ExactBetti, ProjectiveSpaceAndOddDimension) {
  EXPECT_EQ(exact_betti(CompleteIntersection(3, {})), (V{1, 0, 1, 0, 1, 0, 1}));
  // Cubic threefold: chi = -6, so b_3 = 10.
  EXPECT_EQ(exact_betti(CompleteIntersection(4, {3})), (V{1, 0, 1, 10, 1, 0, 1}));
}

TEST(TotalBetti, Examples) {
  EXPECT_EQ(total_betti(CompleteIntersection(3, {2})), 4);
  EXPECT_EQ(total_betti(CompleteIntersection(3, {4})), 24);
  for (int d = 1; d <= 20; ++d) {
    EXPECT_EQ(total_betti(CompleteIntersection(2, {d})), 2 + 2 * genus_plane_curve(d));
    EXPECT_EQ(total_betti(CompleteIntersection(2, {d})), 2 + Integer(d - 1) * (d - 2));
  }
}

TEST(ExactBetti, AlternatingSumIsEuler) {
  for (int m = 2; m <= 8; ++m) {
    for (int d1 = 1; d1 <= 5; ++d1) {
      for (int d2 = d1; d2 <= 5; ++d2) {
        if (m < 3) continue;
        const CompleteIntersection ci(m, {d1, d2});
        const auto b = exact_betti(ci);
        Integer alt = 0;
        for (std::size_t i = 0; i < b.size(); ++i) {
          ASSERT_GE(b[i], 0);
          alt += i % 2 == 0 ? b[i] : Integer(-b[i]);
        }
        ASSERT_EQ(alt, euler_characteristic(ci)) << ci.label();
      }
    }
  }
}

}  // namespace
}  // namespace charbound
