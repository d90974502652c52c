#include "charbound/bounds.hpp"

#include <gtest/gtest.h>

#include "charbound/chern.hpp"
#include "charbound/errors.hpp"
#include "charbound/oracle.hpp"

namespace charbound {
namespace {

TEST(BoundFormulas, Pontryagin) {
  EXPECT_EQ(pontryagin_bound(2, 2), 8192);
  EXPECT_EQ(pontryagin_bound(1, 1), 0);
  EXPECT_EQ(pontryagin_bound(4, 2), Integer(1) << 37);
  EXPECT_THROW(pontryagin_bound(0, 2), StructuralError);
}

TEST(BoundFormulas, Betti) {
  EXPECT_EQ(betti_bound(1, 3), 72);
  EXPECT_EQ(betti_bound(2, 2), 512);
  EXPECT_EQ(betti_bound(2, 4), 4096);
}

TEST(BoundFormulas, BettiRecursive) {
  EXPECT_EQ(betti_bound_recursive(CompleteIntersection(2, {3})), 4);
  // Conic section: 2; then 4 * 2 + 2 * 2^4 * 2^3.
  EXPECT_EQ(betti_bound_recursive(CompleteIntersection(3, {2})), 264);
  for (int d = 1; d <= 9; ++d) {
    EXPECT_EQ(betti_bound_recursive(CompleteIntersection(3, {1, d})), 2 + Integer(d - 1) * (d - 2));
  }
}

TEST(BoundFormulas, ChernBounds) {
  EXPECT_EQ(cI_bound(2, 3, MultiIndex({2})), 27);
  EXPECT_EQ(cI_bound(2, 2, MultiIndex({1, 1})), 8);
  EXPECT_EQ(cI_bound(1, 1, MultiIndex({1})), 0);
  EXPECT_EQ(cIn_bound(2, 2, MultiIndex({2})), 128);
  EXPECT_EQ(cIn_bound(1, 4, MultiIndex({1})), 24);
  EXPECT_EQ(cIn_bound(2, 3, MultiIndex({1, 1})), 432);
  EXPECT_THROW(cIn_bound(2, 3, MultiIndex({2, 1})), DegreeError);
}

TEST(BoundFormulas, MonotoneInDegree) {
  for (int n = 1; n <= 6; ++n) {
    for (int d = 1; d < 30; ++d) {
      ASSERT_LE(pontryagin_bound(n, d), pontryagin_bound(n, d + 1));
      ASSERT_LT(betti_bound(n, d), betti_bound(n, d + 1));
      for (const auto& index : multi_indices_up_to(n)) {
        ASSERT_LE(cI_bound(n, d, index), cI_bound(n, d + 1, index));
        ASSERT_LE(cIn_bound(n, d, index), cIn_bound(n, d + 1, index));
      }
    }
  }
}

TEST(Signature, Reports) {
  const auto ok = signature_check(CompleteIntersection(5, {2}), 0);
  EXPECT_TRUE(ok.satisfied);
  EXPECT_EQ(ok.bound, 98);
  EXPECT_EQ(*ok.margin, 98);
  EXPECT_EQ(ok.source, ValueSource::supplied);

  const auto bad = signature_check(98, 33);
  EXPECT_FALSE(bad.satisfied);
  EXPECT_EQ(*bad.exact, 99);
  EXPECT_EQ(*bad.margin, -1);

  const auto zero = signature_check(0, 0);
  EXPECT_TRUE(zero.satisfied);
  EXPECT_EQ(*zero.margin, 0);
  EXPECT_THROW(signature_check(CompleteIntersection(3, {2}), 0), DegreeError);
}

TEST(BlowupEuler, ComplexAndRealSides) {
  const Integer x = 1234;
  EXPECT_EQ(blowup_euler(x, -6, 3, false, 0), x - 12);
  EXPECT_EQ(blowup_euler(x, -6, 3, true, 0), x);
  EXPECT_EQ(blowup_euler(x, 0, 2, false, 0), x);
  EXPECT_EQ(blowup_euler(x, 5, 3, true, 4), x + 8);
  EXPECT_THROW(blowup_euler(x, 0, 1, false, 0), StructuralError);
}

TEST(Settle, InvariantAndUnsuppliedExact) {
  BoundReport r;
  r.exact = -5;
  r.bound = 5;
  settle(r);
  EXPECT_TRUE(r.satisfied);
  EXPECT_EQ(*r.margin, 0);
  r.lower = 0;
  settle(r);
  EXPECT_FALSE(r.satisfied);
  BoundReport empty;
  empty.bound = 3;
  settle(empty);
  EXPECT_TRUE(empty.satisfied);
  EXPECT_FALSE(empty.margin.has_value());
}

TEST(Checks, NamesRoundTrip) {
  for (Check c : all_checks()) EXPECT_EQ(parse_check(check_name(c)), c);
  EXPECT_THROW(parse_check("nope"), StructuralError);
}

TEST(Grid, EnumerationCounts) {
  GridSpec spec;
  // Degrees in [2,5]: C(k+3, 3) multidegrees of length k.
  const auto all = enumerate_grid(spec);
  EXPECT_EQ(all.size(), 784u);
  EXPECT_EQ(all.front(), CompleteIntersection(2, {2}));
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));

  spec.max_ambient_dim = 1;
  EXPECT_TRUE(enumerate_grid(spec).empty());
  EXPECT_TRUE(verify_grid(spec).reports.empty());
}

TEST(Grid, TruncationFlag) {
  GridSpec spec;
  spec.max_ambient_dim = 4;
  spec.max_cases = 5;
  spec.checks = {Check::betti};
  const auto result = verify_grid(spec, 2);
  EXPECT_TRUE(result.truncated);
  EXPECT_EQ(result.varieties_evaluated, 5u);
  EXPECT_EQ(result.varieties_total, 52u);
  EXPECT_EQ(result.reports.size(), 5u);
}

TEST(Grid, SingleHypersurfaceHasZeroChainMargins) {
  GridSpec spec;
  spec.varieties = std::vector<CompleteIntersection>{CompleteIntersection(5, {3})};
  spec.checks = {Check::hl_chain};
  const auto result = verify_grid(spec);
  ASSERT_EQ(result.reports.size(), 5u);
  for (const auto& r : result.reports) {
    EXPECT_TRUE(r.satisfied);
    EXPECT_EQ(*r.margin, 0) << r.subject;
  }
}

TEST(Grid, SmallGridFrozenCounts) {
  // Varieties in P^2..P^4 with degrees 2..3: 9 curves, 5 surfaces, 2 threefolds.
  GridSpec spec;
  spec.max_ambient_dim = 4;
  spec.max_degree_per_factor = 3;
  spec.checks = {Check::hl_chain};
  const auto result = verify_grid(spec);
  EXPECT_EQ(result.varieties_evaluated, 16u);
  EXPECT_TRUE(result.all_satisfied());
  EXPECT_EQ(result.reports.size(), 9u * 2 + 5 * 3 + 2 * 4);
}

TEST(Grid, ThreadCountDoesNotChangeOutput) {
  GridSpec spec;
  spec.max_ambient_dim = 5;
  spec.max_degree_per_factor = 4;
  const auto one = verify_grid(spec, 1);
  const auto four = verify_grid(spec, 4);
  ASSERT_EQ(one.reports.size(), four.reports.size());
  for (std::size_t i = 0; i < one.reports.size(); ++i) {
    ASSERT_EQ(one.reports[i].subject, four.reports[i].subject);
    ASSERT_EQ(one.reports[i].exact, four.reports[i].exact);
  }
}

TEST(Grid, FullDefaultGridSatisfied) {
  const auto result = verify_grid(GridSpec{});
  EXPECT_TRUE(result.truncated);
  EXPECT_EQ(result.varieties_evaluated, 500u);
  for (const auto& r : result.reports) EXPECT_TRUE(r.satisfied) << r.subject;
}

TEST(Grid, LineViolatesChernBoundAndIsFlagged) {
  // P^1 as a line in P^2: c_1(Omega) pairs to -2 while 2 d (d+n-2) = 0.
  const auto reports = verify_variety(CompleteIntersection(2, {1}), {Check::chern, Check::twisted_chern});
  bool saw_violation = false;
  for (const auto& r : reports) {
    EXPECT_TRUE(r.degenerate);
    if (r.check == "chern" && r.index == "I=(1)") {
      EXPECT_FALSE(r.satisfied);
      EXPECT_EQ(*r.exact, -2);
      EXPECT_EQ(r.bound, 0);
      saw_violation = true;
    }
    if (r.check == "twisted-chern") EXPECT_TRUE(r.satisfied);
  }
  EXPECT_TRUE(saw_violation);
}

TEST(Grid, LinearFactorsAreOptIn) {
  GridSpec spec;
  spec.max_ambient_dim = 3;
  spec.min_degree_per_factor = 1;
  spec.max_degree_per_factor = 2;
  const auto family = enumerate_grid(spec);
  EXPECT_EQ(family.front(), CompleteIntersection(2, {1}));
  EXPECT_EQ(family.size(), 2u + 2 + 3);
}

TEST(Grid, PontryaginChainOnFourFolds) {
  for (const auto& ci : {CompleteIntersection(5, {2}), CompleteIntersection(5, {3}),
                         CompleteIntersection(6, {2, 2})}) {
    const auto reports = verify_variety(ci, {Check::pontryagin_chain, Check::gamma_chain});
    ASSERT_EQ(reports.size(), 2u);
    for (const auto& r : reports) {
      EXPECT_TRUE(r.satisfied) << r.subject;
      EXPECT_EQ(r.degree_convention, "real");
    }
  }
  EXPECT_TRUE(verify_variety(CompleteIntersection(4, {2}), {Check::pontryagin_chain}).empty());
}

TEST(Grid, JsonSpec) {
  const auto spec = grid_from_json(nlohmann::json::parse(
      R"({"max_ambient_dim": 4, "max_degree_per_factor": 3, "max_codim": 1,
          "checks": ["hl-chain", "betti"], "max_cases": 10})"));
  EXPECT_EQ(spec.max_ambient_dim, 4);
  EXPECT_EQ(spec.max_codim, 1);
  EXPECT_EQ(spec.checks, (std::vector<Check>{Check::hl_chain, Check::betti}));
  EXPECT_EQ(spec.max_cases, 10u);
  EXPECT_EQ(enumerate_grid(spec).size(), 2u + 2 + 2);
  EXPECT_THROW(grid_from_json(nlohmann::json::parse(R"({"checks": ["bogus"]})")), StructuralError);
  EXPECT_THROW(grid_from_json(nlohmann::json::parse(R"({"max_cases": -1})")), StructuralError);
  EXPECT_THROW(grid_from_json(nlohmann::json::parse("[]")), StructuralError);
}

}  // namespace
}  // namespace charbound
