#include "hookbias/bias.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "hookbias/reference_values.hpp"

namespace hookbias {
namespace {

const BiasEntry* find_entry(const std::vector<BiasEntry>& v, int t, int k, int n) {
    const auto it = std::find_if(v.begin(), v.end(), [&](const BiasEntry& e) { return e.t == t && e.k == k && e.n == n; });
    return it == v.end() ? nullptr : &*it;
}

TEST(BiasTest, OrdinaryBias) {
    const auto r = verify_ordinary_bias(10, 60);
    EXPECT_TRUE(r.passed());
    EXPECT_TRUE(r.violations.empty());
    EXPECT_EQ(r.exceptions_confirmed.size(), 9u);
    ASSERT_NE(find_entry(r.exceptions_confirmed, 0, 2, 3), nullptr);
    EXPECT_EQ(find_entry(r.exceptions_confirmed, 0, 2, 3)->value, -1);
    // k = 1, n = 2 is an ordinary difference of 0, not an exception.
    EXPECT_EQ(find_entry(r.differences, 0, 1, 2)->value, 0);
    EXPECT_EQ(find_entry(r.exceptions_confirmed, 0, 1, 2), nullptr);
    EXPECT_EQ(find_entry(r.differences, 0, 5, 10)->value, 10);
}

TEST(BiasTest, OrdinaryDifferencesMatchEnumeration) {
    const auto r = verify_ordinary_bias(6, 18);
    for (const auto& e : r.differences) {
        EXPECT_EQ(e.value, Coeff{oracle_ordinary(e.n, e.k) - oracle_ordinary(e.n, e.k + 1)}) << e.k << ' ' << e.n;
    }
}

TEST(BiasTest, TwoRegularOneVersusTwo) {
    const auto r = verify_2regular_12(100);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.observations.size(), 5u);
    EXPECT_EQ(find_entry(r.observations, 2, 0, 4)->value, -1);
    EXPECT_EQ(find_entry(r.differences, 2, 0, 10)->value, 1);
    EXPECT_EQ(find_entry(r.differences, 2, 0, 5)->value, 0);
    for (const auto& e : r.differences) {
        if (e.n > 40) break;
        EXPECT_EQ(e.value, Coeff{oracle_regular(e.n, 2, 2) - oracle_regular(e.n, 2, 1)}) << e.n;
    }
}

TEST(BiasTest, TwoRegularTwoVersusThree) {
    const auto r = verify_2regular_23(100);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(find_entry(r.differences, 2, 0, 0)->value, 0);
    EXPECT_EQ(find_entry(r.differences, 2, 0, 3)->value, 0);
    EXPECT_EQ(find_entry(r.differences, 2, 0, 6)->value, 1);
    for (const auto& e : r.differences) {
        if (e.n > 40) break;
        EXPECT_EQ(e.value, Coeff{oracle_regular(e.n, 2, 2) - oracle_regular(e.n, 2, 3)}) << e.n;
    }
}

TEST(BiasTest, ClosedFormsTwoRegular) {
    EXPECT_EQ(closed_b2(9).at_k, 5);
    EXPECT_EQ(closed_b2(8).at_k_plus_1, 2);
    EXPECT_EQ(closed_b2(3).diff_next, -1);
    EXPECT_THROW(closed_b2(0), std::invalid_argument);
    for (int k = 1; k <= 10; ++k) {
        EXPECT_EQ(closed_b2(k).at_k, reference::kTwoRegularTable[k - 1][k - 1]);
        if (k < 10) {
            EXPECT_EQ(closed_b2(k).at_k_plus_1, reference::kTwoRegularTable[k - 1][k]);
        }
    }
    EXPECT_TRUE(verify_closed_b2(20).passed());
}

TEST(BiasTest, ClosedFormsRegular) {
    EXPECT_EQ(closed_bt(3, 7).at_k, 5);
    EXPECT_EQ(oracle_regular(7, 3, 7), 5);
    EXPECT_EQ(closed_bt(3, 4).at_k_plus_1, 3);
    EXPECT_EQ(closed_bt(5, 1).at_k_plus_1, 2);
    EXPECT_THROW(closed_bt(2, 4), std::invalid_argument);
    for (int t = 3; t <= 6; ++t) {
        for (int k = 1; k <= 20; ++k) {
            const auto c = closed_bt(t, k);
            EXPECT_EQ(c.at_k, oracle_regular(k, t, k)) << "t=" << t << " k=" << k;
            EXPECT_EQ(c.at_k_plus_1, oracle_regular(k + 1, t, k)) << "t=" << t << " k=" << k;
        }
    }
}

TEST(BiasTest, DivisionsAreExact) {
    for (int t = 3; t <= 40; ++t) {
        for (int k = 1; k <= 200; ++k) EXPECT_NO_THROW(closed_bt(t, k)) << t << ' ' << k;
    }
    EXPECT_THROW(detail::exact_div(7, 3), std::logic_error);
}

TEST(BiasTest, PublishedSpecialValues) {
    EXPECT_EQ(published_special_value(7, 1), 2);
    EXPECT_EQ(published_special_value(3, 2), 1);
    EXPECT_EQ(published_special_value(5, 2), 2);
    EXPECT_EQ(published_special_value(4, 3), 2);
    EXPECT_EQ(published_special_value(9, 3), 3);
    EXPECT_FALSE(published_special_value(3, 4).has_value());
    // The published b_{3,3}(4) = 2 disagrees with enumeration: (4), (2,2) and
    // (1,1,1,1) each have one hook of length 3.
    EXPECT_EQ(published_special_value(3, 3), 2);
    EXPECT_EQ(oracle_regular(4, 3, 3), 3);
    EXPECT_EQ(hook_tally(make_partition({2, 1, 1})).count(3), 0);
    EXPECT_EQ(hook_tally(make_partition({1, 1, 1, 1})).count(3), 1);
    EXPECT_EQ(closed_bt(3, 3).at_k_plus_1, 3);
}

TEST(BiasTest, ClosedFormReportFlagsOnlyTheDisputedValue) {
    const auto r = verify_closed_bt(6, 20);
    EXPECT_FALSE(r.passed());
    ASSERT_EQ(r.violations.size(), 1u);
    EXPECT_EQ(r.violations[0], (BiasEntry{3, 3, 4, -1}));
    for (const auto& e : r.differences) EXPECT_EQ(e.value, 0);
}

TEST(BiasTest, ConjectureTwoRegular) {
    const auto r = scan_conjecture_2regular(8, 40);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.exceptions_confirmed.size(), 6u);
    EXPECT_EQ(find_entry(r.differences, 2, 5, 7)->value, 1);
    EXPECT_EQ(find_entry(r.differences, 2, 3, 0)->value, 0);
    EXPECT_THROW(scan_conjecture_2regular(5, 81), GuardExceeded);
    EXPECT_THROW(scan_conjecture_2regular(2, 10), std::invalid_argument);
}

// From k = 9 on the 2-regular bias fails away from n = k + 1: at n = 12,
// (7,3,1,1) and (5,3,1,1,1,1) have a 10-hook but no 9-hook.
TEST(BiasTest, ConjectureTwoRegularCounterexamples) {
    EXPECT_EQ(oracle_regular(12, 2, 9), 5);
    EXPECT_EQ(oracle_regular(12, 2, 10), 6);
    const auto r = scan_conjecture_2regular(12, 30);
    EXPECT_FALSE(r.passed());
    EXPECT_EQ(r.exceptions_confirmed.size(), 10u);
    EXPECT_EQ(find_entry(r.exceptions_confirmed, 2, 9, 10)->value, -4);
    ASSERT_NE(find_entry(r.violations, 2, 9, 12), nullptr);
    EXPECT_EQ(find_entry(r.violations, 2, 9, 12)->value, -1);
    for (const auto& v : r.violations) {
        EXPECT_GE(v.k, 9);
        EXPECT_GE(v.n, v.k + 3);
        EXPECT_EQ(v.value, Coeff{oracle_regular(v.n, 2, v.k) - oracle_regular(v.n, 2, v.k + 1)});
    }
}

TEST(BiasTest, ConjectureThreeRegular) {
    const auto r = scan_conjecture_3regular(200);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(find_entry(r.observations, 3, 0, 1)->value, -1);
    EXPECT_EQ(find_entry(r.observations, 3, 0, 26)->value, 14);
    EXPECT_EQ(find_entry(r.observations, 3, 0, 27)->value, -2);
    EXPECT_EQ(r.observations.size(), 28u);
    ASSERT_EQ(r.reference_mismatches.size(), 11u);
    EXPECT_EQ(r.reference_mismatches.front(), (BiasEntry{3, 0, 59, -1}));
    EXPECT_EQ(r.reference_mismatches.back(), (BiasEntry{3, 0, 70, -21}));
    EXPECT_EQ(find_entry(r.reference_mismatches, 3, 0, 60), nullptr);
    for (const auto& e : r.differences) {
        if (e.n > 40) break;
        EXPECT_EQ(e.value, Coeff{oracle_regular(e.n, 3, 2) - oracle_regular(e.n, 3, 1)}) << e.n;
    }
}

TEST(BiasTest, Explore) {
    const auto r = explore_regular_bias(3, 4, 20);
    EXPECT_EQ(r.verdict, Verdict::Exploratory);
    EXPECT_EQ(r.differences.size(), 4u * 21u);
    EXPECT_TRUE(std::is_sorted(r.differences.begin(), r.differences.end(),
                               [](const BiasEntry& a, const BiasEntry& b) { return a.k < b.k; }));
    EXPECT_EQ(find_entry(r.differences, 3, 2, 10)->value,
              Coeff{oracle_regular(10, 3, 2) - oracle_regular(10, 3, 3)});
}

TEST(BiasTest, FinalizeVerdict) {
    BiasReport r;
    r.finalize(0);
    EXPECT_EQ(r.verdict, Verdict::Pass);
    r.finalize(1);
    EXPECT_EQ(r.verdict, Verdict::Fail);
    r.exceptions_confirmed.push_back({0, 2, 3, -1});
    r.finalize(1);
    EXPECT_EQ(r.verdict, Verdict::Pass);
    r.violations.push_back({0, 1, 1, -1});
    r.finalize(1);
    EXPECT_EQ(r.verdict, Verdict::Fail);
    EXPECT_STREQ(verdict_name(Verdict::Exploratory), "exploratory");
}

TEST(BiasTest, Deterministic) {
    EXPECT_EQ(verify_ordinary_bias(8, 80), verify_ordinary_bias(8, 80));
    EXPECT_EQ(scan_conjecture_2regular(6, 25), scan_conjecture_2regular(6, 25));
}

}  // namespace
}  // namespace hookbias
