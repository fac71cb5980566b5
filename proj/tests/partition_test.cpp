#include "hookbias/partition.hpp"

#include <gtest/gtest.h>

#include <set>
#include <vector>

namespace hookbias {
namespace {

std::vector<Partition> collect(PartitionRange range) {
    std::vector<Partition> out;
    for (const auto& lambda : range) out.push_back(lambda);
    return out;
}

// Independent partition counts from the pentagonal-number recurrence.
std::vector<std::int64_t> partition_numbers(int n_max) {
    std::vector<std::int64_t> p(static_cast<std::size_t>(n_max) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        std::int64_t s = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            const int sign = k % 2 ? 1 : -1;
            s += sign * p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n) s += sign * p[static_cast<std::size_t>(n - g2)];
        }
        p[static_cast<std::size_t>(n)] = s;
    }
    return p;
}

TEST(PartitionTest, MakeCanonicalizes) {
    const auto p = make_partition({1, 5, 2});
    EXPECT_EQ(p.parts(), (std::vector<int>{5, 2, 1}));
    EXPECT_EQ(p.weight(), 8);

    const auto empty = make_partition({});
    EXPECT_TRUE(empty.empty());
    EXPECT_EQ(empty.weight(), 0);

    const auto fig = make_partition({5, 4, 2, 2, 1});
    EXPECT_EQ(fig.parts(), (std::vector<int>{5, 4, 2, 2, 1}));
    EXPECT_EQ(fig.weight(), 14);
    EXPECT_EQ(fig.multiplicity(2), 2);
    EXPECT_EQ(fig.multiplicity(3), 0);
    EXPECT_EQ(fig.distinct_part_count(), 4);
}

TEST(PartitionTest, MakeRejectsNonPositive) {
    EXPECT_THROW(make_partition({3, 0, 1}), std::invalid_argument);
    EXPECT_THROW(make_partition({-2}), std::invalid_argument);
}

TEST(PartitionTest, EnumerationOrderIsDescendingLexicographic) {
    const auto four = collect(enumerate_partitions(4));
    const std::vector<Partition> expected{make_partition({4}), make_partition({3, 1}), make_partition({2, 2}),
                                          make_partition({2, 1, 1}), make_partition({1, 1, 1, 1})};
    EXPECT_EQ(four, expected);

    for (int n = 0; n <= 25; ++n) {
        const auto all = collect(enumerate_partitions(n));
        for (std::size_t i = 1; i < all.size(); ++i) EXPECT_GT(all[i - 1], all[i]);
    }
}

TEST(PartitionTest, EnumerationCounts) {
    EXPECT_EQ(collect(enumerate_partitions(0)).size(), 1u);
    EXPECT_TRUE(collect(enumerate_partitions(0)).front().empty());
    EXPECT_EQ(collect(enumerate_partitions(4)).size(), 5u);
    EXPECT_EQ(collect(enumerate_partitions(5)).size(), 7u);
}

TEST(PartitionTest, RegularEnumeration) {
    EXPECT_EQ(collect(enumerate_t_regular(4, 2)), (std::vector<Partition>{make_partition({3, 1}), make_partition({1, 1, 1, 1})}));
    EXPECT_EQ(collect(enumerate_t_regular(3, 3)), (std::vector<Partition>{make_partition({2, 1}), make_partition({1, 1, 1})}));
    for (int t = 2; t <= 6; ++t) EXPECT_EQ(collect(enumerate_t_regular(0, t)).size(), 1u);
    EXPECT_THROW(enumerate_t_regular(5, 1), std::invalid_argument);
    EXPECT_THROW(enumerate_partitions(-1), std::invalid_argument);

    // Same sets as filtering the full enumeration.
    for (int t = 2; t <= 5; ++t) {
        for (int n = 0; n <= 20; ++n) {
            std::vector<Partition> filtered;
            for (const auto& p : enumerate_partitions(n)) {
                if (p.is_regular(t)) filtered.push_back(p);
            }
            EXPECT_EQ(collect(enumerate_t_regular(n, t)), filtered) << "n=" << n << " t=" << t;
        }
    }
}

TEST(PartitionTest, StreamCardinalities) {
    const auto p = partition_numbers(40);
    for (int n = 0; n <= 40; ++n) {
        std::size_t total = 0;
        std::size_t distinct = 0;
        for (const auto& lambda : enumerate_partitions(n)) {
            ++total;
            if (!lambda.has_repeated_part()) ++distinct;
        }
        EXPECT_EQ(total, static_cast<std::size_t>(p[static_cast<std::size_t>(n)]));
        EXPECT_EQ(collect(enumerate_t_regular(n, 2)).size(), distinct) << "Euler, n=" << n;
    }
}

TEST(PartitionTest, Conjugate) {
    // Column heights of (5,4,2,2,1) are 5,4,2,2,1: the diagram is symmetric.
    EXPECT_EQ(conjugate(make_partition({5, 4, 2, 2, 1})), make_partition({5, 4, 2, 2, 1}));
    EXPECT_EQ(conjugate(make_partition({3})), make_partition({1, 1, 1}));
    EXPECT_EQ(conjugate(make_partition({4, 1})), make_partition({2, 1, 1, 1}));
    EXPECT_EQ(conjugate(Partition{}), Partition{});
    for (int n = 0; n <= 20; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) EXPECT_EQ(conjugate(conjugate(lambda)), lambda);
    }
}

TEST(PartitionTest, HookTallyMatchesFigure) {
    const auto fig = make_partition({5, 4, 2, 2, 1});
    EXPECT_EQ(row_hooks(fig, 0), (std::vector<int>{9, 7, 4, 3, 1}));
    EXPECT_EQ(row_hooks(fig, 1), (std::vector<int>{7, 5, 2, 1}));
    EXPECT_EQ(row_hooks(fig, 2), (std::vector<int>{4, 2}));
    EXPECT_EQ(row_hooks(fig, 3), (std::vector<int>{3, 1}));
    EXPECT_EQ(row_hooks(fig, 4), (std::vector<int>{1}));
    const auto tally = hook_tally(fig);
    EXPECT_EQ(tally.count(1), 4);
    EXPECT_EQ(tally.count(2), 2);
    EXPECT_EQ(tally.count(9), 1);
    EXPECT_EQ(tally.total_cells, 14);

    const auto single = hook_tally(make_partition({1}));
    EXPECT_EQ(single.count(1), 1);
    EXPECT_EQ(single.total_cells, 1);
}

TEST(PartitionTest, HookProperties) {
    for (int n = 0; n <= 40; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
            const auto tally = hook_tally(lambda);
            std::int64_t sum = 0;
            for (auto c : tally.counts) sum += c;
            ASSERT_EQ(sum, n);
            ASSERT_EQ(tally.total_cells, n);
            if (n <= 30) {
                ASSERT_EQ(tally, hook_tally(conjugate(lambda))) << lambda.to_string();
                ASSERT_EQ(tally.count(1), lambda.distinct_part_count()) << lambda.to_string();
            }
        }
    }
}

TEST(PartitionTest, SmallestPartAtLeastTwo) {
    EXPECT_EQ(smallest_part_at_least_two_count(0), 1);
    EXPECT_EQ(smallest_part_at_least_two_count(1), 0);
    EXPECT_EQ(smallest_part_at_least_two_count(4), 2);
    for (int n = 1; n <= 30; ++n) {
        std::int64_t brute = 0;
        for (const auto& lambda : enumerate_partitions(n)) {
            if (lambda.smallest_part() >= 2) ++brute;
        }
        EXPECT_EQ(smallest_part_at_least_two_count(n), brute) << n;
    }
    for (int n = 2; n < 200; ++n) {
        EXPECT_GE(smallest_part_at_least_two_count(n + 1), smallest_part_at_least_two_count(n)) << n;
    }
}

TEST(PartitionTest, PsiMap) {
    EXPECT_EQ(psi_map(make_partition({2, 2})), make_partition({3, 2}));
    EXPECT_EQ(psi_map(make_partition({4})), make_partition({5}));
    EXPECT_THROW(psi_map(Partition{}), std::invalid_argument);
    EXPECT_THROW(psi_map(make_partition({3, 1})), std::invalid_argument);

    for (int n = 2; n <= 40; ++n) {
        std::set<Partition> images;
        std::size_t domain = 0;
        for (const auto& lambda : enumerate_partitions(n)) {
            if (lambda.smallest_part() < 2) continue;
            ++domain;
            const auto image = psi_map(lambda);
            ASSERT_EQ(image.weight(), n + 1);
            ASSERT_GE(image.smallest_part(), 2);
            images.insert(image);
        }
        EXPECT_EQ(images.size(), domain) << "psi not injective at n=" << n;
    }
}

TEST(PartitionTest, ClassifyTwoRegular) {
    EXPECT_EQ(classify_2regular(make_partition({3, 3, 1})), TwoRegularClass::Repeated);
    EXPECT_EQ(classify_2regular(make_partition({5, 3, 1})), TwoRegularClass::DistinctWithOne);
    EXPECT_EQ(classify_2regular(make_partition({5, 3})), TwoRegularClass::DistinctNoOne);
    EXPECT_EQ(class_tag(TwoRegularClass::Repeated), 'R');
    EXPECT_THROW(classify_2regular(make_partition({4, 1})), std::invalid_argument);
}

TEST(PartitionTest, PhiMapExamples) {
    EXPECT_EQ(phi_map(make_partition({5, 3, 1})), make_partition({3, 3, 1, 1, 1}));
    EXPECT_EQ(phi_map(make_partition({7, 1})), make_partition({3, 3, 1, 1}));
    EXPECT_EQ(phi_map(make_partition({5, 1})), make_partition({3, 3}));
    EXPECT_THROW(phi_map(make_partition({3, 1})), std::invalid_argument);        // n <= 4
    EXPECT_THROW(phi_map(make_partition({5, 3})), std::invalid_argument);        // no part 1
    EXPECT_THROW(phi_map(make_partition({3, 3, 1})), std::invalid_argument);     // repeated
    EXPECT_THROW(phi_map(make_partition({6, 1})), std::invalid_argument);        // even part
}

TEST(PartitionTest, TwoRegularClassLawsAndPhiInjectivity) {
    for (int n = 1; n <= 60; ++n) {
        std::set<Partition> images;
        std::size_t s_count = 0;
        for (const auto& lambda : enumerate_t_regular(n, 2)) {
            const auto tally = hook_tally(lambda);
            const auto h1 = tally.count(1);
            const auto h2 = tally.count(2);
            switch (classify_2regular(lambda)) {
                case TwoRegularClass::Repeated: ASSERT_GE(h2, h1) << lambda.to_string(); break;
                case TwoRegularClass::DistinctWithOne: {
                    ASSERT_EQ(h1, h2 + 1) << lambda.to_string();
                    if (n <= 4) break;
                    ++s_count;
                    const auto image = phi_map(lambda);
                    ASSERT_EQ(image.weight(), n);
                    ASSERT_EQ(classify_2regular(image), TwoRegularClass::Repeated) << image.to_string();
                    const auto image_tally = hook_tally(image);
                    ASSERT_EQ(image_tally.count(1), image_tally.count(2) - 1) << image.to_string();
                    images.insert(image);
                    break;
                }
                case TwoRegularClass::DistinctNoOne: ASSERT_EQ(h1, h2) << lambda.to_string(); break;
            }
        }
        EXPECT_EQ(images.size(), s_count) << "phi not injective at n=" << n;
    }
}

}  // namespace
}  // namespace hookbias
