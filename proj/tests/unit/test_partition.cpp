#include <gtest/gtest.h>

#include "griffin/dset.hpp"
#include "griffin/errors.hpp"
#include "griffin/partition.hpp"
#include "oracles.hpp"

using namespace griffin;

namespace {

// lambda^(j) straight from the definition: decrement entry j of the
// conjugate and keep it if it is still a partition.
std::optional<std::vector<int>> corner_oracle(const std::vector<int>& parts, int j) {
    if (j == 0) return parts;
    auto c = oracle::conjugate(parts);
    if (j > static_cast<int>(c.size())) return std::nullopt;
    c[static_cast<std::size_t>(j - 1)] -= 1;
    for (std::size_t i = 1; i < c.size(); ++i) {
        if (c[i] > c[i - 1]) return std::nullopt;
    }
    while (!c.empty() && c.back() == 0) c.pop_back();
    return oracle::conjugate(c);
}

}  // namespace

TEST(Partition, ParseAndValidate) {
    EXPECT_EQ(Partition::parse("3,2,2,1").parts(), (std::vector<int>{3, 2, 2, 1}));
    EXPECT_EQ(Partition({2, 1, 0, 0}).parts(), (std::vector<int>{2, 1}));
    EXPECT_THROW(Partition::parse(""), InvalidInput);
    EXPECT_THROW(Partition::parse("1,2"), InvalidInput);
    EXPECT_THROW(Partition::parse("2,x"), InvalidInput);
    EXPECT_THROW(Partition({2, -1}), InvalidInput);
}

TEST(Partition, ConjugateMatchesCounting) {
    for (int size = 0; size <= 9; ++size) {
        for (const auto& lambda : partitions_of(size)) {
            EXPECT_EQ(lambda.conjugate().parts(), oracle::conjugate(lambda.parts()));
            EXPECT_EQ(lambda.conjugate().conjugate(), lambda);
            EXPECT_EQ(lambda.size(), size);
        }
    }
    EXPECT_EQ(Partition({3, 2, 2, 1}).conjugate().parts(), (std::vector<int>{4, 3, 1}));
}

TEST(Partition, PartitionCounts) {
    const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
    for (int k = 0; k < 10; ++k) EXPECT_EQ(partitions_of(k).size(), p[static_cast<std::size_t>(k)]);
}

TEST(Partition, PStatisticIsTailSum) {
    for (int n = 1; n <= 6; ++n) {
        for (int size = 1; size <= n + 1; ++size) {
            for (const auto& lambda : partitions_of(size)) {
                const auto c = oracle::conjugate(lambda.parts());
                for (int m = 0; m <= n; ++m) {
                    int sum = 0;
                    for (int i = n - m + 1; i <= static_cast<int>(c.size()); ++i) sum += c[static_cast<std::size_t>(i - 1)];
                    EXPECT_EQ(lambda.p_stat(m, n), sum);
                }
            }
        }
    }
    // p^n_n is |lambda| and p^n_0 is 0
    EXPECT_EQ(Partition({2, 2, 1}).p_stat(5, 5), 5);
    EXPECT_EQ(Partition({2, 2, 1}).p_stat(0, 5), 0);
    EXPECT_EQ(Partition({2, 2, 1}).p_stat(4, 5), 2);
    EXPECT_THROW(Partition({1}).p_stat(3, 2), InvalidInput);
}

TEST(Partition, RemoveCornerMatchesDefinition) {
    for (int size = 1; size <= 8; ++size) {
        for (const auto& lambda : partitions_of(size)) {
            for (int j = 0; j <= lambda.part(1) + 1; ++j) {
                const auto want = corner_oracle(lambda.parts(), j);
                const auto got = lambda.remove_corner(j);
                ASSERT_EQ(got.has_value(), want.has_value()) << lambda.to_string() << " j=" << j;
                if (got) EXPECT_EQ(got->parts(), *want);
            }
        }
    }
    EXPECT_EQ(Partition({2, 2, 1}).remove_corner(1)->parts(), (std::vector<int>{2, 2}));
    EXPECT_EQ(Partition({2, 2, 1}).remove_corner(2)->parts(), (std::vector<int>{2, 1, 1}));
    EXPECT_EQ(Partition({2, 1}).remove_corner(2)->parts(), (std::vector<int>{1, 1}));
}

TEST(Partition, ValidCornersMatchDefinition) {
    for (int n = 1; n <= 6; ++n) {
        for (int size = 1; size <= n + 1; ++size) {
            for (const auto& lambda : partitions_of(size)) {
                std::vector<int> want;
                for (int j = 0; j <= lambda.part(1); ++j) {
                    if (j == 0 && size == n + 1) continue;
                    if (corner_oracle(lambda.parts(), j)) want.push_back(j);
                }
                EXPECT_EQ(lambda.valid_corners(n), want) << n << " " << lambda.to_string();
            }
        }
    }
    EXPECT_EQ(Partition({2, 2, 1}).valid_corners(5), (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(Partition({2, 1}).valid_corners(2), (std::vector<int>{1, 2}));
    EXPECT_THROW(Partition({3}).valid_corners(1), InvalidInput);
}

// The leading entries of D_{n,lambda}, found by exhaustive search, are
// exactly lambda'_{j+1} over the corners whose branch is nonempty.
TEST(Partition, CornersExplainLeadingEntriesOfD) {
    for (int n = 2; n <= 5; ++n) {
        for (int size = 1; size <= n + 1; ++size) {
            for (const auto& lambda : partitions_of(size)) {
                std::set<int> seen;
                for (const auto& alpha : build_D_direct(n, lambda)) seen.insert(alpha.front());
                std::set<int> predicted;
                const auto c = lambda.conjugate();
                for (int j : lambda.valid_corners(n)) {
                    const Partition child = *lambda.remove_corner(j);
                    if (!child.empty() && !build_D_direct(n - 1, child).empty()) predicted.insert(c.part(j + 1));
                }
                EXPECT_EQ(seen, predicted) << n << " " << lambda.to_string();
            }
        }
    }
}
