#include <gtest/gtest.h>

#include "griffin/dset.hpp"
#include "griffin/errors.hpp"
#include "griffin/staircase.hpp"
#include "oracles.hpp"

using namespace griffin;

namespace {

// D by exhaustive search over a wider column range than the library uses.
CompositionSet d_oracle(int n, const Partition& lambda) {
    CompositionSet out;
    oracle::each_assignment(n, lambda.length() + 2, [&](const std::vector<std::vector<int>>& cols) {
        const auto grid = oracle::make_grid(lambda.parts(), cols);
        if (oracle::d_conditions(grid)) out.insert(oracle::code(grid, n));
    });
    return out;
}

}  // namespace

TEST(DSet, BaseCases) {
    EXPECT_EQ(build_D(1, Partition{1}), (CompositionSet{{1}}));
    EXPECT_EQ(build_D(1, Partition{2}), (CompositionSet{{0}}));
    EXPECT_EQ(build_D(1, Partition{1, 1}), (CompositionSet{{0}}));
    EXPECT_TRUE(build_D(3, Partition{}).empty());
}

TEST(DSet, ComparablePairForThreeOne) {
    const auto d = build_D(4, Partition{3, 1});
    EXPECT_TRUE(d.count({0, 0, 0, 1}));
    EXPECT_TRUE(d.count({1, 0, 0, 1}));
    EXPECT_FALSE(minimal_elements(d).count({1, 0, 0, 1}));
}

TEST(DSet, ConditionsMatchOracle) {
    for (int n = 1; n <= 4; ++n) {
        for (int size = 1; size <= n + 1; ++size) {
            for (const auto& lambda : partitions_of(size)) {
                for (const auto& d : enumerate_diagrams(n, lambda, lambda.length() + 2)) {
                    std::vector<std::vector<int>> cols;
                    for (int c = 1; c <= d.column_count(); ++c) cols.push_back(d.column(c));
                    EXPECT_EQ(satisfies_d_conditions(d), oracle::d_conditions(oracle::make_grid(lambda.parts(), cols)));
                }
            }
        }
    }
}

TEST(DSet, DirectMatchesWiderSearch) {
    for (int n = 1; n <= 5; ++n) {
        for (int size = 1; size <= n + 1; ++size) {
            for (const auto& lambda : partitions_of(size)) {
                EXPECT_EQ(build_D_direct(n, lambda), d_oracle(n, lambda)) << n << " " << lambda.to_string();
            }
        }
    }
}

TEST(DSet, RecursionMatchesDirect) {
    for (int n = 1; n <= 5; ++n) {
        for (int size = 1; size <= n + 1; ++size) {
            for (const auto& lambda : partitions_of(size)) {
                EXPECT_EQ(build_D(n, lambda), build_D_direct(n, lambda)) << n << " " << lambda.to_string();
            }
        }
    }
}

TEST(DSet, MembersLieOutsideC) {
    for (int n = 1; n <= 5; ++n) {
        for (int size = 1; size <= n + 1; ++size) {
            for (const auto& lambda : partitions_of(size)) {
                for (const auto& alpha : build_D(n, lambda)) EXPECT_FALSE(in_C(alpha, lambda, kInfinite));
            }
        }
    }
}

TEST(DSet, DominateDownExhaustive) {
    for (int n = 1; n <= 4; ++n) {
        for (int size = 1; size <= n + 1; ++size) {
            for (const auto& lambda : partitions_of(size)) {
                const auto d = build_D(n, lambda);
                for (const auto& alpha : oracle::box(n, n + 1)) {
                    if (in_C(alpha, lambda, kInfinite)) {
                        EXPECT_THROW(dominate_down(alpha, lambda), InvalidInput);
                        continue;
                    }
                    const auto beta = dominate_down(alpha, lambda);
                    EXPECT_TRUE(d.count(beta)) << composition_to_string(alpha);
                    EXPECT_TRUE(entrywise_le(beta, alpha));
                }
            }
        }
    }
}

TEST(DSet, DominateDownRunningExample) {
    const Partition lambda{3, 2, 2, 1};
    const WeakComposition alpha{1, 0, 1, 3, 4, 2, 3, 0, 0, 2, 1};
    const auto beta = dominate_down(alpha, lambda);
    EXPECT_TRUE(entrywise_le(beta, alpha));
    EXPECT_TRUE(satisfies_d_conditions(code_inv(beta, lambda)));
}
