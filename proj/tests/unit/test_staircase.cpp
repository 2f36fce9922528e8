#include <gtest/gtest.h>

#include "griffin/container.hpp"
#include "griffin/errors.hpp"
#include "griffin/staircase.hpp"
#include "oracles.hpp"

using namespace griffin;

namespace {

std::set<WeakComposition> staircases_oracle(int n, const Partition& lambda, int s) {
    std::vector<oracle::Comp> parts;
    for (int k : oracle::conjugate(lambda.parts())) {
        oracle::Comp rho;
        for (int v = k - 1; v >= 0; --v) rho.push_back(v);
        parts.push_back(rho);
    }
    for (int i = 0; i < n - lambda.size(); ++i) parts.push_back({s - 1});
    return oracle::shuffles(parts);
}

bool dominated(const WeakComposition& a, const std::set<WeakComposition>& tops) {
    for (const auto& t : tops) {
        bool le = true;
        for (std::size_t i = 0; i < a.size(); ++i) le = le && a[i] <= t[i];
        if (le) return true;
    }
    return false;
}

}  // namespace

TEST(Staircase, PowerBoundParsing) {
    EXPECT_EQ(parse_power_bound("inf"), kInfinite);
    EXPECT_EQ(parse_power_bound("3"), 3);
    EXPECT_THROW(parse_power_bound("0"), InvalidInput);
    EXPECT_THROW(parse_power_bound("three"), InvalidInput);
    EXPECT_EQ(power_bound_to_string(kInfinite), "inf");
}

TEST(Staircase, ReversedStaircase) {
    EXPECT_EQ(reversed_staircase(3), (WeakComposition{2, 1, 0}));
    EXPECT_TRUE(reversed_staircase(0).empty());
}

TEST(Staircase, ShufflesMatchMultisetPermutations) {
    const std::vector<std::vector<WeakComposition>> cases = {
        {{1, 0}, {0}},
        {{2, 1, 0}, {1, 0}, {0}},
        {{1, 0}, {1, 0}},
        {{3}, {3}, {3}},
        {{2, 1, 0}, {2, 1, 0}, {5}},
    };
    for (const auto& parts : cases) EXPECT_EQ(shuffles(parts), oracle::shuffles(parts));
    // C(5; 2, 2, 1) interleavings, all distinct here
    EXPECT_EQ(shuffles({{1, 0}, {3, 2}, {7}}).size(), 30u);
}

TEST(Staircase, StaircasesMatchDefinition) {
    for (int n = 1; n <= 5; ++n) {
        for (int size = 1; size <= n; ++size) {
            for (const auto& lambda : partitions_of(size)) {
                for (int s = lambda.length(); s <= lambda.length() + 2; ++s) {
                    EXPECT_EQ(staircases(n, lambda, s), staircases_oracle(n, lambda, s));
                }
            }
        }
    }
    EXPECT_THROW(staircases(2, Partition{1, 1, 1}, 3), InvalidInput);
    EXPECT_THROW(staircases(3, Partition{1, 1}, 1), InvalidInput);
}

TEST(Staircase, FiniteMembershipMatchesDominance) {
    for (int n = 1; n <= 4; ++n) {
        for (int size = 1; size <= n; ++size) {
            for (const auto& lambda : partitions_of(size)) {
                for (int s = lambda.length(); s <= 4; ++s) {
                    const auto tops = staircases_oracle(n, lambda, s);
                    std::set<WeakComposition> want;
                    for (const auto& alpha : oracle::box(n, std::max(n, s))) {
                        const bool in = dominated(alpha, tops);
                        EXPECT_EQ(in_C(alpha, lambda, s), in);
                        if (in) want.insert(alpha);
                    }
                    EXPECT_EQ(enumerate_C(n, lambda, s), want);
                }
            }
        }
    }
}

// C_{n,lambda,inf} is the union of the C_{n,lambda,s}: a composition lies in
// it iff it lies under some staircase with a large enough s.
TEST(Staircase, InfiniteMembershipIsUnionOverS) {
    for (int n = 1; n <= 4; ++n) {
        for (int size = 1; size <= n + 1; ++size) {
            for (const auto& lambda : partitions_of(size)) {
                for (const auto& alpha : oracle::box(n, n + 1)) {
                    const int s = std::max(lambda.length(), *std::max_element(alpha.begin(), alpha.end()) + 1);
                    const bool finite = size <= n && dominated(alpha, staircases_oracle(n, lambda, s));
                    EXPECT_EQ(in_C(alpha, lambda, kInfinite), finite) << composition_to_string(alpha);
                }
            }
        }
    }
}

TEST(Staircase, EnumerateAIsSortedExponents) {
    const auto a = enumerate_A(3, Partition{1, 1, 1}, 3);
    ASSERT_EQ(a.size(), 6u);
    EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
    for (const auto& e : a) EXPECT_TRUE(e.dominated_by({2, 1, 0}));
    EXPECT_TRUE(enumerate_A(2, Partition{2, 1}, 2).empty());
}

TEST(Staircase, TanisakiCountsAreMultinomial) {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            long want = oracle::factorial(n);
            for (int p : lambda.parts()) want /= oracle::factorial(p);
            EXPECT_EQ(static_cast<long>(enumerate_A(n, lambda, n).size()), want) << lambda.to_string();
        }
    }
}
