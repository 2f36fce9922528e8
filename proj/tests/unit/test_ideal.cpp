#include <gtest/gtest.h>

#include "griffin/errors.hpp"
#include "griffin/ideal.hpp"
#include "oracles.hpp"

using namespace griffin;

namespace {

int tail_sum(const Partition& lambda, int m, int n) {
    const auto c = oracle::conjugate(lambda.parts());
    int sum = 0;
    for (int i = n - m + 1; i <= static_cast<int>(c.size()); ++i) sum += c[static_cast<std::size_t>(i - 1)];
    return sum;
}

}  // namespace

TEST(Ideal, KeysMatchDefinition) {
    for (int n = 1; n <= 5; ++n) {
        for (int size = 1; size <= n + 1; ++size) {
            for (const auto& lambda : partitions_of(size)) {
                std::set<std::pair<int, IndexSet>> want;
                for (unsigned mask = 1; mask < (1u << n); ++mask) {
                    IndexSet s;
                    for (int i = 0; i < n; ++i) {
                        if (mask & (1u << i)) s.push_back(i + 1);
                    }
                    const int k = static_cast<int>(s.size());
                    for (int d = 0; d <= k; ++d) {
                        if (d > k - tail_sum(lambda, k, n)) want.insert({d, s});
                    }
                }
                std::set<std::pair<int, IndexSet>> got;
                for (const auto& key : generator_keys(n, lambda)) {
                    got.insert({key.d, key.set});
                    EXPECT_TRUE(is_generator_key(key, n, lambda));
                }
                EXPECT_EQ(got, want) << n << " " << lambda.to_string();
            }
        }
    }
}

TEST(Ideal, KeyOrdering) {
    const auto keys = generator_keys(3, Partition{1, 1, 1});
    for (std::size_t i = 1; i < keys.size(); ++i) {
        const auto& a = keys[i - 1];
        const auto& b = keys[i];
        if (a.set.size() != b.set.size()) {
            EXPECT_GT(a.set.size(), b.set.size());
        } else if (a.set != b.set) {
            EXPECT_LT(a.set, b.set);
        } else {
            EXPECT_LT(a.d, b.d);
        }
    }
    EXPECT_EQ(keys.front().to_string(), "e_1({1,2,3})");
}

TEST(Ideal, CoinvariantGenerators) {
    // The full set contributes e_1, e_2, e_3.
    const auto keys = generator_keys(3, Partition{1, 1, 1});
    int full = 0;
    for (const auto& k : keys) full += k.set == IndexSet{1, 2, 3};
    EXPECT_EQ(full, 3);
}

TEST(Ideal, UnitIdealHasConstant) {
    bool has_one = false;
    for (const auto& p : generators(2, Partition{2, 1}, kInfinite)) has_one = has_one || p == Polynomial::constant(2, 1);
    EXPECT_TRUE(has_one);
}

TEST(Ideal, PowersAppended) {
    const auto gens = generators(3, Partition{2}, 2);
    const std::size_t k = generator_keys(3, Partition{2}).size();
    ASSERT_EQ(gens.size(), k + 3);
    EXPECT_EQ(gens[k], Polynomial::monomial({2, 0, 0}));
    EXPECT_EQ(gens[k + 2], Polynomial::monomial({0, 0, 2}));
    EXPECT_THROW(generators(3, Partition{1, 1, 1}, 2), InvalidInput);
}

TEST(Ideal, CertifyDetectsTampering) {
    const GeneratorKey key{1, {1, 2, 3}};
    TrackedPolynomial t = TrackedPolynomial::generator(key, 3);
    EXPECT_TRUE(certify(t));
    EXPECT_TRUE(certify_membership(t, Partition{1, 1, 1}));
    t.value += Polynomial::monomial({1, 0, 0});
    EXPECT_FALSE(certify(t));

    TrackedPolynomial half = TrackedPolynomial::generator(key, 3);
    half.combination.begin()->second = Polynomial::constant(3, Rational(1, 2));
    half.value = half.expand();
    EXPECT_TRUE(certify(half));
    EXPECT_FALSE(certify_membership(half, Partition{1, 1, 1}));

    TrackedPolynomial bad_key{Polynomial(3), {{GeneratorKey{1, {4}}, Polynomial::constant(3, 1)}}};
    EXPECT_FALSE(certify(bad_key));
}
