#include <gtest/gtest.h>

#include "griffin/buchberger.hpp"
#include "griffin/construct.hpp"
#include "griffin/dset.hpp"
#include "griffin/errors.hpp"
#include "oracles.hpp"

using namespace griffin;

namespace {

GroebnerElement find_target(const std::vector<GroebnerElement>& g, const WeakComposition& target) {
    for (const auto& e : g) {
        if (e.target == target) return e;
    }
    throw std::runtime_error("no element with target " + composition_to_string(target));
}

Polynomial e(int d, IndexSet s, int n) { return oracle::elementary(d, s, n); }

Polynomial x(int n, std::vector<int> exps) { return Polynomial::monomial(ExponentVector(std::move(exps))); }

std::map<GeneratorKey, Polynomial> combo(std::initializer_list<std::pair<GeneratorKey, Polynomial>> items) {
    return {items.begin(), items.end()};
}

}  // namespace

TEST(Construct, BaseCases) {
    const auto g1 = build_G(1, Partition{1});
    ASSERT_EQ(g1.size(), 1u);
    EXPECT_EQ(g1[0].poly.value, Polynomial::variable(1, 1));
    for (const auto& lambda : {Partition{2}, Partition{1, 1}}) {
        const auto g = build_G(1, lambda);
        ASSERT_EQ(g.size(), 1u);
        EXPECT_EQ(g[0].poly.value, Polynomial::constant(1, 1));
    }
    EXPECT_TRUE(build_G(4, Partition{}).empty());
    EXPECT_THROW(build_G(2, Partition{2, 2}), InvalidInput);
}

TEST(Construct, WorkedChain) {
    const auto& g2 = find_target(build_G(2, Partition{2, 1}), {0, 0});
    EXPECT_EQ(g2.poly.value, Polynomial::constant(2, 1));
    EXPECT_EQ(g2.poly.combination, combo({{{0, {1, 2}}, Polynomial::constant(2, 1)}}));

    const auto& g3 = find_target(build_G(3, Partition{2, 1}), {2, 0, 0});
    EXPECT_EQ(g3.poly.value, x(3, {2, 0, 0}));
    EXPECT_EQ(g3.poly.combination, combo({{{1, {1, 2, 3}}, x(3, {1, 0, 0})},
                                          {{2, {1, 2, 3}}, -Polynomial::constant(3, 1)},
                                          {{2, {2, 3}}, Polynomial::constant(3, 1)}}));

    const auto& g4 = find_target(build_G(4, Partition{2, 1, 1}), {1, 2, 0, 0});
    EXPECT_EQ(g4.poly.value, x(4, {1, 1, 0, 0}) * e(1, {1, 2, 3, 4}, 4) - x(4, {1, 0, 0, 0}) * e(2, {1, 2, 3, 4}, 4) +
                                 x(4, {1, 0, 0, 0}) * e(2, {3, 4}, 4));
    EXPECT_EQ(g4.poly.combination, combo({{{1, {1, 2, 3, 4}}, x(4, {1, 1, 0, 0})},
                                          {{2, {1, 2, 3, 4}}, -x(4, {1, 0, 0, 0})},
                                          {{3, {1, 3, 4}}, Polynomial::constant(4, 1)}}));

    const auto& g5 = find_target(build_G(5, Partition{2, 2, 1}), {0, 1, 2, 0, 0});
    const Polynomial f = x(5, {0, 1, 1, 0, 0}) * e(1, {1, 2, 3, 4, 5}, 5) -
                         x(5, {0, 1, 0, 0, 0}) * e(2, {1, 2, 3, 4, 5}, 5) + e(3, {1, 2, 4, 5}, 5);
    EXPECT_EQ(g5.poly.value, f);
    EXPECT_EQ(g5.poly.combination, combo({{{1, {1, 2, 3, 4, 5}}, x(5, {0, 1, 1, 0, 0})},
                                          {{2, {1, 2, 3, 4, 5}}, -x(5, {0, 1, 0, 0, 0})},
                                          {{3, {1, 2, 4, 5}}, Polynomial::constant(5, 1)}}));
    EXPECT_EQ(g5.poly.value.leading_term(MonomialOrder::grevlex()).exponent, ExponentVector({0, 1, 2, 0, 0}));
}

// The lifted polynomial is x_1^a e_d(S + {1}) or x_1^a e_d(S), and its
// certificate expands back to it.
TEST(Construct, LiftIsDivisibleByPowerOfX1) {
    for (int n = 2; n <= 5; ++n) {
        for (int size = 1; size <= n + 1; ++size) {
            for (const auto& lambda : partitions_of(size)) {
                const auto conj = lambda.conjugate();
                for (int j : lambda.valid_corners(n)) {
                    const Partition child = *lambda.remove_corner(j);
                    if (child.empty()) continue;
                    const int a = conj.part(j + 1);
                    for (const auto& key : generator_keys(n - 1, child)) {
                        GeneratorKey up{key.d, {}};
                        for (int i : key.set) up.set.push_back(i + 1);
                        const TrackedPolynomial f = lift_F(up, j, n, lambda);
                        IndexSet with_one{1};
                        with_one.insert(with_one.end(), up.set.begin(), up.set.end());
                        const bool big = static_cast<int>(up.set.size()) >= n - j;
                        const Polynomial want =
                            Polynomial::monomial(ExponentVector::unit(n, 1, a)) * e(up.d, big ? with_one : up.set, n);
                        EXPECT_EQ(f.value, want);
                        EXPECT_TRUE(certify_membership(f, lambda));
                    }
                }
            }
        }
    }
}

TEST(Construct, LiftRejectsBadKeys) {
    EXPECT_THROW(lift_F({1, {1, 2}}, 1, 3, Partition{2, 1}), InvalidInput);
    EXPECT_THROW(lift_F({0, {2}}, 1, 3, Partition{3}), InvalidInput);
}

TEST(Construct, ElementsSatisfyInvariants) {
    for (int n = 1; n <= 5; ++n) {
        for (int size = 1; size <= n + 1; ++size) {
            for (const auto& lambda : partitions_of(size)) {
                const auto g = build_G(n, lambda);
                CompositionSet targets;
                for (const auto& el : g) {
                    EXPECT_NO_THROW(check_element(el, lambda));
                    targets.insert(el.target);
                }
                EXPECT_EQ(targets, build_D_direct(n, lambda));
            }
        }
    }
}

TEST(Construct, CorruptedElementFailsChecks) {
    auto g = build_G(4, Partition{2, 1});
    auto& victim = g.front();
    const Term lead = victim.poly.value.leading_term(MonomialOrder::grevlex());
    victim.poly.value += Polynomial::monomial(lead.exponent, 1);
    EXPECT_FALSE(certify(victim.poly));
    EXPECT_THROW(check_element(victim, Partition{2, 1}), InvariantViolation);
}

TEST(Construct, PowersAppendedOnce) {
    // x_1^2 is already in G_{3,(2,1)}
    const auto g = build_G_s(3, Partition{2, 1}, 2);
    EXPECT_EQ(g.size(), build_G(3, Partition{2, 1}).size() + 2);
    for (int i = 1; i <= 3; ++i) {
        EXPECT_EQ(std::count(g.begin(), g.end(), Polynomial::monomial(ExponentVector::unit(3, i, 2))), 1);
    }
    EXPECT_THROW(build_G_s(3, Partition{1, 1, 1}, 2), InvalidInput);
    EXPECT_EQ(build_G_s(3, Partition{2, 1}, kInfinite).size(), build_G(3, Partition{2, 1}).size());
}
