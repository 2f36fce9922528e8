#include <gtest/gtest.h>

#include <fstream>

#include "griffin/container.hpp"
#include "griffin/errors.hpp"
#include "griffin/io.hpp"
#include "oracles.hpp"

using namespace griffin;

namespace {

const Partition kLambda{3, 2, 2, 1};

// The running example: n = 11, lambda = (3,2,2,1).
ContainerDiagram sigma() {
    return ContainerDiagram::from_cells(kLambda,
                                        {{1, 1, 4}, {1, 3, 6}, {1, 4, 9}, {2, 1, 3}, {2, 2, 8}, {2, 3, 1}, {3, 1, 2}},
                                        {{11, 1}, {10, 3}, {7, 3}, {5, 5}});
}

ContainerDiagram gamma() {
    return ContainerDiagram::from_cells(kLambda,
                                        {{2, 1, 8}, {3, 1, 2}, {1, 2, 9}, {2, 2, 3}, {1, 3, 6}, {2, 3, 1}, {1, 4, 4}},
                                        {{11, 2}, {10, 2}, {7, 3}, {5, 4}});
}

std::vector<std::vector<int>> columns_of(const ContainerDiagram& d) {
    std::vector<std::vector<int>> out;
    for (int c = 1; c <= d.column_count(); ++c) out.push_back(d.column(c));
    return out;
}

}  // namespace

TEST(Container, RunningExampleCode) {
    const auto s = sigma();
    EXPECT_EQ(s.n(), 11);
    EXPECT_EQ(s.empty_box_count(), 1);
    EXPECT_EQ(s.box_value(1, 2), 0);
    EXPECT_TRUE(s.is_floating(5));
    EXPECT_EQ(s.column_of(5), 5);
    EXPECT_EQ(code(s), (WeakComposition{1, 0, 1, 3, 4, 2, 3, 0, 0, 2, 1}));
}

TEST(Container, GammaCode) {
    EXPECT_EQ(code(gamma()), (WeakComposition{1, 0, 0, 1, 3, 1, 2, 0, 0, 1, 1}));
}

TEST(Container, DiagramFileMatchesExample) {
    std::ifstream file(GRIFFIN_TEST_DATA "/container_example.json");
    ASSERT_TRUE(file);
    const ContainerDiagram d = diagram_from_json(Json::parse(file));
    EXPECT_EQ(d, sigma());
    EXPECT_EQ(diagram_from_json(diagram_to_json(d)), d);
}

TEST(Container, InsertionStepOfRunningExample) {
    // After inserting 1, 2, 3 the arrangement is (2,4,3,1,5,6,7,...).
    const ContainerDiagram partial(kLambda, {{2, 3}, {}, {1}});
    EXPECT_EQ(column_priority(partial, 7), (std::vector<int>{2, 4, 3, 1, 5, 6, 7}));
    // alpha_4 = 3 sends 4 to c_4 = 1
    const auto full = code_inv({1, 0, 1, 3, 4, 2, 3, 0, 0, 2, 1}, kLambda);
    EXPECT_EQ(full.column_of(4), 1);
    EXPECT_EQ(full, sigma());
}

TEST(Container, FromCellsRejectsBadDiagrams) {
    const Partition lambda{2, 1};
    // number above an empty box
    EXPECT_THROW(ContainerDiagram::from_cells(lambda, {{1, 1, 2}}, {{1, 2}}), InvalidInput);
    // increasing downward
    EXPECT_THROW(ContainerDiagram::from_cells(lambda, {{1, 1, 1}, {2, 1, 2}}, {}), InvalidInput);
    // box outside the diagram
    EXPECT_THROW(ContainerDiagram::from_cells(lambda, {{3, 1, 1}}, {{2, 1}}), InvalidInput);
    // missing number
    EXPECT_THROW(ContainerDiagram(lambda, {{1}, {3}}), InvalidInput);
}

TEST(Container, CodeMatchesOracleOnAllSmallDiagrams) {
    for (int n = 1; n <= 5; ++n) {
        for (int size = 1; size <= n + 1; ++size) {
            for (const auto& lambda : partitions_of(size)) {
                const int max_col = lambda.length() + 2;
                oracle::each_assignment(n, max_col, [&](const std::vector<std::vector<int>>& cols) {
                    const ContainerDiagram d(lambda, cols);
                    const auto want = oracle::code(oracle::make_grid(lambda.parts(), cols), n);
                    ASSERT_EQ(code(d), want) << d.render();
                });
            }
        }
    }
}

TEST(Container, InsertionGivesCodePositions) {
    // Putting t at column c_p yields code entry p - 1.
    const Partition lambda{2, 2, 1};
    oracle::each_assignment(3, 4, [&](const std::vector<std::vector<int>>& cols) {
        const ContainerDiagram partial(lambda, cols);
        const auto order = column_priority(partial, 6);
        for (int p = 1; p <= 6; ++p) {
            auto next = cols;
            next.resize(std::max<std::size_t>(next.size(), static_cast<std::size_t>(order[static_cast<std::size_t>(p - 1)])));
            next[static_cast<std::size_t>(order[static_cast<std::size_t>(p - 1)] - 1)].push_back(4);
            const auto c = oracle::code(oracle::make_grid(lambda.parts(), next), 4);
            EXPECT_EQ(c[3], p - 1);
        }
    });
}

TEST(Container, SmallBijection) {
    const Partition lambda{2, 1};
    for (const auto& alpha : oracle::box(3, 4)) {
        EXPECT_EQ(code(code_inv(alpha, lambda)), alpha);
    }
    for (const auto& d : enumerate_diagrams(3, lambda, 4)) EXPECT_EQ(code_inv(code(d), lambda), d);
}

TEST(Container, EnumerateDiagramsCount) {
    // Every assignment of n numbers to m columns is a diagram.
    EXPECT_EQ(enumerate_diagrams(3, Partition{2, 1}, 4).size(), 64u);
    const auto columns = columns_of(gamma());
    EXPECT_EQ(ContainerDiagram(kLambda, columns), gamma());
}

TEST(Container, RenderMarksEmptyBox) {
    const std::string pic = sigma().render();
    EXPECT_NE(pic.find('.'), std::string::npos);
    EXPECT_NE(pic.find("11"), std::string::npos);
}
