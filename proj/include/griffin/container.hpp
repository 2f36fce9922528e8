#pragma once

#include <compare>
#include <string>
#include <vector>

#include "griffin/exponent.hpp"
#include "griffin/partition.hpp"

namespace griffin {

struct BoxEntry {
    int row;  // 1 = top
    int col;  // 1 = left
    int value;
    friend bool operator==(const BoxEntry&, const BoxEntry&) = default;
};

struct FloatEntry {
    int value;
    int col;
    friend bool operator==(const FloatEntry&, const FloatEntry&) = default;
};

// Young diagram of lambda' filled with 1..n, some numbers floating above
// the columns. Column c has lambda_c boxes (rows 1..lambda_c, row 1 on top).
//
// Stored column by column, each column bottom to top. Because numbers
// strictly decrease downwards and nothing may sit above an empty box, a
// column is determined by the set of numbers in it: the smallest fill the
// boxes from the bottom, the rest float. Any assignment of numbers to
// columns is therefore a valid diagram.
class ContainerDiagram {
public:
    ContainerDiagram() = default;
    // columns[c] holds the numbers of column c + 1 in any order. Throws
    // InvalidInput unless the union is exactly {1, ..., n}.
    ContainerDiagram(Partition lambda, std::vector<std::vector<int>> columns);

    // Builds from explicit cell contents and checks the container conditions.
    static ContainerDiagram from_cells(Partition lambda, const std::vector<BoxEntry>& boxes,
                                       const std::vector<FloatEntry>& floats);

    const Partition& lambda() const { return lambda_; }
    int n() const { return n_; }
    // Columns beyond this index are empty.
    int column_count() const { return static_cast<int>(columns_.size()); }
    int column_height(int col) const { return lambda_.part(col); }
    // Numbers in column `col`, bottom to top.
    const std::vector<int>& column(int col) const;

    bool has_box(int row, int col) const { return row >= 1 && row <= column_height(col); }
    // Number in the box, or 0 when the box is empty. Requires has_box.
    int box_value(int row, int col) const;
    // Like box_value but empty boxes read as a number larger than any filling.
    int box_rank(int row, int col) const;

    int empty_box_count() const;
    // Column containing `value` and whether it floats there.
    int column_of(int value) const;
    bool is_floating(int value) const;

    std::vector<BoxEntry> boxes() const;
    std::vector<FloatEntry> floats() const;

    // Multi-line picture; "." marks an empty box.
    std::string render() const;

    friend bool operator==(const ContainerDiagram& a, const ContainerDiagram& b) {
        return a.lambda_ == b.lambda_ && a.columns_ == b.columns_;
    }
    friend auto operator<=>(const ContainerDiagram& a, const ContainerDiagram& b) {
        if (auto c = a.lambda_ <=> b.lambda_; c != 0) return c;
        return a.columns_ <=> b.columns_;
    }

private:
    Partition lambda_;
    int n_ = 0;
    std::vector<std::vector<int>> columns_;
};

// Coinversion code.
WeakComposition code(const ContainerDiagram& sigma);

// Inverse of `code` by insertion of 1, ..., n. Total on weak compositions.
ContainerDiagram code_inv(const WeakComposition& alpha, const Partition& lambda);

// First `count` entries of the column arrangement c_1, c_2, ... used when
// inserting the next number into `partial`.
std::vector<int> column_priority(const ContainerDiagram& partial, int count);

// Every container diagram for (n, lambda) whose numbers stay in columns
// 1..max_column.
std::vector<ContainerDiagram> enumerate_diagrams(int n, const Partition& lambda, int max_column);

}  // namespace griffin
