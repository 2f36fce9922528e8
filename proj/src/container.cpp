#include "griffin/container.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <sstream>
#include <tuple>

#include "griffin/errors.hpp"

namespace griffin {

namespace {

const std::vector<int> kNoNumbers;
constexpr int kEmptyRank = INT_MAX;

}  // namespace

ContainerDiagram::ContainerDiagram(Partition lambda, std::vector<std::vector<int>> columns)
    : lambda_(std::move(lambda)), columns_(std::move(columns)) {
    std::vector<int> seen;
    for (auto& col : columns_) {
        std::sort(col.begin(), col.end());
        seen.insert(seen.end(), col.begin(), col.end());
    }
    while (!columns_.empty() && columns_.back().empty()) columns_.pop_back();
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (seen[i] != static_cast<int>(i) + 1) {
            throw InvalidInput("diagram must contain each of 1..n exactly once");
        }
    }
    n_ = static_cast<int>(seen.size());
}

ContainerDiagram ContainerDiagram::from_cells(Partition lambda, const std::vector<BoxEntry>& boxes,
                                              const std::vector<FloatEntry>& floats) {
    int max_col = lambda.length();
    for (const auto& f : floats) {
        if (f.col < 1) throw InvalidInput("float column must be >= 1");
        max_col = std::max(max_col, f.col);
    }
    // Per column: box values by row (0 = empty) and floats.
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(max_col));
    for (int c = 1; c <= max_col; ++c) {
        grid[static_cast<std::size_t>(c - 1)].assign(static_cast<std::size_t>(lambda.part(c)), 0);
    }
    for (const auto& b : boxes) {
        if (b.col < 1 || b.col > lambda.length() || b.row < 1 || b.row > lambda.part(b.col)) {
            throw InvalidInput("box (" + std::to_string(b.row) + "," + std::to_string(b.col) +
                               ") is outside the Young diagram");
        }
        int& cell = grid[static_cast<std::size_t>(b.col - 1)][static_cast<std::size_t>(b.row - 1)];
        if (cell != 0) throw InvalidInput("two numbers in one box");
        if (b.value < 1) throw InvalidInput("box values must be positive");
        cell = b.value;
    }
    std::vector<std::vector<int>> float_cols(static_cast<std::size_t>(max_col));
    for (const auto& f : floats) {
        if (f.value < 1) throw InvalidInput("float values must be positive");
        float_cols[static_cast<std::size_t>(f.col - 1)].push_back(f.value);
    }

    std::vector<std::vector<int>> columns(static_cast<std::size_t>(max_col));
    for (int c = 1; c <= max_col; ++c) {
        const auto& cells = grid[static_cast<std::size_t>(c - 1)];
        auto& out = columns[static_cast<std::size_t>(c - 1)];
        // Walk bottom to top; once an empty box is met nothing may follow.
        bool seen_empty = false;
        for (int row = static_cast<int>(cells.size()); row >= 1; --row) {
            const int v = cells[static_cast<std::size_t>(row - 1)];
            if (v == 0) {
                seen_empty = true;
                continue;
            }
            if (seen_empty) {
                throw InvalidInput("a number sits above an empty box in column " + std::to_string(c));
            }
            out.push_back(v);
        }
        const auto& fl = float_cols[static_cast<std::size_t>(c - 1)];
        if (!fl.empty() && seen_empty) {
            throw InvalidInput("a number floats above an empty box in column " + std::to_string(c));
        }
        std::vector<int> sorted_floats = fl;
        std::sort(sorted_floats.begin(), sorted_floats.end());
        out.insert(out.end(), sorted_floats.begin(), sorted_floats.end());
        for (std::size_t k = 1; k < out.size(); ++k) {
            if (out[k] <= out[k - 1]) {
                throw InvalidInput("column " + std::to_string(c) +
                                   " is not strictly decreasing from top to bottom");
            }
        }
    }
    return ContainerDiagram(std::move(lambda), std::move(columns));
}

const std::vector<int>& ContainerDiagram::column(int col) const {
    if (col < 1 || col > column_count()) return kNoNumbers;
    return columns_[static_cast<std::size_t>(col - 1)];
}

int ContainerDiagram::box_value(int row, int col) const {
    if (!has_box(row, col)) throw InvalidInput("no such box");
    const auto idx = static_cast<std::size_t>(column_height(col) - row);
    const auto& c = column(col);
    return idx < c.size() ? c[idx] : 0;
}

int ContainerDiagram::box_rank(int row, int col) const {
    const int v = box_value(row, col);
    return v == 0 ? kEmptyRank : v;
}

int ContainerDiagram::empty_box_count() const {
    int total = 0;
    for (int c = 1; c <= lambda_.length(); ++c) {
        total += std::max(0, column_height(c) - static_cast<int>(column(c).size()));
    }
    return total;
}

int ContainerDiagram::column_of(int value) const {
    for (int c = 1; c <= column_count(); ++c) {
        const auto& col = column(c);
        if (std::binary_search(col.begin(), col.end(), value)) return c;
    }
    throw InvalidInput("number " + std::to_string(value) + " is not in the diagram");
}

bool ContainerDiagram::is_floating(int value) const {
    const int c = column_of(value);
    const auto& col = column(c);
    const auto pos = std::lower_bound(col.begin(), col.end(), value) - col.begin();
    return pos >= column_height(c);
}

std::vector<BoxEntry> ContainerDiagram::boxes() const {
    std::vector<BoxEntry> out;
    for (int c = 1; c <= column_count(); ++c) {
        const auto& col = column(c);
        const int h = column_height(c);
        for (int k = 0; k < std::min(h, static_cast<int>(col.size())); ++k) {
            out.push_back({h - k, c, col[static_cast<std::size_t>(k)]});
        }
    }
    std::sort(out.begin(), out.end(), [](const BoxEntry& a, const BoxEntry& b) {
        return std::tie(a.row, a.col) < std::tie(b.row, b.col);
    });
    return out;
}

std::vector<FloatEntry> ContainerDiagram::floats() const {
    std::vector<FloatEntry> out;
    for (int c = 1; c <= column_count(); ++c) {
        const auto& col = column(c);
        for (std::size_t k = static_cast<std::size_t>(column_height(c)); k < col.size(); ++k) {
            out.push_back({col[k], c});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const FloatEntry& a, const FloatEntry& b) { return a.value > b.value; });
    return out;
}

std::string ContainerDiagram::render() const {
    const int width = std::max(lambda_.length(), column_count());
    int float_rows = 0;
    for (int c = 1; c <= width; ++c) {
        float_rows = std::max(float_rows,
                              static_cast<int>(column(c).size()) - column_height(c));
    }
    const int box_rows = lambda_.part(1);
    const int cell = std::max(2, static_cast<int>(std::to_string(n_).size())) + 1;
    auto pad = [cell](const std::string& s) {
        return std::string(static_cast<std::size_t>(cell) - s.size(), ' ') + s;
    };
    std::ostringstream os;
    // Float level k = 1 sits directly on the column.
    for (int level = float_rows; level >= 1; --level) {
        std::string line;
        for (int c = 1; c <= width; ++c) {
            const auto& col = column(c);
            const auto idx = static_cast<std::size_t>(column_height(c) + level - 1);
            line += " " + (idx < col.size() ? pad(std::to_string(col[idx])) : pad(""));
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    for (int row = 1; row <= box_rows; ++row) {
        std::string line;
        for (int c = 1; c <= width && has_box(row, c); ++c) {
            const int v = box_value(row, c);
            line += "[" + pad(v == 0 ? "." : std::to_string(v)).substr(1) + "]";
        }
        os << line << '\n';
    }
    return os.str();
}

WeakComposition code(const ContainerDiagram& sigma) {
    const int n = sigma.n();
    WeakComposition out(static_cast<std::size_t>(n), 0);
    const int width = sigma.lambda().length();
    for (int c = 1; c <= sigma.column_count(); ++c) {
        const auto& col = sigma.column(c);
        const int h = sigma.column_height(c);
        for (int k = 0; k < static_cast<int>(col.size()); ++k) {
            const int i = col[static_cast<std::size_t>(k)];
            int count = 0;
            if (k < h) {
                const int row = h - k;
                for (int c2 = c + 1; c2 <= width && sigma.has_box(row, c2); ++c2) {
                    if (sigma.box_rank(row, c2) > i) ++count;
                }
                for (int c2 = 1; c2 < c; ++c2) {
                    if (sigma.has_box(row + 1, c2) && sigma.box_rank(row + 1, c2) > i) ++count;
                }
            } else {
                count = c - 1;
                for (int c2 = c + 1; c2 <= width; ++c2) {
                    if (sigma.box_rank(1, c2) > i) ++count;
                }
            }
            out[static_cast<std::size_t>(i - 1)] = count;
        }
    }
    return out;
}

namespace {

// Columns with an empty box, deepest bottom-most empty box first, ties to
// the larger column index.
std::vector<int> columns_with_room(const Partition& lambda,
                                   const std::vector<std::vector<int>>& columns) {
    std::vector<std::pair<int, int>> keyed;  // (bottom-most empty row, column)
    for (int c = 1; c <= lambda.length(); ++c) {
        const int filled = c <= static_cast<int>(columns.size())
                               ? static_cast<int>(columns[static_cast<std::size_t>(c - 1)].size())
                               : 0;
        const int h = lambda.part(c);
        if (filled < h) keyed.emplace_back(h - filled, c);
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a > b; });
    std::vector<int> out;
    out.reserve(keyed.size());
    for (const auto& [row, c] : keyed) out.push_back(c);
    return out;
}

bool column_is_full(const Partition& lambda, const std::vector<std::vector<int>>& columns, int c) {
    const int filled = c <= static_cast<int>(columns.size())
                           ? static_cast<int>(columns[static_cast<std::size_t>(c - 1)].size())
                           : 0;
    return filled >= lambda.part(c);
}

// Column c_{p+1} of the arrangement.
int priority_column(const Partition& lambda, const std::vector<std::vector<int>>& columns, int p) {
    const std::vector<int> room = columns_with_room(lambda, columns);
    if (p < static_cast<int>(room.size())) return room[static_cast<std::size_t>(p)];
    int remaining = p - static_cast<int>(room.size());
    for (int c = 1;; ++c) {
        if (!column_is_full(lambda, columns, c)) continue;
        if (remaining == 0) return c;
        --remaining;
    }
}

}  // namespace

std::vector<int> column_priority(const ContainerDiagram& partial, int count) {
    std::vector<std::vector<int>> columns;
    for (int c = 1; c <= partial.column_count(); ++c) columns.push_back(partial.column(c));
    std::vector<int> out = columns_with_room(partial.lambda(), columns);
    if (static_cast<int>(out.size()) >= count) {
        out.resize(static_cast<std::size_t>(count));
        return out;
    }
    for (int c = 1; static_cast<int>(out.size()) < count; ++c) {
        if (column_is_full(partial.lambda(), columns, c)) out.push_back(c);
    }
    return out;
}

ContainerDiagram code_inv(const WeakComposition& alpha, const Partition& lambda) {
    std::vector<std::vector<int>> columns(static_cast<std::size_t>(lambda.length()));
    for (std::size_t t = 0; t < alpha.size(); ++t) {
        if (alpha[t] < 0) throw InvalidInput("weak composition entries must be non-negative");
        const int c = priority_column(lambda, columns, alpha[t]);
        if (c > static_cast<int>(columns.size())) columns.resize(static_cast<std::size_t>(c));
        columns[static_cast<std::size_t>(c - 1)].push_back(static_cast<int>(t) + 1);
    }
    return ContainerDiagram(lambda, std::move(columns));
}

std::vector<ContainerDiagram> enumerate_diagrams(int n, const Partition& lambda, int max_column) {
    if (n < 0 || max_column < 1) throw InvalidInput("bad enumeration bounds");
    std::vector<ContainerDiagram> out;
    std::vector<int> assign(static_cast<std::size_t>(n), 1);
    while (true) {
        std::vector<std::vector<int>> columns(static_cast<std::size_t>(max_column));
        for (int i = 0; i < n; ++i) {
            columns[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)] - 1)].push_back(i + 1);
        }
        out.emplace_back(lambda, std::move(columns));
        int pos = 0;
        while (pos < n && assign[static_cast<std::size_t>(pos)] == max_column) {
            assign[static_cast<std::size_t>(pos)] = 1;
            ++pos;
        }
        if (pos == n) break;
        ++assign[static_cast<std::size_t>(pos)];
    }
    return out;
}

}  // namespace griffin
