#include "griffin/dset.hpp"

#include <algorithm>
#include <climits>
#include <mutex>
#include <utility>

#include "griffin/errors.hpp"

namespace griffin {

namespace {

constexpr int kInf = INT_MAX;

int rank_of(int v) { return v == 0 ? kInf : v; }

void check_size_range(int n, const Partition& lambda) {
    if (n < 1) throw InvalidInput("n must be positive");
    if (lambda.size() < 1 || lambda.size() > n + 1) {
        throw InvalidInput("need 1 <= |lambda| <= n + 1, got |lambda| = " +
                           std::to_string(lambda.size()) + ", n = " + std::to_string(n));
    }
}

// Mutable cell-level view used by the domination steps.
struct Grid {
    Partition lambda;
    std::vector<std::vector<int>> cells;   // [col][row], 0 = empty
    std::vector<std::vector<int>> floats;  // [col], ascending

    explicit Grid(const ContainerDiagram& d) : lambda(d.lambda()) {
        const int width = std::max(d.column_count(), lambda.length() + 1);
        cells.resize(static_cast<std::size_t>(width));
        floats.resize(static_cast<std::size_t>(width));
        for (int c = 1; c <= width; ++c) {
            auto& col = cells[static_cast<std::size_t>(c - 1)];
            col.assign(static_cast<std::size_t>(d.column_height(c)), 0);
            for (int r = 1; r <= d.column_height(c); ++r) {
                col[static_cast<std::size_t>(r - 1)] = d.box_value(r, c);
            }
        }
        for (const auto& f : d.floats()) floats[static_cast<std::size_t>(f.col - 1)].push_back(f.value);
        for (auto& f : floats) std::sort(f.begin(), f.end());
    }

    int width() const { return static_cast<int>(cells.size()); }
    int height(int c) const { return lambda.part(c); }
    int& cell(int row, int c) {
        return cells[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(row - 1)];
    }
    std::vector<int>& floats_of(int c) { return floats[static_cast<std::size_t>(c - 1)]; }

    ContainerDiagram to_diagram() const {
        std::vector<std::vector<int>> columns(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) {
            for (auto it = cells[c].rbegin(); it != cells[c].rend(); ++it) {
                if (*it != 0) columns[c].push_back(*it);
            }
            columns[c].insert(columns[c].end(), floats[c].begin(), floats[c].end());
        }
        return ContainerDiagram(lambda, std::move(columns));
    }
};

// Bottom-most row holding adjacent boxes l < r (left smaller); leftmost such
// pair. Returns {0, 0} when the rows are all decreasing.
std::pair<int, int> find_row_inversion(Grid& g) {
    for (int row = g.lambda.part(1); row >= 1; --row) {
        for (int c = 1; c < g.width() && g.height(c + 1) >= row; ++c) {
            if (rank_of(g.cell(row, c)) < rank_of(g.cell(row, c + 1))) return {row, c};
        }
    }
    return {0, 0};
}

// One prefix-swap-and-refloat move at (row, c) / (row, c + 1).
void resolve_inversion(Grid& g, int row, int c) {
    const int m = row - 1;
    int i = 0;
    while (i < m && rank_of(g.cell(row - i - 1, c)) < rank_of(g.cell(row - i - 1, c + 1))) ++i;
    const int top_right = rank_of(g.cell(row - m, c + 1));
    for (int k = 0; k <= i; ++k) std::swap(g.cell(row - k, c), g.cell(row - k, c + 1));
    if (i == m) {
        auto& left = g.floats_of(c);
        auto& right = g.floats_of(c + 1);
        auto split = std::partition(left.begin(), left.end(), [&](int v) { return v >= top_right; });
        right.insert(right.end(), split, left.end());
        left.erase(split, left.end());
        std::sort(left.begin(), left.end());
        std::sort(right.begin(), right.end());
    }
}

}  // namespace

bool satisfies_d_conditions(const ContainerDiagram& sigma) {
    const Partition& lambda = sigma.lambda();
    if (lambda.empty()) return false;
    if (sigma.empty_box_count() != 1) return false;
    if (sigma.box_value(1, 1) != 0) return false;
    for (int row = 1; row <= lambda.part(1); ++row) {
        for (int c = 1; sigma.has_box(row, c + 1); ++c) {
            if (sigma.box_rank(row, c) < sigma.box_rank(row, c + 1)) return false;
        }
    }
    for (const auto& f : sigma.floats()) {
        for (int c = 1; c < f.col; ++c) {
            // The top box is the largest in its column.
            if (!sigma.has_box(1, c) || sigma.box_rank(1, c) < f.value) return false;
        }
    }
    return true;
}

CompositionSet build_D_direct(int n, const Partition& lambda) {
    check_size_range(n, lambda);
    // Condition 3 keeps every float within column l(lambda) + 1: a float
    // further right would have a box-less column to its left.
    const int width = lambda.length() + 1;
    CompositionSet out;
    std::vector<int> assign(static_cast<std::size_t>(n), 1);
    std::vector<int> counts(static_cast<std::size_t>(width));
    while (true) {
        std::fill(counts.begin(), counts.end(), 0);
        for (int a : assign) ++counts[static_cast<std::size_t>(a - 1)];
        // Conditions 1 and 2 pin the column sizes: column 1 is one short, the
        // rest are full.
        bool sizes_ok = counts[0] == lambda.part(1) - 1;
        for (int c = 2; sizes_ok && c <= lambda.length(); ++c) {
            sizes_ok = counts[static_cast<std::size_t>(c - 1)] >= lambda.part(c);
        }
        if (sizes_ok) {
            std::vector<std::vector<int>> columns(static_cast<std::size_t>(width));
            for (int i = 0; i < n; ++i) {
                columns[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)] - 1)].push_back(i + 1);
            }
            ContainerDiagram sigma(lambda, std::move(columns));
            if (satisfies_d_conditions(sigma)) out.insert(code(sigma));
        }
        int pos = 0;
        while (pos < n && assign[static_cast<std::size_t>(pos)] == width) {
            assign[static_cast<std::size_t>(pos)] = 1;
            ++pos;
        }
        if (pos == n) break;
        ++assign[static_cast<std::size_t>(pos)];
    }
    return out;
}

std::map<int, int> corner_by_leading_entry(int n, const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    std::map<int, int> out;
    for (int j : lambda.valid_corners(n)) {
        const int value = conj.part(j + 1);
        if (!out.emplace(value, j).second) {
            throw InvariantViolation("corners " + std::to_string(out[value]) + " and " +
                                     std::to_string(j) + " both prepend " + std::to_string(value) +
                                     " for lambda = " + lambda.to_string());
        }
    }
    return out;
}

namespace {

std::mutex d_cache_mutex;
std::map<std::pair<int, Partition>, CompositionSet> d_cache;

}  // namespace

CompositionSet build_D(int n, const Partition& lambda) {
    if (lambda.empty()) return {};
    check_size_range(n, lambda);
    {
        std::lock_guard lock(d_cache_mutex);
        if (auto it = d_cache.find({n, lambda}); it != d_cache.end()) return it->second;
    }

    CompositionSet out;
    if (n == 1) {
        out.insert(lambda.size() == 1 ? WeakComposition{1} : WeakComposition{0});
    } else {
        for (const auto& [value, j] : corner_by_leading_entry(n, lambda)) {
            const auto child = lambda.remove_corner(j);
            if (!child) throw InvariantViolation("admissible corner has no partition");
            for (const auto& tail : build_D(n - 1, *child)) {
                WeakComposition alpha;
                alpha.reserve(static_cast<std::size_t>(n));
                alpha.push_back(value);
                alpha.insert(alpha.end(), tail.begin(), tail.end());
                if (!out.insert(std::move(alpha)).second) {
                    throw InvariantViolation("recursive branches of D overlap");
                }
            }
        }
    }

    std::lock_guard lock(d_cache_mutex);
    d_cache.emplace(std::pair{n, lambda}, out);
    return out;
}

WeakComposition dominate_down(const WeakComposition& alpha, const Partition& lambda) {
    const int n = static_cast<int>(alpha.size());
    ContainerDiagram sigma = code_inv(alpha, lambda);
    if (sigma.empty_box_count() == 0) {
        throw InvalidInput("composition " + composition_to_string(alpha) +
                           " lies in C_{n,lambda,inf}; nothing to dominate");
    }

    // Step 1: cut alpha where (empty boxes - numbers still to insert) first
    // reaches 1 and insert the rest with code 0.
    WeakComposition beta = alpha;
    if (sigma.empty_box_count() > 1) {
        int cut = -1;
        for (int t = 1; t <= n; ++t) {
            const WeakComposition prefix(alpha.begin(), alpha.begin() + (t - 1));
            const int empties = code_inv(prefix, lambda).empty_box_count();
            if (empties - (n - t + 1) == 1) {
                cut = t;
                break;
            }
        }
        if (cut < 0) throw InvariantViolation("no truncation point for " + composition_to_string(alpha));
        std::fill(beta.begin() + (cut - 1), beta.end(), 0);
        sigma = code_inv(beta, lambda);
        if (sigma.empty_box_count() != 1) {
            throw InvariantViolation("truncation left " + std::to_string(sigma.empty_box_count()) +
                                     " empty boxes");
        }
    }

    // Step 2: remove row inversions, bottom row first.
    Grid grid(sigma);
    int guard = n * n * (lambda.part(1) + 1) + 16;
    for (auto [row, c] = find_row_inversion(grid); row != 0; std::tie(row, c) = find_row_inversion(grid)) {
        if (--guard < 0) throw InvariantViolation("row inversion removal did not terminate");
        resolve_inversion(grid, row, c);
    }

    // Step 3: slide each float violating condition 3 to the leftmost column
    // without a box that is empty or larger than it.
    for (int c = 2; c <= grid.width(); ++c) {
        auto& fl = grid.floats_of(c);
        for (std::size_t k = 0; k < fl.size();) {
            const int value = fl[k];
            int target = 0;
            for (int c2 = 1; c2 < c; ++c2) {
                if (grid.height(c2) == 0 || rank_of(grid.cell(1, c2)) < value) {
                    target = c2;
                    break;
                }
            }
            if (target == 0) {
                ++k;
                continue;
            }
            fl.erase(fl.begin() + static_cast<std::ptrdiff_t>(k));
            auto& dest = grid.floats_of(target);
            dest.insert(std::upper_bound(dest.begin(), dest.end(), value), value);
        }
    }

    const ContainerDiagram gamma = grid.to_diagram();
    if (!satisfies_d_conditions(gamma)) {
        throw InvariantViolation("domination of " + composition_to_string(alpha) +
                                 " did not reach D");
    }
    WeakComposition result = code(gamma);
    if (!entrywise_le(result, alpha)) {
        throw InvariantViolation("domination of " + composition_to_string(alpha) +
                                 " produced a larger code " + composition_to_string(result));
    }
    return result;
}

CompositionSet minimal_elements(const CompositionSet& set) {
    CompositionSet out;
    for (const auto& a : set) {
        const bool dominated = std::any_of(set.begin(), set.end(), [&](const WeakComposition& b) {
            return b != a && entrywise_le(b, a);
        });
        if (!dominated) out.insert(a);
    }
    return out;
}

}  // namespace griffin
