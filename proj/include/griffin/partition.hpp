#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace griffin {

// Weakly decreasing sequence of positive integers; trailing zeros stripped.
class Partition {
public:
    Partition() = default;
    // Accepts trailing zeros; throws InvalidInput if not weakly decreasing or negative.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // Parses "3,2,2,1". The empty string is rejected.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    // lambda_i, 1-based; zero past the end.
    int part(int i) const;
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;

    // p_m^n = lambda'_{n-m+1} + lambda'_{n-m+2} + ...
    // Throws InvalidInput unless n >= m >= 0.
    int p_stat(int m, int n) const;

    // lambda^(j): the partition whose conjugate is lambda' with entry j
    // decreased by one; lambda^(0) = lambda. nullopt when that is not a
    // partition.
    std::optional<Partition> remove_corner(int j) const;

    // The j that index the recursion over (n, lambda): lambda^(j) defined,
    // j = 0 excluded when |lambda| = n + 1. Sorted ascending. A j whose
    // lambda^(j) is empty is kept; its branch is empty.
    // Requires 1 <= |lambda| <= n + 1.
    std::vector<int> valid_corners(int n) const;

    // "3,2"; the empty partition prints as "".
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// All partitions of exactly `size`, in reverse lexicographic order.
std::vector<Partition> partitions_of(int size);

}  // namespace griffin
