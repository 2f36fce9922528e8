#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace griffin {

// Hard limit on the number of variables.
inline constexpr int kMaxVariables = 64;

// Sequence of n non-negative integers; the monomial x^alpha.
// Weak compositions use the same representation.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::vector<int> entries);
    ExponentVector(std::initializer_list<int> entries);

    static ExponentVector zero(int n);
    // x_i^power, 1-based index.
    static ExponentVector unit(int n, int index, int power = 1);

    int size() const { return static_cast<int>(entries_.size()); }
    int degree() const { return degree_; }
    // 0-based access.
    int operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<int>& entries() const { return entries_; }

    bool divides(const ExponentVector& other) const;
    bool is_coprime_to(const ExponentVector& other) const;

    ExponentVector operator*(const ExponentVector& other) const;
    // Exact quotient; requires other.divides(*this).
    ExponentVector operator/(const ExponentVector& other) const;
    ExponentVector lcm(const ExponentVector& other) const;

    // Entrywise <=.
    bool dominated_by(const ExponentVector& other) const;

    // Prepend a leading zero and move every x_i to x_{i+1}.
    ExponentVector shifted_up() const;

    // Structural order on the raw entries; used for canonical storage only.
    // Monomial orders live in order.hpp.
    friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
        return a.entries_ == b.entries_;
    }
    friend std::strong_ordering operator<=>(const ExponentVector& a,
                                            const ExponentVector& b) {
        return a.entries_ <=> b.entries_;
    }

    // "(1,0,2)"
    std::string to_string() const;

private:
    void check_same_size(const ExponentVector& other) const;

    std::vector<int> entries_;
    int degree_ = 0;
};

using WeakComposition = std::vector<int>;

// Entrywise <= on weak compositions of equal length.
bool entrywise_le(const WeakComposition& a, const WeakComposition& b);

std::string composition_to_string(const WeakComposition& alpha);

}  // namespace griffin
