#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "griffin/exponent.hpp"
#include "griffin/partition.hpp"

namespace griffin {

// The power bound s of I_{n,lambda,s}; nullopt means s = infinity.
using PowerBound = std::optional<int>;
inline constexpr PowerBound kInfinite = std::nullopt;

// "inf" or a decimal integer.
PowerBound parse_power_bound(std::string_view text);
std::string power_bound_to_string(PowerBound s);

// (k-1, k-2, ..., 1, 0)
WeakComposition reversed_staircase(int k);

// Every distinct interleaving of the given sequences (relative order kept).
std::set<WeakComposition> shuffles(const std::vector<WeakComposition>& parts);

// (n, lambda, s)-staircases: shuffles of rho^{lambda'_1}, ..., rho^{lambda'_{lambda_1}}
// and n - |lambda| copies of s - 1.
// Requires 1 <= |lambda| <= n and l(lambda) <= s.
std::set<WeakComposition> staircases(int n, const Partition& lambda, int s);

// Membership in C_{n,lambda,s}. For s = infinity this is "code_inv(alpha) has
// no empty box". Always false when |lambda| > n.
bool in_C(const WeakComposition& alpha, const Partition& lambda, PowerBound s);

// All of C_{n,lambda,s} for finite s (empty when |lambda| > n).
std::set<WeakComposition> enumerate_C(int n, const Partition& lambda, int s);

// Griffin's monomial basis A_{n,lambda,s} as exponent vectors, sorted.
std::vector<ExponentVector> enumerate_A(int n, const Partition& lambda, int s);

}  // namespace griffin
