#pragma once

#include <vector>

#include "griffin/exponent.hpp"
#include "griffin/ideal.hpp"
#include "griffin/partition.hpp"
#include "griffin/staircase.hpp"

namespace griffin {

// One member of G_{n,lambda}: a certified polynomial whose grevlex leading
// term is exactly x^target.
struct GroebnerElement {
    WeakComposition target;
    TrackedPolynomial poly;
};

// F_{d,S} for a generator e_d(S) of the shifted ideal J'_{n,lambda^(j)}
// (S inside {2..n}), written over generators of J_{n,lambda}. With
// a = lambda'_{j+1}:
//   |S| >= n - j:  x_1^a e_d(S + {1})
//   |S| <  n - j:  x_1^a e_d(S), expanded as
//                  sum_{k=1..a} (-1)^{k-1} x_1^{a-k} e_{d+k}(S + {1}) + (-1)^a e_{d+a}(S)
// Throws InvalidInput when the key is not a generator of J'_{n,lambda^(j)},
// InvariantViolation when a summand is not a generator of J_{n,lambda}.
TrackedPolynomial lift_F(const GeneratorKey& key, int j, int n, const Partition& lambda);

// Renames x_i to x_{i+1} in the value, cofactors and keys.
TrackedPolynomial shift_up(const TrackedPolynomial& t);

// G_{n,lambda}, one element per alpha in D_{n,lambda}, sorted by target.
// Requires 1 <= |lambda| <= n + 1; the empty partition gives the empty list.
// Sub-bases are memoized per (n, lambda).
std::vector<GroebnerElement> build_G(int n, const Partition& lambda);

// G_{n,lambda} followed by x_1^s, ..., x_n^s, duplicates dropped.
std::vector<Polynomial> build_G_s(int n, const Partition& lambda, PowerBound s);

// Throws InvariantViolation unless the element is homogeneous of degree
// |target|, has integer coefficients, leading term exactly x^target with
// coefficient 1, and a valid certificate over J_{n,lambda}.
void check_element(const GroebnerElement& element, const Partition& lambda);

}  // namespace griffin
