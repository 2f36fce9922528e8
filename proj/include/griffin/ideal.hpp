#pragma once

#include <map>
#include <string>
#include <vector>

#include "griffin/partition.hpp"
#include "griffin/polynomial.hpp"
#include "griffin/staircase.hpp"
#include "griffin/symmetric.hpp"

namespace griffin {

// Names the generator e_d(S).
struct GeneratorKey {
    int d = 0;
    IndexSet set;

    // |S| descending, then S lexicographically, then d ascending.
    friend bool operator<(const GeneratorKey& a, const GeneratorKey& b);
    friend bool operator==(const GeneratorKey&, const GeneratorKey&) = default;

    Polynomial polynomial(int ambient) const { return elementary(d, set, ambient); }
    // "e_2({1,3})"
    std::string to_string() const;
};

// True when e_d(S) is a nonzero generator of I_{n,lambda,inf}:
// |S| - p^n_{|S|}(lambda) < d <= |S|.
bool is_generator_key(const GeneratorKey& key, int n, const Partition& lambda);

// All generator keys of I_{n,lambda,inf}, sorted. Includes d = 0 when
// |lambda| > n (the unit ideal).
std::vector<GeneratorKey> generator_keys(int n, const Partition& lambda);

// e_d(S) for every key, then x_1^s, ..., x_n^s when s is finite.
// Throws InvalidInput when s < l(lambda).
std::vector<Polynomial> generators(int n, const Partition& lambda, PowerBound s);

// A polynomial with an explicit certificate value = sum g_{d,S} e_d(S).
struct TrackedPolynomial {
    Polynomial value;
    std::map<GeneratorKey, Polynomial> combination;

    int ambient() const { return value.ambient(); }

    // value = e_d(S) with cofactor 1.
    static TrackedPolynomial generator(const GeneratorKey& key, int ambient);

    // Sum of g_{d,S} e_d(S) over the certificate.
    Polynomial expand() const;

    friend bool operator==(const TrackedPolynomial&, const TrackedPolynomial&) = default;
};

// True iff the certificate re-expands to the value.
bool certify(const TrackedPolynomial& t);

// certify() plus every key being a generator key of J_{n,lambda} and every
// cofactor having integer coefficients.
bool certify_membership(const TrackedPolynomial& t, const Partition& lambda);

}  // namespace griffin
