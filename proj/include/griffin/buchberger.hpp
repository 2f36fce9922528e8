#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <vector>

#include "griffin/exponent.hpp"
#include "griffin/order.hpp"
#include "griffin/polynomial.hpp"

namespace griffin {

struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Polynomial> elements;
    bool reduced = false;
    // Number of variables; needed when `elements` is empty.
    int ambient = 0;

    std::vector<ExponentVector> leading_monomials() const;
};

struct BuchbergerOptions {
    // Skip pairs with coprime leading monomials.
    bool coprime_criterion = true;
    // Gebauer-Moeller pair pruning and removal of redundant elements.
    bool chain_criterion = true;
    // Throw ComputationTimeout once this passes.
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Remainder of full multivariate division: no term of the result is
// divisible by a leading monomial of G, and f - result lies in <G>.
// Zero members of G are ignored.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G, MonomialOrder order);

// lcm/lt(f) * f / lc(f) - lcm/lt(g) * g / lc(g). Throws InvalidInput on zero input.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order);

// Buchberger's algorithm with the normal selection strategy (smallest lcm
// first, ties by index). The result is monic but not necessarily reduced.
GroebnerBasis buchberger(std::span<const Polynomial> gens, MonomialOrder order,
                         const BuchbergerOptions& options = {});

// The unique reduced basis of the ideal spanned by a Groebner basis,
// sorted by leading monomial ascending.
GroebnerBasis reduce_basis(const GroebnerBasis& basis);

// Buchberger's criterion: every S-polynomial reduces to zero. Pairs with
// coprime leading monomials are skipped, as are pairs (i, j) admitting a k
// whose leading monomial divides lcm_ij with lcm_ik and lcm_jk both proper
// divisors of lcm_ij.
bool is_groebner(std::span<const Polynomial> G, MonomialOrder order);

// Minimal generators under divisibility.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    explicit MonomialIdeal(std::span<const ExponentVector> generators);

    const std::vector<ExponentVector>& min_gens() const { return min_gens_; }
    bool contains(const ExponentVector& m) const;
    bool is_unit() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    std::vector<ExponentVector> min_gens_;  // sorted structurally
};

bool monomial_ideal_equal(std::span<const ExponentVector> a, std::span<const ExponentVector> b);

// Monomials divisible by no leading monomial of the basis. degree_bound caps
// the total degree; it is required when the quotient is infinite-dimensional
// (InvalidInput otherwise). Sorted structurally.
std::vector<ExponentVector> standard_monomials(const GroebnerBasis& basis,
                                               std::optional<int> degree_bound);

// True when every variable has a pure power among the leading monomials.
bool has_finite_quotient(const GroebnerBasis& basis);

// Number of standard monomials in each degree 0..max_degree.
std::vector<long> hilbert_function(const GroebnerBasis& basis, int max_degree);

}  // namespace griffin
