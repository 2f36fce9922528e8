#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "griffin/exponent.hpp"
#include "griffin/order.hpp"

namespace griffin {

using Rational = mpq_class;

struct Term {
    ExponentVector exponent;
    Rational coeff;
};

// Sparse polynomial over Q in x_1..x_n.
//
// Terms are kept in a canonical map keyed by the raw exponent entries, never
// in monomial-order position; sorted views are produced on demand so one
// value serves every order. Zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<ExponentVector, Rational>;

    explicit Polynomial(int ambient = 0);

    static Polynomial constant(int ambient, const Rational& c);
    static Polynomial monomial(const ExponentVector& e, const Rational& c = 1);
    // x_index, 1-based.
    static Polynomial variable(int ambient, int index);
    // Coefficients of repeated exponents are summed.
    static Polynomial from_terms(int ambient, const std::vector<Term>& terms);

    int ambient() const { return ambient_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coefficient(const ExponentVector& e) const;

    // Throws UndefinedLeadingTerm on zero.
    Term leading_term(MonomialOrder order) const;
    // Descending under the order.
    std::vector<Term> sorted_terms(MonomialOrder order) const;

    // Zero counts as homogeneous.
    bool is_homogeneous() const;
    // Largest total degree; -1 for zero.
    int total_degree() const;
    bool has_integer_coefficients() const;

    // x_i -> x_{i+1}; ambient grows by one.
    Polynomial shifted_up() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    // c * x^e * this
    Polynomial times_term(const ExponentVector& e, const Rational& c) const;

    // Terms in grevlex-descending order, e.g. "x1^2*x3 - 3/2*x2 + 1".
    std::string to_string() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.ambient_ == b.ambient_ && a.terms_ == b.terms_;
    }

private:
    void check_ambient(const Polynomial& other) const;
    void add_scaled(const Polynomial& other, int sign);

    int ambient_ = 0;
    TermMap terms_;
};

bool is_integer(const Rational& c);

// Inverse of Polynomial::to_string. Accepts "2*x1^2*x3", "x2", "-1/3*x1", "5".
Polynomial parse_polynomial(std::string_view text, int ambient);

}  // namespace griffin
