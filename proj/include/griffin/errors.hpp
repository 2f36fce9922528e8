#pragma once

#include <stdexcept>
#include <string>

namespace griffin {

// Bad arguments: mismatched lengths, out-of-range parameters, malformed text.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An internal consistency check failed. Seeing one of these means a
// combinatorial or algebraic claim the library relies on did not hold.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Leading term requested for the zero polynomial.
class UndefinedLeadingTerm : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A computation ran past its deadline.
class ComputationTimeout : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace griffin
