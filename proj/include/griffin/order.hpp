#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "griffin/exponent.hpp"

namespace griffin {

enum class OrderKind { grevlex, lex };

// Monomial orders with x_n as the dominant variable.
//
// grevlex: a < b iff deg a < deg b, or the degrees agree and at the first
//          position where they differ a has the LARGER entry.
// lex:     a < b iff at the last position where they differ a has the
//          smaller entry.
//
// Under both, x_1 < x_2 < ... < x_n.
class MonomialOrder {
public:
    constexpr MonomialOrder() = default;
    constexpr explicit MonomialOrder(OrderKind kind) : kind_(kind) {}

    static constexpr MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex); }
    static constexpr MonomialOrder lex() { return MonomialOrder(OrderKind::lex); }

    OrderKind kind() const { return kind_; }

    // Throws InvalidInput on a length mismatch.
    std::strong_ordering compare(const ExponentVector& a, const ExponentVector& b) const;

    bool less(const ExponentVector& a, const ExponentVector& b) const {
        return compare(a, b) == std::strong_ordering::less;
    }

    std::string name() const;
    static MonomialOrder parse(std::string_view name);

    friend bool operator==(MonomialOrder a, MonomialOrder b) { return a.kind_ == b.kind_; }

private:
    OrderKind kind_ = OrderKind::grevlex;
};

}  // namespace griffin
