#include "griffin/order.hpp"

#include "griffin/errors.hpp"

namespace griffin {

std::strong_ordering MonomialOrder::compare(const ExponentVector& a,
                                            const ExponentVector& b) const {
    const int n = a.size();
    if (n != b.size()) throw InvalidInput("cannot compare monomials of different length");

    if (kind_ == OrderKind::grevlex) {
        if (a.degree() != b.degree()) return a.degree() <=> b.degree();
        for (int i = 0; i < n; ++i) {
            if (a[i] != b[i]) {
                return a[i] > b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
            }
        }
        return std::strong_ordering::equal;
    }

    for (int i = n - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
    return kind_ == OrderKind::grevlex ? "grevlex" : "lex";
}

MonomialOrder MonomialOrder::parse(std::string_view name) {
    if (name == "grevlex") return grevlex();
    if (name == "lex") return lex();
    throw InvalidInput("unknown monomial order '" + std::string(name) + "'");
}

}  // namespace griffin
