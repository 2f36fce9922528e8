#include "griffin/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "griffin/errors.hpp"

namespace griffin {

bool is_integer(const Rational& c) {
    return mpz_cmp_ui(c.get_den_mpz_t(), 1) == 0;
}

Polynomial::Polynomial(int ambient) : ambient_(ambient) {
    if (ambient < 0 || ambient > kMaxVariables) {
        throw InvalidInput("ambient variable count out of range");
    }
}

namespace {

// GMP arithmetic keeps canonical operands canonical, so coefficients are
// normalized only where they enter from outside.
Rational canonical(Rational c) {
    c.canonicalize();
    return c;
}

}  // namespace

Polynomial Polynomial::constant(int ambient, const Rational& raw) {
    Polynomial p(ambient);
    const Rational c = canonical(raw);
    if (c != 0) p.terms_.emplace(ExponentVector::zero(ambient), c);
    return p;
}

Polynomial Polynomial::monomial(const ExponentVector& e, const Rational& raw) {
    Polynomial p(e.size());
    const Rational c = canonical(raw);
    if (c != 0) p.terms_.emplace(e, c);
    return p;
}

Polynomial Polynomial::variable(int ambient, int index) {
    return monomial(ExponentVector::unit(ambient, index));
}

Polynomial Polynomial::from_terms(int ambient, const std::vector<Term>& terms) {
    Polynomial p(ambient);
    for (const auto& t : terms) {
        if (t.exponent.size() != ambient) throw InvalidInput("term has wrong variable count");
        const Rational c = canonical(t.coeff);
        if (c == 0) continue;
        auto [it, inserted] = p.terms_.try_emplace(t.exponent, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) p.terms_.erase(it);
        }
    }
    return p;
}

Rational Polynomial::coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Term Polynomial::leading_term(MonomialOrder order) const {
    if (terms_.empty()) throw UndefinedLeadingTerm("zero polynomial has no leading term");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
        if (order.less(best->first, it->first)) best = it;
    }
    return {best->first, best->second};
}

std::vector<Term> Polynomial::sorted_terms(MonomialOrder order) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back({e, c});
    std::sort(out.begin(), out.end(), [order](const Term& a, const Term& b) {
        return order.less(b.exponent, a.exponent);
    });
    return out;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return t.first.degree() == d; });
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
    return d;
}

bool Polynomial::has_integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return is_integer(t.second); });
}

Polynomial Polynomial::shifted_up() const {
    Polynomial r(ambient_ + 1);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e.shifted_up(), c);
    return r;
}

void Polynomial::check_ambient(const Polynomial& other) const {
    if (ambient_ != other.ambient_) {
        throw InvalidInput("polynomials live in different rings (" + std::to_string(ambient_) +
                           " vs " + std::to_string(other.ambient_) + " variables)");
    }
}

void Polynomial::add_scaled(const Polynomial& other, int sign) {
    check_ambient(other);
    for (const auto& [e, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, sign > 0 ? c : Rational(-c));
        if (inserted) continue;
        if (sign > 0) it->second += c; else it->second -= c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    add_scaled(other, +1);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    add_scaled(other, -1);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& raw) {
    const Rational c = canonical(raw);
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ambient(b);
    Polynomial r(a.ambient_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Rational prod = ca * cb;
            auto [it, inserted] = r.terms_.try_emplace(ea * eb, prod);
            if (!inserted) {
                it->second += prod;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

Polynomial Polynomial::times_term(const ExponentVector& e, const Rational& raw) const {
    if (e.size() != ambient_) throw InvalidInput("monomial has wrong variable count");
    const Rational c = canonical(raw);
    Polynomial r(ambient_);
    if (c == 0) return r;
    for (const auto& [ea, ca] : terms_) r.terms_.emplace(ea * e, ca * c);
    return r;
}

namespace {

std::string monomial_text(const ExponentVector& e) {
    std::string s;
    for (int i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += 'x' + std::to_string(i + 1);
        if (e[i] > 1) s += '^' + std::to_string(e[i]);
    }
    return s;
}

}  // namespace

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : sorted_terms(MonomialOrder::grevlex())) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        const std::string mono = monomial_text(e);
        if (mono.empty()) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + '*';
            out += mono;
        }
    }
    return out;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, int ambient) : text_(text), ambient_(ambient) {}

    Polynomial parse() {
        std::vector<Term> terms;
        skip_space();
        if (at_end()) fail("empty input");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_space();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            Term t = parse_term();
            if (sign < 0) t.coeff = -t.coeff;
            terms.push_back(std::move(t));
            skip_space();
        }
        return Polynomial::from_terms(ambient_, terms);
    }

private:
    Term parse_term() {
        Rational coeff = 1;
        std::vector<int> exps(static_cast<std::size_t>(ambient_), 0);
        bool have_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_rational();
            have_factor = true;
            skip_space();
            if (peek() != '*') return {ExponentVector(exps), coeff};
            ++pos_;
            skip_space();
        }
        while (true) {
            if (peek() != 'x') {
                if (!have_factor) fail("expected a coefficient or variable");
                fail("expected a variable after '*'");
            }
            ++pos_;
            const long idx = parse_unsigned();
            if (idx < 1 || idx > ambient_) fail("variable index out of range");
            long power = 1;
            skip_space();
            if (peek() == '^') {
                ++pos_;
                skip_space();
                power = parse_unsigned();
            }
            exps[static_cast<std::size_t>(idx - 1)] += static_cast<int>(power);
            have_factor = true;
            skip_space();
            if (peek() != '*') break;
            ++pos_;
            skip_space();
        }
        return {ExponentVector(exps), coeff};
    }

    Rational parse_rational() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (peek() == '/') {
            ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("bad rational");
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        Rational r(std::string(text_.substr(start, pos_ - start)));
        if (r.get_den() == 0) fail("zero denominator");
        r.canonicalize();
        return r;
    }

    long parse_unsigned() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000) fail("number too large");
            ++pos_;
        }
        return v;
    }

    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    bool at_end() const { return pos_ >= text_.size(); }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw InvalidInput("polynomial parse error at offset " + std::to_string(pos_) + ": " +
                           what);
    }

    std::string_view text_;
    int ambient_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int ambient) {
    return PolyParser(text, ambient).parse();
}

}  // namespace griffin
