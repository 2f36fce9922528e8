#include "griffin/symmetric.hpp"

#include <numeric>

#include "griffin/errors.hpp"

namespace griffin {

void check_index_set(const IndexSet& s, int ambient) {
    int prev = 0;
    for (int i : s) {
        if (i <= prev || i > ambient) {
            throw InvalidInput("index set " + index_set_to_string(s) + " is not a subset of [" +
                               std::to_string(ambient) + "] in increasing order");
        }
        prev = i;
    }
}

IndexSet full_set(int n) {
    IndexSet s(static_cast<std::size_t>(n));
    std::iota(s.begin(), s.end(), 1);
    return s;
}

std::string index_set_to_string(const IndexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out + "}";
}

namespace {

void elementary_rec(const IndexSet& s, std::size_t from, int remaining, std::vector<int>& exps,
                    std::vector<Term>& out) {
    if (remaining == 0) {
        out.push_back({ExponentVector(exps), 1});
        return;
    }
    for (std::size_t k = from; k + static_cast<std::size_t>(remaining) <= s.size(); ++k) {
        exps[static_cast<std::size_t>(s[k] - 1)] = 1;
        elementary_rec(s, k + 1, remaining - 1, exps, out);
        exps[static_cast<std::size_t>(s[k] - 1)] = 0;
    }
}

void complete_rec(int var, int m, int remaining, std::vector<int>& exps, std::vector<Term>& out) {
    if (var == m - 1) {
        exps[static_cast<std::size_t>(var)] = remaining;
        out.push_back({ExponentVector(exps), 1});
        exps[static_cast<std::size_t>(var)] = 0;
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        exps[static_cast<std::size_t>(var)] = e;
        complete_rec(var + 1, m, remaining - e, exps, out);
    }
    exps[static_cast<std::size_t>(var)] = 0;
}

}  // namespace

Polynomial elementary(int d, const IndexSet& s, int ambient) {
    check_index_set(s, ambient);
    if (d < 0 || d > static_cast<int>(s.size())) return Polynomial(ambient);
    std::vector<Term> terms;
    std::vector<int> exps(static_cast<std::size_t>(ambient), 0);
    elementary_rec(s, 0, d, exps, terms);
    return Polynomial::from_terms(ambient, terms);
}

Polynomial complete_homogeneous(int d, int m, int ambient) {
    if (d < 0) throw InvalidInput("complete homogeneous degree must be non-negative");
    if (m < 1 || m > ambient) throw InvalidInput("variable count m out of range");
    std::vector<Term> terms;
    std::vector<int> exps(static_cast<std::size_t>(ambient), 0);
    complete_rec(0, m, d, exps, terms);
    return Polynomial::from_terms(ambient, terms);
}

}  // namespace griffin
