#include "griffin/ideal.hpp"

#include <algorithm>

#include "griffin/errors.hpp"

namespace griffin {

bool operator<(const GeneratorKey& a, const GeneratorKey& b) {
    if (a.set.size() != b.set.size()) return a.set.size() > b.set.size();
    if (a.set != b.set) return a.set < b.set;
    return a.d < b.d;
}

std::string GeneratorKey::to_string() const {
    return "e_" + std::to_string(d) + "(" + index_set_to_string(set) + ")";
}

bool is_generator_key(const GeneratorKey& key, int n, const Partition& lambda) {
    const int size = static_cast<int>(key.set.size());
    for (std::size_t i = 0; i < key.set.size(); ++i) {
        if (key.set[i] < 1 || key.set[i] > n || (i > 0 && key.set[i] <= key.set[i - 1])) {
            return false;
        }
    }
    return key.d <= size && key.d > size - lambda.p_stat(size, n);
}

std::vector<GeneratorKey> generator_keys(int n, const Partition& lambda) {
    if (n < 1 || n > 30) throw InvalidInput("generator enumeration needs 1 <= n <= 30");
    std::vector<GeneratorKey> keys;
    for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
        IndexSet s;
        for (int i = 0; i < n; ++i) {
            if (mask & (1UL << i)) s.push_back(i + 1);
        }
        const int size = static_cast<int>(s.size());
        const int p = lambda.p_stat(size, n);
        for (int d = std::max(0, size - p + 1); d <= size; ++d) keys.push_back({d, s});
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

std::vector<Polynomial> generators(int n, const Partition& lambda, PowerBound s) {
    if (s && *s < lambda.length()) {
        throw InvalidInput("s = " + std::to_string(*s) + " is smaller than l(lambda) = " +
                           std::to_string(lambda.length()));
    }
    std::vector<Polynomial> out;
    for (const auto& key : generator_keys(n, lambda)) out.push_back(key.polynomial(n));
    if (s) {
        for (int i = 1; i <= n; ++i) out.push_back(Polynomial::monomial(ExponentVector::unit(n, i, *s)));
    }
    return out;
}

TrackedPolynomial TrackedPolynomial::generator(const GeneratorKey& key, int ambient) {
    TrackedPolynomial t{key.polynomial(ambient), {}};
    t.combination.emplace(key, Polynomial::constant(ambient, 1));
    return t;
}

Polynomial TrackedPolynomial::expand() const {
    Polynomial sum(ambient());
    for (const auto& [key, cofactor] : combination) sum += cofactor * key.polynomial(ambient());
    return sum;
}

bool certify(const TrackedPolynomial& t) {
    for (const auto& [key, cofactor] : t.combination) {
        if (cofactor.ambient() != t.ambient()) return false;
        try {
            check_index_set(key.set, t.ambient());
        } catch (const InvalidInput&) {
            return false;
        }
    }
    return t.expand() == t.value;
}

bool certify_membership(const TrackedPolynomial& t, const Partition& lambda) {
    for (const auto& [key, cofactor] : t.combination) {
        if (!is_generator_key(key, t.ambient(), lambda)) return false;
        if (!cofactor.has_integer_coefficients()) return false;
    }
    return certify(t);
}

}  // namespace griffin
