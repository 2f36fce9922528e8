#include "griffin/construct.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "griffin/dset.hpp"
#include "griffin/errors.hpp"

namespace griffin {

namespace {

Polynomial x1_power(int ambient, int power) {
    return Polynomial::monomial(ExponentVector::unit(ambient, 1, power));
}

IndexSet with_one(const IndexSet& s) {
    IndexSet out{1};
    out.insert(out.end(), s.begin(), s.end());
    return out;
}

void add_cofactor(std::map<GeneratorKey, Polynomial>& combination, const GeneratorKey& key,
                  const Polynomial& cofactor) {
    if (cofactor.is_zero()) return;
    auto [it, inserted] = combination.try_emplace(key, cofactor);
    if (!inserted) {
        it->second += cofactor;
        if (it->second.is_zero()) combination.erase(it);
    }
}

}  // namespace

TrackedPolynomial lift_F(const GeneratorKey& key, int j, int n, const Partition& lambda) {
    if (n < 2) throw InvalidInput("lifting needs n >= 2");
    const auto child = lambda.remove_corner(j);
    if (!child) throw InvalidInput("lambda^(" + std::to_string(j) + ") is not defined");
    check_index_set(key.set, n);
    if (!key.set.empty() && key.set.front() < 2) {
        throw InvalidInput("lifted keys must avoid x_1, got " + key.to_string());
    }
    GeneratorKey down{key.d, {}};
    for (int i : key.set) down.set.push_back(i - 1);
    if (!is_generator_key(down, n - 1, *child)) {
        throw InvalidInput(key.to_string() + " is not a generator of the shifted J_{" +
                           std::to_string(n - 1) + ",(" + child->to_string() + ")}");
    }

    const int a = lambda.conjugate().part(j + 1);
    const int size = static_cast<int>(key.set.size());
    TrackedPolynomial out{Polynomial(n), {}};

    auto use = [&](const GeneratorKey& k, const Polynomial& cofactor) {
        if (k.d > static_cast<int>(k.set.size())) return;  // e_d vanishes
        if (!is_generator_key(k, n, lambda)) {
            throw InvariantViolation("lifted summand " + k.to_string() + " is not in J_{" +
                                     std::to_string(n) + ",(" + lambda.to_string() + ")}");
        }
        add_cofactor(out.combination, k, cofactor);
    };

    if (size >= n - j) {
        use({key.d, with_one(key.set)}, x1_power(n, a));
        out.value = x1_power(n, a) * elementary(key.d, with_one(key.set), n);
    } else {
        for (int k = 1; k <= a; ++k) {
            Polynomial c = x1_power(n, a - k);
            if ((k - 1) % 2 == 1) c = -c;
            use({key.d + k, with_one(key.set)}, c);
        }
        use({key.d + a, key.set}, Polynomial::constant(n, a % 2 == 0 ? 1 : -1));
        out.value = x1_power(n, a) * elementary(key.d, key.set, n);
    }
    return out;
}

TrackedPolynomial shift_up(const TrackedPolynomial& t) {
    TrackedPolynomial out{t.value.shifted_up(), {}};
    for (const auto& [key, cofactor] : t.combination) {
        GeneratorKey shifted{key.d, {}};
        for (int i : key.set) shifted.set.push_back(i + 1);
        out.combination.emplace(std::move(shifted), cofactor.shifted_up());
    }
    return out;
}

void check_element(const GroebnerElement& element, const Partition& lambda) {
    const Polynomial& f = element.poly.value;
    const ExponentVector target(element.target);
    const std::string where = "element " + target.to_string() + " of G for (" + lambda.to_string() + ")";
    if (f.is_zero()) throw InvariantViolation(where + " is zero");
    if (!f.is_homogeneous() || f.total_degree() != target.degree()) {
        throw InvariantViolation(where + " is not homogeneous of degree |target|");
    }
    if (!f.has_integer_coefficients()) throw InvariantViolation(where + " has non-integer coefficients");
    const Term lead = f.leading_term(MonomialOrder::grevlex());
    if (lead.exponent != target || lead.coeff != 1) {
        throw InvariantViolation(where + " has leading term " + lead.coeff.get_str() + "*x^" +
                                 lead.exponent.to_string());
    }
    if (!certify_membership(element.poly, lambda)) {
        throw InvariantViolation(where + " fails its membership certificate");
    }
}

namespace {

using ElementList = std::vector<GroebnerElement>;

std::mutex g_cache_mutex;
std::map<std::pair<int, Partition>, std::shared_ptr<const ElementList>> g_cache;

std::shared_ptr<const ElementList> build_G_cached(int n, const Partition& lambda);

ElementList build_G_uncached(int n, const Partition& lambda) {
    ElementList out;
    if (lambda.empty()) return out;
    if (n == 1) {
        if (lambda.size() < 1 || lambda.size() > 2) throw InvalidInput("need 1 <= |lambda| <= 2 for n = 1");
        const GeneratorKey key{lambda.size() == 1 ? 1 : 0, {1}};
        out.push_back({{lambda.size() == 1 ? 1 : 0}, TrackedPolynomial::generator(key, 1)});
        for (const auto& e : out) check_element(e, lambda);
        return out;
    }

    const auto corners = corner_by_leading_entry(n, lambda);
    for (const auto& alpha : build_D(n, lambda)) {
        const auto corner = corners.find(alpha.front());
        if (corner == corners.end()) {
            throw InvariantViolation("first entry of " + composition_to_string(alpha) +
                                     " matches no admissible corner");
        }
        const int j = corner->second;
        const Partition child = *lambda.remove_corner(j);
        const auto child_elements = build_G_cached(n - 1, child);
        const WeakComposition tail(alpha.begin() + 1, alpha.end());
        const auto found = std::find_if(child_elements->begin(), child_elements->end(),
                                        [&](const GroebnerElement& e) { return e.target == tail; });
        if (found == child_elements->end()) {
            throw InvariantViolation("no element with target " + composition_to_string(tail) +
                                     " in G for (" + child.to_string() + ")");
        }

        const TrackedPolynomial shifted = shift_up(found->poly);
        GroebnerElement element{alpha, {Polynomial(n), {}}};
        for (const auto& [key, cofactor] : shifted.combination) {
            const TrackedPolynomial lifted = lift_F(key, j, n, lambda);
            element.poly.value += cofactor * lifted.value;
            for (const auto& [k2, c2] : lifted.combination) {
                add_cofactor(element.poly.combination, k2, cofactor * c2);
            }
        }
        check_element(element, lambda);
        out.push_back(std::move(element));
    }
    return out;
}

std::shared_ptr<const ElementList> build_G_cached(int n, const Partition& lambda) {
    {
        std::lock_guard lock(g_cache_mutex);
        if (auto it = g_cache.find({n, lambda}); it != g_cache.end()) return it->second;
    }
    auto built = std::make_shared<const ElementList>(build_G_uncached(n, lambda));
    std::lock_guard lock(g_cache_mutex);
    // Concurrent builders produce identical lists; keep whichever landed first.
    return g_cache.emplace(std::pair{n, lambda}, std::move(built)).first->second;
}

}  // namespace

std::vector<GroebnerElement> build_G(int n, const Partition& lambda) {
    if (n < 1) throw InvalidInput("n must be positive");
    if (!lambda.empty() && (lambda.size() < 1 || lambda.size() > n + 1)) {
        throw InvalidInput("need 1 <= |lambda| <= n + 1");
    }
    return *build_G_cached(n, lambda);
}

std::vector<Polynomial> build_G_s(int n, const Partition& lambda, PowerBound s) {
    if (s && *s < lambda.length()) {
        throw InvalidInput("s = " + std::to_string(*s) + " is smaller than l(lambda)");
    }
    std::vector<Polynomial> out;
    for (const auto& e : build_G(n, lambda)) out.push_back(e.poly.value);
    if (s) {
        for (int i = 1; i <= n; ++i) {
            Polynomial power = Polynomial::monomial(ExponentVector::unit(n, i, *s));
            if (std::find(out.begin(), out.end(), power) == out.end()) out.push_back(std::move(power));
        }
    }
    return out;
}

}  // namespace griffin
