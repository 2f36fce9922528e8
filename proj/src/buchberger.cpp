#include "griffin/buchberger.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "griffin/errors.hpp"

namespace griffin {

namespace {

struct OrderLess {
    MonomialOrder order;
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        return order.less(a, b);
    }
};

// Working polynomial keyed by the active order; the leading term is last.
using WorkPoly = std::map<ExponentVector, Rational, OrderLess>;

// Basis member with cached leading data; terms descending.
struct Reducer {
    std::vector<Term> terms;
    ExponentVector lm;
    Rational lc;

    Reducer(const Polynomial& p, MonomialOrder order) : terms(p.sorted_terms(order)) {
        lm = terms.front().exponent;
        lc = terms.front().coeff;
    }
};

Polynomial to_polynomial(int ambient, const std::vector<Term>& terms) {
    return Polynomial::from_terms(ambient, terms);
}

void subtract_multiple(WorkPoly& p, const Reducer& g, const ExponentVector& shift, const Rational& c) {
    for (const auto& t : g.terms) {
        const ExponentVector e = t.exponent * shift;
        auto [it, inserted] = p.try_emplace(e, 0);
        it->second -= c * t.coeff;
        if (it->second == 0) p.erase(it);
    }
}

const Reducer* find_divisor(const std::vector<const Reducer*>& basis, const ExponentVector& m) {
    for (const Reducer* g : basis) {
        if (g->lm.divides(m)) return g;
    }
    return nullptr;
}

Polynomial reduce_fully(const Polynomial& f, const std::vector<const Reducer*>& basis,
                        MonomialOrder order) {
    WorkPoly p{OrderLess{order}};
    for (const auto& [e, c] : f.terms()) p.emplace(e, c);
    std::vector<Term> remainder;
    while (!p.empty()) {
        auto lead = std::prev(p.end());
        if (const Reducer* g = find_divisor(basis, lead->first)) {
            const ExponentVector shift = lead->first / g->lm;
            const Rational c = lead->second / g->lc;
            subtract_multiple(p, *g, shift, c);
        } else {
            remainder.push_back({lead->first, lead->second});
            p.erase(lead);
        }
    }
    return to_polynomial(f.ambient(), remainder);
}

Polynomial make_monic(Polynomial p, MonomialOrder order) {
    if (p.is_zero()) return p;
    const Rational lc = p.leading_term(order).coeff;
    if (lc != 1) p *= Rational(1) / lc;
    return p;
}

int ambient_of(std::span<const Polynomial> polys) {
    int n = -1;
    for (const auto& p : polys) {
        if (n < 0) n = p.ambient();
        if (p.ambient() != n) throw InvalidInput("polynomials live in different rings");
    }
    return std::max(n, 0);
}

void check_deadline(const BuchbergerOptions& options) {
    if (options.deadline && std::chrono::steady_clock::now() > *options.deadline) {
        throw ComputationTimeout("Groebner basis computation exceeded its deadline");
    }
}

}  // namespace

std::vector<ExponentVector> GroebnerBasis::leading_monomials() const {
    std::vector<ExponentVector> out;
    for (const auto& g : elements) out.push_back(g.leading_term(order).exponent);
    return out;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G, MonomialOrder order) {
    std::vector<Reducer> reducers;
    for (const auto& g : G) {
        if (g.ambient() != f.ambient()) throw InvalidInput("polynomials live in different rings");
        if (!g.is_zero()) reducers.emplace_back(g, order);
    }
    std::vector<const Reducer*> basis;
    for (const auto& r : reducers) basis.push_back(&r);
    return reduce_fully(f, basis, order);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order) {
    if (f.is_zero() || g.is_zero()) throw InvalidInput("S-polynomial of zero");
    const Term lf = f.leading_term(order);
    const Term lg = g.leading_term(order);
    const ExponentVector l = lf.exponent.lcm(lg.exponent);
    return f.times_term(l / lf.exponent, Rational(1) / lf.coeff) -
           g.times_term(l / lg.exponent, Rational(1) / lg.coeff);
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, MonomialOrder order,
                         const BuchbergerOptions& options) {
    const int n = ambient_of(gens);

    struct Pair {
        std::size_t i, j;
        ExponentVector lcm;
    };

    std::vector<Polynomial> polys;
    std::vector<Reducer> reducers;
    std::vector<bool> active;
    std::vector<Pair> pairs;
    reducers.reserve(gens.size() * 4);

    auto active_reducers = [&] {
        std::vector<const Reducer*> out;
        for (std::size_t k = 0; k < polys.size(); ++k) {
            if (active[k]) out.push_back(&reducers[k]);
        }
        return out;
    };

    // Gebauer-Moeller update for a new element h.
    auto insert = [&](Polynomial h) {
        h = make_monic(std::move(h), order);
        const std::size_t hi = polys.size();
        polys.push_back(std::move(h));
        reducers.emplace_back(polys.back(), order);
        active.push_back(true);
        const ExponentVector& lmh = reducers[hi].lm;

        std::vector<std::size_t> candidates;
        for (std::size_t k = 0; k < hi; ++k) {
            if (active[k]) candidates.push_back(k);
        }

        if (!options.chain_criterion) {
            for (std::size_t k : candidates) {
                if (options.coprime_criterion && lmh.is_coprime_to(reducers[k].lm)) continue;
                pairs.push_back({k, hi, lmh.lcm(reducers[k].lm)});
            }
            return;
        }

        // Drop (g1, h) when another candidate pair has an lcm dividing it.
        std::vector<std::size_t> kept;
        for (std::size_t a = 0; a < candidates.size(); ++a) {
            const std::size_t g1 = candidates[a];
            const ExponentVector l1 = lmh.lcm(reducers[g1].lm);
            bool keep = lmh.is_coprime_to(reducers[g1].lm);
            if (!keep) {
                keep = true;
                for (std::size_t b = a + 1; b < candidates.size() && keep; ++b) {
                    if (lmh.lcm(reducers[candidates[b]].lm).divides(l1)) keep = false;
                }
                for (std::size_t g2 : kept) {
                    if (!keep) break;
                    if (lmh.lcm(reducers[g2].lm).divides(l1)) keep = false;
                }
            }
            if (keep) kept.push_back(g1);
        }

        std::vector<Pair> next;
        for (auto& p : pairs) {
            const bool h_divides = lmh.divides(p.lcm);
            const bool li = lmh.lcm(reducers[p.i].lm) == p.lcm;
            const bool lj = lmh.lcm(reducers[p.j].lm) == p.lcm;
            if (!h_divides || li || lj) next.push_back(std::move(p));
        }
        for (std::size_t g : kept) {
            if (options.coprime_criterion && lmh.is_coprime_to(reducers[g].lm)) continue;
            next.push_back({g, hi, lmh.lcm(reducers[g].lm)});
        }
        pairs = std::move(next);

        for (std::size_t k = 0; k < hi; ++k) {
            if (active[k] && lmh.divides(reducers[k].lm)) active[k] = false;
        }
    };

    for (const auto& f : gens) {
        if (!f.is_zero()) insert(f);
    }

    while (!pairs.empty()) {
        check_deadline(options);
        auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
            const auto c = order.compare(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            return std::tie(a.i, a.j) < std::tie(b.i, b.j);
        });
        const Pair p = *best;
        pairs.erase(best);
        const Polynomial s = s_polynomial(polys[p.i], polys[p.j], order);
        Polynomial h = reduce_fully(s, active_reducers(), order);
        if (!h.is_zero()) insert(std::move(h));
    }

    GroebnerBasis out{order, {}, false, n};
    for (std::size_t k = 0; k < polys.size(); ++k) {
        if (active[k]) out.elements.push_back(polys[k]);
    }
    return out;
}

GroebnerBasis reduce_basis(const GroebnerBasis& basis) {
    const MonomialOrder order = basis.order;
    std::vector<Polynomial> monic;
    for (const auto& g : basis.elements) {
        if (!g.is_zero()) monic.push_back(make_monic(g, order));
    }
    // Ascending leading monomial; among equal leading monomials keep the first.
    std::stable_sort(monic.begin(), monic.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leading_term(order).exponent, b.leading_term(order).exponent);
    });
    std::vector<Polynomial> minimal;
    for (const auto& g : monic) {
        const ExponentVector lm = g.leading_term(order).exponent;
        const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& h) {
            return h.leading_term(order).exponent.divides(lm);
        });
        if (!redundant) minimal.push_back(g);
    }
    // Leading monomials are now an antichain, so one pass of tail reduction
    // suffices.
    GroebnerBasis out{order, {}, true, basis.ambient};
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<Reducer> others;
        for (std::size_t m = 0; m < minimal.size(); ++m) {
            if (m != k) others.emplace_back(minimal[m], order);
        }
        std::vector<const Reducer*> ptrs;
        for (const auto& r : others) ptrs.push_back(&r);
        const Term lead = minimal[k].leading_term(order);
        Polynomial tail = minimal[k] - Polynomial::monomial(lead.exponent, lead.coeff);
        out.elements.push_back(Polynomial::monomial(lead.exponent, lead.coeff) +
                               reduce_fully(tail, ptrs, order));
    }
    if (out.ambient == 0 && !out.elements.empty()) out.ambient = out.elements.front().ambient();
    return out;
}

bool is_groebner(std::span<const Polynomial> G, MonomialOrder order) {
    std::vector<Polynomial> polys;
    for (const auto& g : G) {
        if (!g.is_zero()) polys.push_back(g);
    }
    ambient_of(polys);
    std::vector<Reducer> reducers;
    for (const auto& g : polys) reducers.emplace_back(g, order);
    std::vector<const Reducer*> basis;
    for (const auto& r : reducers) basis.push_back(&r);

    const std::size_t m = polys.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const ExponentVector& a = reducers[i].lm;
            const ExponentVector& b = reducers[j].lm;
            if (a.is_coprime_to(b)) continue;
            const ExponentVector l = a.lcm(b);
            bool chained = false;
            for (std::size_t k = 0; k < m && !chained; ++k) {
                if (k == i || k == j) continue;
                const ExponentVector& c = reducers[k].lm;
                chained = c.divides(l) && a.lcm(c) != l && b.lcm(c) != l;
            }
            if (chained) continue;
            if (!reduce_fully(s_polynomial(polys[i], polys[j], order), basis, order).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

MonomialIdeal::MonomialIdeal(std::span<const ExponentVector> generators) {
    std::vector<ExponentVector> sorted(generators.begin(), generators.end());
    std::sort(sorted.begin(), sorted.end(), [](const ExponentVector& a, const ExponentVector& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a < b;
    });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (const auto& g : sorted) {
        if (!contains(g)) min_gens_.push_back(g);
    }
    std::sort(min_gens_.begin(), min_gens_.end());
}

bool MonomialIdeal::contains(const ExponentVector& m) const {
    return std::any_of(min_gens_.begin(), min_gens_.end(),
                       [&](const ExponentVector& g) { return g.divides(m); });
}

bool MonomialIdeal::is_unit() const {
    return std::any_of(min_gens_.begin(), min_gens_.end(),
                       [](const ExponentVector& g) { return g.degree() == 0; });
}

bool monomial_ideal_equal(std::span<const ExponentVector> a, std::span<const ExponentVector> b) {
    return MonomialIdeal(a) == MonomialIdeal(b);
}

bool has_finite_quotient(const GroebnerBasis& basis) {
    const MonomialIdeal ideal(basis.leading_monomials());
    if (ideal.is_unit()) return true;
    const int n = basis.ambient;
    for (int i = 0; i < n; ++i) {
        const bool has_power = std::any_of(
            ideal.min_gens().begin(), ideal.min_gens().end(),
            [&](const ExponentVector& g) { return g[static_cast<std::size_t>(i)] == g.degree(); });
        if (!has_power) return false;
    }
    return true;
}

std::vector<ExponentVector> standard_monomials(const GroebnerBasis& basis,
                                               std::optional<int> degree_bound) {
    const MonomialIdeal ideal(basis.leading_monomials());
    const int n = basis.ambient;
    std::vector<int> caps(static_cast<std::size_t>(n), -1);
    for (const auto& g : ideal.min_gens()) {
        for (int i = 0; i < n; ++i) {
            if (g[static_cast<std::size_t>(i)] == g.degree() && g.degree() > 0) {
                caps[static_cast<std::size_t>(i)] = g.degree() - 1;
            }
        }
    }
    const bool finite = ideal.is_unit() ||
                        std::none_of(caps.begin(), caps.end(), [](int c) { return c < 0; });
    if (!finite && !degree_bound) {
        throw InvalidInput("quotient is infinite-dimensional; a degree bound is required");
    }

    std::vector<ExponentVector> out;
    if (ideal.is_unit()) return out;
    // Depth-first over variables; a partial exponent vector divides every
    // completion, so a non-standard prefix prunes its subtree.
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int var, int degree) {
        if (var == n) {
            out.emplace_back(exps);
            return;
        }
        for (int e = 0;; ++e) {
            if (caps[static_cast<std::size_t>(var)] >= 0 && e > caps[static_cast<std::size_t>(var)]) break;
            if (degree_bound && degree + e > *degree_bound) break;
            exps[static_cast<std::size_t>(var)] = e;
            if (ideal.contains(ExponentVector(exps))) break;
            rec(var + 1, degree + e);
        }
        exps[static_cast<std::size_t>(var)] = 0;
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long> hilbert_function(const GroebnerBasis& basis, int max_degree) {
    if (max_degree < 0) throw InvalidInput("max degree must be non-negative");
    std::vector<long> counts(static_cast<std::size_t>(max_degree) + 1, 0);
    for (const auto& m : standard_monomials(basis, max_degree)) ++counts[static_cast<std::size_t>(m.degree())];
    return counts;
}

}  // namespace griffin
