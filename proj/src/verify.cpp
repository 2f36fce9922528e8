#include "griffin/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "griffin/buchberger.hpp"
#include "griffin/dset.hpp"
#include "griffin/errors.hpp"

namespace griffin {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void check_parameters(int n, const Partition& lambda, PowerBound s) {
    if (n < 1) throw InvalidInput("n must be positive");
    if (lambda.size() < 1 || lambda.size() > n + 1) {
        throw InvalidInput("need 1 <= |lambda| <= n + 1, got |lambda| = " + std::to_string(lambda.size()));
    }
    if (s && *s < lambda.length()) {
        throw InvalidInput("s = " + std::to_string(*s) + " is smaller than l(lambda) = " +
                           std::to_string(lambda.length()));
    }
}

std::string monomial_list(const std::vector<ExponentVector>& ms, std::size_t limit = 8) {
    std::string out;
    for (std::size_t i = 0; i < ms.size() && i < limit; ++i) {
        if (i) out += ", ";
        out += ms[i].to_string();
    }
    if (ms.size() > limit) out += ", ... (" + std::to_string(ms.size()) + " total)";
    return out;
}

// "missing ..., unexpected ..." or "" when equal.
std::string set_difference_detail(const std::set<ExponentVector>& got, const std::set<ExponentVector>& want) {
    std::vector<ExponentVector> missing, extra;
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));
    std::string out;
    if (!missing.empty()) out += "missing " + monomial_list(missing);
    if (!extra.empty()) out += std::string(out.empty() ? "" : "; ") + "unexpected " + monomial_list(extra);
    return out;
}

void all_compositions(int n, int max_degree, const std::function<void(const WeakComposition&)>& visit) {
    WeakComposition alpha(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n) {
            visit(alpha);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            alpha[static_cast<std::size_t>(i)] = e;
            rec(i + 1, left - e);
        }
        alpha[static_cast<std::size_t>(i)] = 0;
    };
    rec(0, max_degree);
}

std::string basis_listing(const std::vector<Polynomial>& basis) {
    std::string out = "{";
    for (std::size_t i = 0; i < basis.size(); ++i) out += (i ? ", " : "") + basis[i].to_string();
    return out + "}";
}

std::vector<Polynomial> canonical_set(std::vector<Polynomial> basis) {
    std::sort(basis.begin(), basis.end(),
              [](const Polynomial& a, const Polynomial& b) { return a.terms() < b.terms(); });
    return basis;
}

}  // namespace

bool VerificationReport::passed() const {
    return checks.size() == kVerifyChecks.size() &&
           std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

VerificationReport verify(int n, const Partition& lambda, PowerBound s, const VerifyOptions& options) {
    check_parameters(n, lambda, s);
    const MonomialOrder grevlex = MonomialOrder::grevlex();
    VerificationReport report{n, lambda, s, {}, {}};
    std::vector<Polynomial> gs;
    bool built = false;

    auto run = [&](const std::string& name, bool needs_construction, const std::function<std::string()>& body) {
        CheckResult result{name, false, "", 0};
        const auto start = Clock::now();
        if (needs_construction && !built) {
            result.detail = "not run: construction failed";
        } else {
            try {
                result.detail = body();
                result.pass = result.detail.empty();
            } catch (const std::exception& e) {
                result.detail = e.what();
            }
        }
        result.ms = elapsed_ms(start);
        report.checks.push_back(std::move(result));
    };

    // 1. Construction; every element is checked as it is built.
    run("construct", false, [&]() -> std::string {
        report.elements = build_G(n, lambda);
        gs = build_G_s(n, lambda, s);
        for (const auto& e : report.elements) check_element(e, lambda);
        built = true;
        return "";
    });

    run("certify", true, [&]() -> std::string {
        for (const auto& e : report.elements) {
            if (!certify_membership(e.poly, lambda)) {
                return "certificate of element " + composition_to_string(e.target) + " does not expand to " +
                       e.poly.value.to_string();
            }
        }
        return "";
    });

    run("groebner", true, [&]() -> std::string {
        return is_groebner(gs, grevlex) ? "" : "some S-polynomial has nonzero normal form";
    });

    run("leading-monomials", true, [&]() -> std::string {
        std::set<ExponentVector> got;
        for (const auto& g : gs) got.insert(g.leading_term(grevlex).exponent);
        std::set<ExponentVector> want;
        for (const auto& alpha : build_D_direct(n, lambda)) want.emplace(alpha);
        if (s) {
            for (int i = 1; i <= n; ++i) want.insert(ExponentVector::unit(n, i, *s));
        }
        return set_difference_detail(got, want);
    });

    std::optional<GroebnerBasis> oracle;
    auto oracle_basis = [&]() -> const GroebnerBasis& {
        if (!oracle) oracle = reduce_basis(buchberger(generators(n, lambda, s), grevlex));
        return *oracle;
    };

    run("standard-monomials", true, [&]() -> std::string {
        const GroebnerBasis ours{grevlex, gs, false, n};
        std::set<ExponentVector> want;
        std::optional<int> bound;
        if (s) {
            for (const auto& a : enumerate_A(n, lambda, *s)) want.insert(a);
        } else {
            if (options.degree_bound) {
                bound = *options.degree_bound;
            } else {
                bound = n + lambda.size();
                for (const auto& m : oracle_basis().leading_monomials()) bound = std::max(*bound, m.degree() + 1);
            }
            all_compositions(n, *bound, [&](const WeakComposition& alpha) {
                if (in_C(alpha, lambda, kInfinite)) want.emplace(alpha);
            });
            const MonomialIdeal initial(ours.leading_monomials());
            for (const auto& g : initial.min_gens()) {
                if (g.degree() >= *bound) {
                    return "degree bound " + std::to_string(*bound) + " does not clear minimal generator " +
                           g.to_string();
                }
            }
        }
        for (const auto* basis : {&ours, &oracle_basis()}) {
            const auto ms = standard_monomials(*basis, bound);
            const std::string diff = set_difference_detail({ms.begin(), ms.end()}, want);
            if (!diff.empty()) return (basis == &ours ? "construction: " : "oracle reduced basis: ") + diff;
        }
        return "";
    });

    run("reduced-basis", true, [&]() -> std::string {
        const GroebnerBasis ours = reduce_basis({grevlex, gs, false, n});
        const GroebnerBasis& theirs = oracle_basis();
        if (ours.elements == theirs.elements) return "";
        return "reduce(G) = " + basis_listing(ours.elements) + " but Buchberger gives " +
               basis_listing(theirs.elements);
    });

    return report;
}

Json report_to_json(const VerificationReport& report, bool include_elements) {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    Json out{{"schema", 1},
             {"params", {{"n", report.n}, {"lambda", report.lambda.parts()}, {"s", power_bound_to_string(report.s)}}},
             {"pass", report.passed()},
             {"checks", checks}};
    if (include_elements) {
        Json elements = Json::array();
        for (const auto& e : report.elements) {
            elements.push_back({{"target", composition_to_json(e.target)}, {"poly", polynomial_to_json(e.poly.value)}});
        }
        out["elements"] = elements;
    }
    return out;
}

std::size_t SweepReport::count(CellStatus status) const {
    return static_cast<std::size_t>(
        std::count_if(cells.begin(), cells.end(), [&](const SweepCell& c) { return c.status == status; }));
}

std::string cell_status_name(CellStatus status) {
    switch (status) {
        case CellStatus::agree: return "agree";
        case CellStatus::disagree: return "disagree";
        case CellStatus::skipped: return "skipped";
    }
    return "?";
}

std::vector<SweepCell> sweep_cells(const SweepSpec& spec) {
    if (spec.n_min < 1 || spec.n_max < spec.n_min) throw InvalidInput("need 1 <= n_min <= n_max");
    if (spec.orders.empty()) throw InvalidInput("sweep needs at least one order");
    std::vector<SweepCell> cells;
    for (int n = spec.n_min; n <= spec.n_max; ++n) {
        for (int size = 1; size <= n + 1; ++size) {
            for (const auto& lambda : partitions_of(size)) {
                for (int s = lambda.length(); s <= spec.s_max; ++s) cells.push_back({n, lambda, s, CellStatus::skipped, "", 0});
                if (spec.include_infinite) cells.push_back({n, lambda, kInfinite, CellStatus::skipped, "", 0});
            }
        }
    }
    return cells;
}

SweepReport conjecture_sweep(const SweepSpec& spec) {
    SweepReport report{spec, sweep_cells(spec)};

    auto run_cell = [&](SweepCell& cell) {
        const auto start = Clock::now();
        try {
            const auto gens = generators(cell.n, cell.lambda, cell.s);
            BuchbergerOptions options;
            options.deadline = start + spec.cell_timeout;
            std::vector<std::vector<Polynomial>> bases;
            for (const auto& order : spec.orders) {
                bases.push_back(canonical_set(reduce_basis(buchberger(gens, order, options)).elements));
            }
            cell.status = CellStatus::agree;
            for (std::size_t k = 1; k < bases.size(); ++k) {
                if (bases[k] != bases[0]) {
                    cell.status = CellStatus::disagree;
                    cell.detail = spec.orders[0].name() + ": " + basis_listing(bases[0]) + " vs " +
                                  spec.orders[k].name() + ": " + basis_listing(bases[k]);
                    break;
                }
            }
        } catch (const ComputationTimeout&) {
            cell.status = CellStatus::skipped;
            cell.detail = "timed out";
        }
        cell.ms = elapsed_ms(start);
    };

    unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(report.cells.size()));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < report.cells.size(); i = next++) {
            try {
                run_cell(report.cells[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return report;
}

Json sweep_to_json(const SweepReport& report) {
    Json orders = Json::array();
    for (const auto& o : report.spec.orders) orders.push_back(o.name());
    Json cells = Json::array();
    for (const auto& c : report.cells) {
        Json cell{{"n", c.n},
                  {"lambda", c.lambda.parts()},
                  {"s", power_bound_to_string(c.s)},
                  {"status", cell_status_name(c.status)}};
        if (!c.detail.empty()) cell["detail"] = c.detail;
        cells.push_back(cell);
    }
    return Json{{"schema", 1},
                {"spec",
                 {{"n_max", report.spec.n_max},
                  {"s_max", report.spec.s_max},
                  {"include_inf", report.spec.include_infinite},
                  {"orders", orders}}},
                {"pass", report.passed()},
                {"counts",
                 {{"agree", report.count(CellStatus::agree)},
                  {"disagree", report.count(CellStatus::disagree)},
                  {"skipped", report.count(CellStatus::skipped)}}},
                {"cells", cells}};
}

}  // namespace griffin
