#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "griffin/construct.hpp"
#include "griffin/io.hpp"
#include "griffin/order.hpp"
#include "griffin/partition.hpp"
#include "griffin/staircase.hpp"

namespace griffin {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double ms = 0;
};

struct VerificationReport {
    int n = 0;
    Partition lambda;
    PowerBound s;
    std::vector<CheckResult> checks;
    // G_{n,lambda} as built, for inspection.
    std::vector<GroebnerElement> elements;

    bool passed() const;
};

struct VerifyOptions {
    // Degree bound for the s = infinity comparison. When unset it is
    // n + |lambda|, raised to one more than the largest leading monomial of
    // the reduced basis when that is not enough.
    std::optional<int> degree_bound;
};

// Check names, in the order they run.
inline const std::vector<std::string> kVerifyChecks = {
    "construct", "certify", "groebner", "leading-monomials", "standard-monomials", "reduced-basis",
};

// Builds G_{n,lambda,s} and checks it against the Buchberger oracle and the
// combinatorial descriptions. Failures are recorded, not thrown; invalid
// parameters throw InvalidInput.
VerificationReport verify(int n, const Partition& lambda, PowerBound s, const VerifyOptions& options = {});

// Timings are excluded.
Json report_to_json(const VerificationReport& report, bool include_elements = true);

struct SweepSpec {
    int n_min = 1;
    int n_max = 4;
    int s_max = 4;
    bool include_infinite = true;
    std::vector<MonomialOrder> orders = {MonomialOrder::grevlex(), MonomialOrder::lex()};
    std::chrono::milliseconds cell_timeout{60000};
    unsigned threads = 0;  // 0: hardware concurrency
};

enum class CellStatus { agree, disagree, skipped };

struct SweepCell {
    int n = 0;
    Partition lambda;
    PowerBound s;
    CellStatus status = CellStatus::skipped;
    std::string detail;
    double ms = 0;
};

struct SweepReport {
    SweepSpec spec;
    std::vector<SweepCell> cells;  // sorted by (n, |lambda|, lambda, s)

    std::size_t count(CellStatus status) const;
    bool passed() const { return count(CellStatus::disagree) == 0 && count(CellStatus::skipped) == 0; }
};

// Every (n, lambda, s) with n_min <= n <= n_max, 1 <= |lambda| <= n + 1 and
// s in {l(lambda), ..., s_max} plus infinity when requested.
std::vector<SweepCell> sweep_cells(const SweepSpec& spec);

// Reduced bases of I_{n,lambda,s} from its generators under every order,
// compared as sets of polynomials.
SweepReport conjecture_sweep(const SweepSpec& spec);

Json sweep_to_json(const SweepReport& report);

std::string cell_status_name(CellStatus status);

}  // namespace griffin
