#include "griffin/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "griffin/buchberger.hpp"
#include "griffin/construct.hpp"
#include "griffin/dset.hpp"
#include "griffin/errors.hpp"
#include "griffin/io.hpp"
#include "griffin/verify.hpp"

namespace griffin {

int max_n_from_env() {
    const char* raw = std::getenv("GRIFFIN_MAX_N");
    if (!raw || !*raw) return 7;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (*end != '\0' || v < 1 || v > kMaxVariables) {
        throw InvalidInput(std::string("GRIFFIN_MAX_N must be an integer in 1..64, got \"") + raw + "\"");
    }
    return static_cast<int>(v);
}

namespace {

struct Common {
    int n = 0;
    std::string lambda_text;
    std::string s_text = "inf";
    bool json = false;
};

Partition parse_lambda(const std::string& text) {
    const Partition lambda = Partition::parse(text);
    if (lambda.empty()) throw InvalidInput("the empty partition is not accepted");
    return lambda;
}

void require_n(int n, int lo = 1) {
    if (n < lo) throw InvalidInput("n must be at least " + std::to_string(lo));
    const int cap = max_n_from_env();
    if (n > cap) {
        throw InvalidInput("n = " + std::to_string(n) + " exceeds GRIFFIN_MAX_N = " + std::to_string(cap));
    }
}

void require_size(int n, const Partition& lambda, int slack) {
    if (lambda.size() > n + slack) {
        throw InvalidInput("need |lambda| <= n" + std::string(slack ? " + 1" : "") + ", got |lambda| = " +
                           std::to_string(lambda.size()));
    }
}

PowerBound parse_s(const std::string& text, const Partition& lambda) {
    const PowerBound s = parse_power_bound(text);
    if (s && *s < lambda.length()) {
        throw InvalidInput("s = " + std::to_string(*s) + " is smaller than l(lambda) = " +
                           std::to_string(lambda.length()));
    }
    return s;
}

Json header(int n, const Partition& lambda, PowerBound s) {
    return Json{{"schema", 1}, {"n", n}, {"lambda", lambda.parts()}, {"s", power_bound_to_string(s)}};
}

WeakComposition parse_composition(const std::string& text) {
    WeakComposition out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int v = -1;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || v < 0) throw InvalidInput("bad composition entry \"" + item + "\"");
        out.push_back(v);
    }
    if (out.empty()) throw InvalidInput("empty composition");
    return out;
}

void add_common(CLI::App* cmd, Common& c, bool with_s) {
    cmd->add_option("n", c.n, "number of variables")->required();
    cmd->add_option("lambda", c.lambda_text, "partition, e.g. 3,2,1")->required();
    if (with_s) cmd->add_option("--s", c.s_text, "power bound: integer or inf");
    cmd->add_flag("--json", c.json, "machine-readable output");
}

void print_basis(std::ostream& out, const GroebnerBasis& basis) {
    for (const auto& g : basis.elements) out << g.to_string() << "\n";
}

Json basis_json(const GroebnerBasis& basis) {
    Json elements = Json::array();
    for (const auto& g : basis.elements) elements.push_back(polynomial_to_json(g));
    return elements;
}

void write_json(std::ostream& out, const Json& j, const std::string& path) {
    if (path.empty()) {
        out << j.dump(2) << "\n";
        return;
    }
    std::ofstream file(path);
    if (!file) throw InvalidInput("cannot write " + path);
    file << j.dump(2) << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Groebner bases for Griffin's ideals I_{n,lambda,s}", "griffin"};
    app.require_subcommand(1);
    std::function<int()> action;

    Common gens_opt;
    auto* gens = app.add_subcommand("gens", "generators of I_{n,lambda,s}");
    add_common(gens, gens_opt, true);
    gens->callback([&] {
        action = [&] {
            const auto& o = gens_opt;
            require_n(o.n);
            const Partition lambda = parse_lambda(o.lambda_text);
            require_size(o.n, lambda, 1);
            const PowerBound s = parse_s(o.s_text, lambda);
            const auto keys = generator_keys(o.n, lambda);
            const auto polys = generators(o.n, lambda, s);
            Json list = Json::array();
            for (std::size_t i = 0; i < polys.size(); ++i) {
                Json item{{"poly", polynomial_to_json(polys[i])}};
                if (i < keys.size()) {
                    item["d"] = keys[i].d;
                    item["set"] = keys[i].set;
                }
                list.push_back(item);
                if (!o.json) {
                    if (i < keys.size()) out << keys[i].to_string() << " = ";
                    out << polys[i].to_string() << "\n";
                }
            }
            if (o.json) {
                Json j = header(o.n, lambda, s);
                j["generators"] = list;
                out << j.dump(2) << "\n";
            }
            return kExitOk;
        };
    });

    Common gb_opt;
    bool gb_certify = false;
    auto* gb = app.add_subcommand("gb", "the recursive Groebner basis G_{n,lambda,s}");
    add_common(gb, gb_opt, true);
    gb->add_flag("--certify", gb_certify, "check and print membership certificates");
    gb->callback([&] {
        action = [&] {
            const auto& o = gb_opt;
            require_n(o.n);
            const Partition lambda = parse_lambda(o.lambda_text);
            require_size(o.n, lambda, 1);
            const PowerBound s = parse_s(o.s_text, lambda);
            const auto elements = build_G(o.n, lambda);
            int status = kExitOk;
            Json list = Json::array();
            for (const auto& e : elements) {
                Json item{{"target", composition_to_json(e.target)}, {"poly", polynomial_to_json(e.poly.value)}};
                if (!o.json) out << composition_to_string(e.target) << ": " << e.poly.value.to_string() << "\n";
                if (gb_certify) {
                    const bool ok = certify_membership(e.poly, lambda);
                    if (!ok) status = kExitCheckFailed;
                    item["certified"] = ok;
                    item["combination"] = certificate_to_json(e.poly);
                    if (!o.json) {
                        for (const auto& [key, cofactor] : e.poly.combination) {
                            out << "    + (" << cofactor.to_string() << ") * " << key.to_string() << "\n";
                        }
                        out << "    certificate " << (ok ? "ok" : "FAILED") << "\n";
                    }
                }
                list.push_back(item);
            }
            Json powers = Json::array();
            if (s) {
                for (int i = 1; i <= o.n; ++i) {
                    const Polynomial p = Polynomial::monomial(ExponentVector::unit(o.n, i, *s));
                    powers.push_back(polynomial_to_json(p));
                    if (!o.json) out << "power: " << p.to_string() << "\n";
                }
            }
            if (o.json) {
                Json j = header(o.n, lambda, s);
                j["elements"] = list;
                j["powers"] = powers;
                out << j.dump(2) << "\n";
            }
            return status;
        };
    });

    Common rgb_opt;
    std::string rgb_order = "grevlex";
    auto* rgb = app.add_subcommand("reduced-gb", "reduced Groebner basis by Buchberger's algorithm");
    add_common(rgb, rgb_opt, true);
    rgb->add_option("--order", rgb_order, "grevlex or lex")->check(CLI::IsMember({"grevlex", "lex"}));
    rgb->callback([&] {
        action = [&] {
            const auto& o = rgb_opt;
            require_n(o.n);
            const Partition lambda = parse_lambda(o.lambda_text);
            require_size(o.n, lambda, 1);
            const PowerBound s = parse_s(o.s_text, lambda);
            const MonomialOrder order = MonomialOrder::parse(rgb_order);
            const GroebnerBasis basis = reduce_basis(buchberger(generators(o.n, lambda, s), order));
            if (o.json) {
                Json j = header(o.n, lambda, s);
                j["order"] = order.name();
                j["basis"] = basis_json(basis);
                out << j.dump(2) << "\n";
            } else {
                print_basis(out, basis);
            }
            return kExitOk;
        };
    });

    Common basis_opt;
    std::optional<int> basis_max_deg;
    auto* basis = app.add_subcommand("basis", "Griffin's monomial basis A_{n,lambda,s}");
    add_common(basis, basis_opt, true);
    basis->add_option("--max-deg", basis_max_deg, "degree cap, required for s = inf");
    basis->callback([&] {
        action = [&] {
            const auto& o = basis_opt;
            require_n(o.n);
            const Partition lambda = parse_lambda(o.lambda_text);
            require_size(o.n, lambda, 1);
            const PowerBound s = parse_s(o.s_text, lambda);
            std::vector<WeakComposition> members;
            if (s) {
                for (const auto& a : enumerate_A(o.n, lambda, *s)) {
                    if (!basis_max_deg || a.degree() <= *basis_max_deg) members.push_back(a.entries());
                }
            } else {
                if (!basis_max_deg) throw InvalidInput("A_{n,lambda,inf} is infinite; pass --max-deg");
                if (*basis_max_deg < 0) throw InvalidInput("--max-deg must be non-negative");
                const GroebnerBasis all{MonomialOrder::grevlex(), {}, false, o.n};
                for (const auto& a : standard_monomials(all, *basis_max_deg)) {
                    if (in_C(a.entries(), lambda, kInfinite)) members.push_back(a.entries());
                }
            }
            if (o.json) {
                Json j = header(o.n, lambda, s);
                j["count"] = members.size();
                j["monomials"] = members;
                out << j.dump(2) << "\n";
            } else {
                for (const auto& a : members) out << composition_to_string(a) << "\n";
                out << members.size() << " monomials\n";
            }
            return kExitOk;
        };
    });

    Common dset_opt;
    bool dset_direct = false;
    bool dset_minimal = false;
    auto* dset = app.add_subcommand("dset", "the set D_{n,lambda} of leading exponents");
    add_common(dset, dset_opt, false);
    dset->add_flag("--direct", dset_direct, "exhaustive search instead of the recursion");
    dset->add_flag("--minimal", dset_minimal, "only entrywise-minimal members");
    dset->callback([&] {
        action = [&] {
            const auto& o = dset_opt;
            require_n(o.n);
            const Partition lambda = parse_lambda(o.lambda_text);
            require_size(o.n, lambda, 1);
            CompositionSet d = dset_direct ? build_D_direct(o.n, lambda) : build_D(o.n, lambda);
            if (dset_minimal) d = minimal_elements(d);
            if (o.json) {
                Json j{{"schema", 1}, {"n", o.n}, {"lambda", lambda.parts()}, {"count", d.size()}};
                j["members"] = Json(std::vector<WeakComposition>(d.begin(), d.end()));
                out << j.dump(2) << "\n";
            } else {
                for (const auto& a : d) out << composition_to_string(a) << "\n";
            }
            return kExitOk;
        };
    });

    Common code_opt;
    std::string code_file;
    auto* code_cmd = app.add_subcommand("code", "coinversion code of a container diagram");
    add_common(code_cmd, code_opt, false);
    code_cmd->add_option("--diagram", code_file, "diagram JSON file")->required();
    code_cmd->callback([&] {
        action = [&] {
            const auto& o = code_opt;
            if (o.n < 1) throw InvalidInput("n must be positive");
            const Partition lambda = parse_lambda(o.lambda_text);
            std::ifstream file(code_file);
            if (!file) throw InvalidInput("cannot read " + code_file);
            Json j;
            try {
                j = Json::parse(file);
            } catch (const nlohmann::json::exception& e) {
                throw InvalidInput(std::string("malformed JSON: ") + e.what());
            }
            const ContainerDiagram sigma = diagram_from_json(j);
            if (sigma.lambda() != lambda) {
                throw InvalidInput("diagram shape is for lambda = " + sigma.lambda().to_string() + ", not " +
                                   lambda.to_string());
            }
            if (sigma.n() != o.n) throw InvalidInput("diagram holds " + std::to_string(sigma.n()) + " numbers");
            const WeakComposition c = code(sigma);
            if (o.json) {
                out << Json{{"schema", 1}, {"code", c}}.dump(2) << "\n";
            } else {
                out << composition_to_string(c) << "\n";
            }
            return kExitOk;
        };
    });

    Common decode_opt;
    std::string decode_alpha;
    auto* decode = app.add_subcommand("decode", "container diagram with a given coinversion code");
    add_common(decode, decode_opt, false);
    decode->add_option("alpha", decode_alpha, "weak composition, e.g. 1,0,2")->required();
    decode->callback([&] {
        action = [&] {
            const auto& o = decode_opt;
            if (o.n < 1) throw InvalidInput("n must be positive");
            const Partition lambda = parse_lambda(o.lambda_text);
            const WeakComposition alpha = parse_composition(decode_alpha);
            if (static_cast<int>(alpha.size()) != o.n) {
                throw InvalidInput("alpha has " + std::to_string(alpha.size()) + " entries, expected " +
                                   std::to_string(o.n));
            }
            const ContainerDiagram sigma = code_inv(alpha, lambda);
            if (o.json) {
                Json j = diagram_to_json(sigma);
                j["schema"] = 1;
                out << j.dump(2) << "\n";
            } else {
                out << sigma.render();
            }
            return kExitOk;
        };
    });

    Common verify_opt;
    std::string verify_out;
    std::optional<int> verify_bound;
    auto* verify_cmd = app.add_subcommand("verify", "check G_{n,lambda,s} against the oracle");
    add_common(verify_cmd, verify_opt, true);
    verify_cmd->add_option("--out", verify_out, "write the JSON report here");
    verify_cmd->add_option("--degree-bound", verify_bound, "degree bound for s = inf (default: n + |lambda| or past the top reduced leading degree, whichever is larger)");
    verify_cmd->callback([&] {
        action = [&] {
            const auto& o = verify_opt;
            require_n(o.n);
            const Partition lambda = parse_lambda(o.lambda_text);
            require_size(o.n, lambda, 1);
            const PowerBound s = parse_s(o.s_text, lambda);
            const VerificationReport report = verify(o.n, lambda, s, {verify_bound});
            if (o.json || !verify_out.empty()) write_json(out, report_to_json(report), verify_out);
            if (!o.json) {
                out << "verify n=" << o.n << " lambda=" << lambda.to_string() << " s=" << power_bound_to_string(s)
                    << "\n";
                for (const auto& c : report.checks) {
                    out << "  " << (c.pass ? "PASS " : "FAIL ") << c.name;
                    if (!c.detail.empty()) out << ": " << c.detail;
                    out << "\n";
                }
            }
            return report.passed() ? kExitOk : kExitCheckFailed;
        };
    });

    bool conj_json = false;
    SweepSpec conj_spec;
    int conj_timeout_s = 60;
    bool conj_no_inf = false;
    std::vector<std::string> conj_orders{"grevlex", "lex"};
    std::string conj_out;
    auto* conj = app.add_subcommand("conjecture", "compare reduced bases under lex and grevlex");
    conj->add_option("--n-max", conj_spec.n_max, "largest n");
    conj->add_option("--s-max", conj_spec.s_max, "largest finite s");
    conj->add_flag("--no-inf", conj_no_inf, "skip s = inf");
    conj->add_option("--orders", conj_orders, "orders to compare")
        ->delimiter(',')
        ->check(CLI::IsMember({"grevlex", "lex"}));
    conj->add_option("--timeout", conj_timeout_s, "per-cell timeout in seconds");
    conj->add_option("--threads", conj_spec.threads, "worker threads (0 = all cores)");
    conj->add_option("--out", conj_out, "write the JSON report here");
    conj->add_flag("--json", conj_json, "machine-readable output");
    conj->callback([&] {
        action = [&] {
            require_n(conj_spec.n_max);
            if (conj_timeout_s < 1) throw InvalidInput("--timeout must be positive");
            conj_spec.include_infinite = !conj_no_inf;
            conj_spec.cell_timeout = std::chrono::seconds(conj_timeout_s);
            conj_spec.orders.clear();
            for (const auto& name : conj_orders) conj_spec.orders.push_back(MonomialOrder::parse(name));
            const SweepReport report = conjecture_sweep(conj_spec);
            if (conj_json || !conj_out.empty()) write_json(out, sweep_to_json(report), conj_out);
            if (!conj_json) {
                for (const auto& c : report.cells) {
                    if (c.status == CellStatus::agree) continue;
                    out << cell_status_name(c.status) << " n=" << c.n << " lambda=" << c.lambda.to_string()
                        << " s=" << power_bound_to_string(c.s) << ": " << c.detail << "\n";
                }
                out << report.count(CellStatus::agree) << " agree, " << report.count(CellStatus::disagree)
                    << " disagree, " << report.count(CellStatus::skipped) << " skipped\n";
            }
            return report.passed() ? kExitOk : kExitCheckFailed;
        };
    });

    Common hilb_opt;
    std::optional<int> hilb_max_deg;
    auto* hilb = app.add_subcommand("hilbert", "Hilbert function of the quotient ring");
    add_common(hilb, hilb_opt, true);
    hilb->add_option("--max-deg", hilb_max_deg, "largest degree (default: top degree of a finite quotient)");
    hilb->callback([&] {
        action = [&] {
            const auto& o = hilb_opt;
            require_n(o.n);
            const Partition lambda = parse_lambda(o.lambda_text);
            require_size(o.n, lambda, 1);
            const PowerBound s = parse_s(o.s_text, lambda);
            const GroebnerBasis basis =
                reduce_basis(buchberger(generators(o.n, lambda, s), MonomialOrder::grevlex()));
            int max_deg = 0;
            if (hilb_max_deg) {
                max_deg = *hilb_max_deg;
            } else {
                if (!has_finite_quotient(basis)) throw InvalidInput("quotient is infinite; pass --max-deg");
                for (const auto& m : standard_monomials(basis, std::nullopt)) max_deg = std::max(max_deg, m.degree());
            }
            const auto h = hilbert_function(basis, max_deg);
            long total = 0;
            for (long v : h) total += v;
            if (o.json) {
                Json j = header(o.n, lambda, s);
                j["hilbert"] = h;
                j["total"] = total;
                out << j.dump(2) << "\n";
            } else {
                for (std::size_t d = 0; d < h.size(); ++d) out << (d ? " " : "") << h[d];
                out << "\ntotal " << total << "\n";
            }
            return kExitOk;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        return action ? action() : kExitUsage;
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const InvariantViolation& e) {
        err << "check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const ComputationTimeout& e) {
        err << "timeout: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}

}  // namespace griffin
