#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "milnorq/expr.hpp"
#include "milnorq/io.hpp"
#include "milnorq/milnor.hpp"
#include "milnorq/obstruction.hpp"
#include "milnorq/steenrod.hpp"

namespace {

using namespace milnorq;

struct RunConfig {
    long long p = 0;  // 0 = not given
    int k = 0;
    int n = 0;
    int m = 0;
    int n_max = 2;
    std::string format = "text";
    std::uint64_t seed = 0;
    int recursion_cap = -1;
    long long exp_cap = Context::kDefaultExpCap;
    std::string expression;
    bool all_n = false;
    bool corrupt_rho = false;  // test fixture: deliberately break the sign rule
};

Context make_context(const RunConfig& cfg, long long p, int k) {
    return Context(p, k, cfg.exp_cap, cfg.recursion_cap);
}

int cmd_eval(const RunConfig& cfg) {
    long long p = cfg.p ? cfg.p : 2;
    int k = cfg.k ? cfg.k : 3;
    Context ctx = make_context(cfg, p, k);
    Element result = eval_expression(cfg.expression, ctx);
    std::string degree = "none";
    if (!result.is_zero()) {
        auto d = result.degree();
        degree = d ? std::to_string(*d) : "mixed";
    }
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["expression"] = cfg.expression;
        j["result"] = format_element(result);
        j["degree"] = degree;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << format_element(result) << "\n";
        std::cout << "degree: " << degree << "\n";
    }
    return 0;
}

// One verification cell: closed form vs both engines, vanishing threshold,
// coefficient, count and degree checks, plus seeded derivation-rule samples.
struct CellReport {
    long long p;
    int n;
    int m;
    bool pass = true;
    std::string detail;
};

Element random_homogeneous(const Context& ctx, long long max_degree,
                           std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> deg_dist(1, max_degree);
    long long target = deg_dist(rng);
    Element out(ctx);
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<long long> coeff(1, ctx.p - 1);
    int wanted = nterms(rng);
    for (int t = 0; t < wanted; ++t) {
        Monomial m(ctx.k);
        long long remaining = target;
        if (ctx.odd()) {
            std::vector<int> order(static_cast<std::size_t>(ctx.k));
            for (int i = 0; i < ctx.k; ++i) order[static_cast<std::size_t>(i)] = i + 1;
            std::shuffle(order.begin(), order.end(), rng);
            for (int i : order) {
                if (remaining >= 1 && rng() % 2 == 0) {
                    m.ext.push_back(i);
                    remaining -= 1;
                }
            }
            std::sort(m.ext.begin(), m.ext.end());
            if (remaining % 2 == 1) {
                // Parity cannot be met with y's alone; add/remove one x.
                bool fixed = false;
                for (int i = 1; i <= ctx.k && !fixed; ++i) {
                    if (std::find(m.ext.begin(), m.ext.end(), i) == m.ext.end()) {
                        m.ext.push_back(i);
                        std::sort(m.ext.begin(), m.ext.end());
                        remaining -= 1;
                        fixed = true;
                    }
                }
                if (!fixed && !m.ext.empty()) {
                    m.ext.pop_back();
                    remaining += 1;
                }
            }
            for (int i = 0; i < ctx.k && remaining > 0; ++i) {
                std::uniform_int_distribution<long long> e(0, remaining / 2);
                long long pick = (i + 1 == ctx.k) ? remaining / 2 : e(rng);
                m.exps[static_cast<std::size_t>(i)] = pick;
                remaining -= 2 * pick;
            }
            if (remaining != 0) continue;
        } else {
            for (int i = 0; i < ctx.k && remaining > 0; ++i) {
                std::uniform_int_distribution<long long> e(0, remaining);
                long long pick = (i + 1 == ctx.k) ? remaining : e(rng);
                m.exps[static_cast<std::size_t>(i)] = pick;
                remaining -= pick;
            }
            if (remaining != 0) continue;
        }
        out.add_term(m, coeff(rng));
    }
    return out;
}

CellReport verify_cell(const RunConfig& cfg, long long p, int n, int m) {
    CellReport rep{p, n, m};
    std::ostringstream why;
    Context ctx = make_context(cfg, p, m);

    Element closed = closed_form(n, m, ctx);
    if (cfg.corrupt_rho && ctx.odd() && !closed.is_zero()) {
        // Flip the sign of the leading term, as a wrong rho rule would.
        const auto& [mono, c] = *closed.terms().begin();
        closed.add_term(mono, -2 * c);
    }
    Element via_derivation = iterated_q(n, top_class(m, ctx), QEngine::derivation);
    Element via_recursive = iterated_q(n, top_class(m, ctx), QEngine::recursive);

    if (!(closed == via_derivation) || !(closed == via_recursive)) {
        rep.pass = false;
        why << "engine mismatch:\n"
            << "    closed_form: " << format_element(closed) << "\n"
            << "    derivation:  " << format_element(via_derivation) << "\n"
            << "    recursive:   " << format_element(via_recursive) << "\n";
    }
    bool should_vanish = (m <= n);
    if (closed.is_zero() != should_vanish) {
        rep.pass = false;
        why << "vanishing threshold violated (m=" << m << ", n=" << n << ")\n";
    }
    if (closed.term_count() != static_cast<std::size_t>(monomial_count(n, m))) {
        rep.pass = false;
        why << "term count " << closed.term_count() << " != "
            << monomial_count(n, m) << "\n";
    }
    for (const auto& [mono, c] : closed.terms()) {
        if (c != 1 && c != p - 1) {
            rep.pass = false;
            why << "coefficient " << c << " is not +-1\n";
            break;
        }
    }
    if (!closed.is_zero()) {
        long long expected = m + q_degree_sum(p, n);
        if (*closed.degree() != expected) {
            rep.pass = false;
            why << "degree " << *closed.degree() << " != " << expected << "\n";
        }
    }

    // Seeded spot-check of the derivation rule on random homogeneous pairs.
    std::mt19937_64 rng(cfg.seed ^ (static_cast<std::uint64_t>(p) << 32) ^
                        (static_cast<std::uint64_t>(n) << 16) ^
                        static_cast<std::uint64_t>(m));
    Context rctx = make_context(cfg, p, std::max(m, 2));
    for (int trial = 0; trial < 5; ++trial) {
        Element a = random_homogeneous(rctx, 4, rng);
        Element b = random_homogeneous(rctx, 4, rng);
        if (a.is_zero() || b.is_zero()) continue;
        Element lhs = milnor_q_derivation(n, a * b);
        long long sign = (*a.degree() % 2 == 0) ? 1 : -1;
        Element rhs = milnor_q_derivation(n, a) * b +
                      (a * milnor_q_derivation(n, b)).scaled(sign);
        if (!(lhs == rhs)) {
            rep.pass = false;
            why << "derivation rule failed on sampled pair\n";
            break;
        }
    }
    rep.detail = why.str();
    return rep;
}

int cmd_verify(const RunConfig& cfg) {
    std::vector<long long> primes =
        cfg.p ? std::vector<long long>{cfg.p} : std::vector<long long>{2, 3, 5};
    bool all_pass = true;
    std::vector<CellReport> reports;
    for (long long p : primes) {
        for (int n = 0; n <= cfg.n_max; ++n) {
            for (int m = 1; m <= n + 3; ++m) {
                reports.push_back(verify_cell(cfg, p, n, m));
                all_pass = all_pass && reports.back().pass;
            }
        }
    }
    if (cfg.format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& r : reports) {
            nlohmann::ordered_json cell;
            cell["p"] = r.p;
            cell["n"] = r.n;
            cell["m"] = r.m;
            cell["pass"] = r.pass;
            if (!r.pass) cell["detail"] = r.detail;
            j.push_back(cell);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << "p=" << r.p << " n=" << r.n << " m=" << r.m << ": "
                      << (r.pass ? "PASS" : "FAIL") << "\n";
            if (!r.pass) std::cout << "  " << r.detail;
        }
        std::cout << (all_pass ? "all cells pass" : "verification failed") << "\n";
    }
    return all_pass ? 0 : 1;
}

int cmd_certify(const RunConfig& cfg) {
    long long p = cfg.p ? cfg.p : 2;
    std::vector<Certificate> certs;
    if (cfg.all_n) {
        for (int n = 0; n <= cfg.n_max; ++n) certs.push_back(minimal_example(p, n));
    } else {
        certs.push_back(minimal_example(p, cfg.n));
    }
    if (cfg.format == "json") {
        if (certs.size() == 1) {
            std::cout << certificate_to_json(certs[0]) << "\n";
        } else {
            std::cout << "[\n";
            for (std::size_t i = 0; i < certs.size(); ++i) {
                std::istringstream in(certificate_to_json(certs[i]));
                std::string line;
                while (std::getline(in, line)) std::cout << "  " << line << "\n";
                if (i + 1 < certs.size()) std::cout << ",\n";
            }
            std::cout << "]\n";
        }
    } else {
        for (const auto& c : certs) std::cout << certificate_to_text(c);
    }
    return 0;
}

int cmd_table(const RunConfig& cfg) {
    long long p = cfg.p ? cfg.p : 2;
    auto rows = tower_degree_table(p, cfg.n_max);
    if (cfg.format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json row;
            row["n"] = r.n;
            row["q_degree"] = r.q_degree;
            row["v_shift"] = r.v_shift;
            row["w"] = r.w_value;
            row["wilson_bound"] = r.wilson_bound;
            row["min_bp_degree"] = r.min_bp_degree;
            row["variety_dimension"] = r.variety_dimension;
            j.push_back(row);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << std::left << std::setw(4) << "n" << std::setw(10) << "|Q_n|"
                  << std::setw(10) << "v-shift" << std::setw(10) << "w(n)"
                  << std::setw(10) << "wilson" << std::setw(12) << "bp_degree"
                  << std::setw(10) << "dim" << "\n";
        for (const auto& r : rows) {
            std::cout << std::left << std::setw(4) << r.n << std::setw(10)
                      << r.q_degree << std::setw(10) << r.v_shift << std::setw(10)
                      << r.w_value << std::setw(10) << r.wilson_bound
                      << std::setw(12) << r.min_bp_degree << std::setw(10)
                      << r.variety_dimension << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{
        "Milnor-operation calculus on H*((Z/p)^k; F_p) and non-liftability "
        "certificates for the Brown-Peterson tower"};
    app.fallthrough();
    app.require_subcommand(1);

    app.add_option("--p", cfg.p, "prime p");
    app.add_option("--k", cfg.k, "generator count");
    app.add_option("--n", cfg.n, "tower level n");
    app.add_option("--m", cfg.m, "class length m");
    app.add_option("--n-max", cfg.n_max, "largest tower level (verify/certify/table)");
    app.add_option("--format", cfg.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", cfg.seed, "seed for randomized property sampling");
    app.add_option("--recursion-cap", cfg.recursion_cap, "cap on the Q index");
    app.add_option("--exp-cap", cfg.exp_cap, "cap on polynomial exponents");

    auto* eval = app.add_subcommand("eval", "evaluate an operation expression");
    eval->add_option("expression", cfg.expression, "e.g. \"Q1*Q0(x1*x2)\"")
        ->required();

    auto* verify = app.add_subcommand(
        "verify", "run the closed-form vs engine checks over a parameter grid");
    verify->add_flag("--corrupt-rho", cfg.corrupt_rho)->group("");

    auto* certify =
        app.add_subcommand("certify", "emit non-liftability certificates");
    certify->add_flag("--all-n", cfg.all_n, "one certificate per n <= n-max");

    app.add_subcommand("table", "print the tower degree table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(eval)) return cmd_eval(cfg);
        if (app.got_subcommand(verify)) return cmd_verify(cfg);
        if (app.got_subcommand(certify)) return cmd_certify(cfg);
        return cmd_table(cfg);
    } catch (const milnorq::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const milnorq::cap_error& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const milnorq::internal_error& e) {
        std::cerr << "internal assertion failure: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
