// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// argv[1] is the path to the CLI binary (used by criterion 8).

#include <array>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "milnorq/io.hpp"
#include "milnorq/milnor.hpp"
#include "milnorq/obstruction.hpp"
#include "milnorq/steenrod.hpp"

#include "testutil.hpp"

using namespace milnorq;

namespace {

std::string g_binary;
int g_failures = 0;

void report(const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << "  " << name << "\n";
    if (!pass) {
        if (!detail.empty()) std::cout << "      " << detail << "\n";
        ++g_failures;
    }
}

std::pair<int, std::string> run_cli(const std::string& args) {
    std::string cmd = g_binary + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    return {WEXITSTATUS(pclose(pipe)), out};
}

const std::vector<long long> kPrimes{2, 3, 5};

// 1. closed_form = derivation engine = recursive engine, exactly.
void criterion_oracle_triple_equality() {
    bool pass = true;
    std::string detail;
    for (long long p : kPrimes) {
        for (int n = 0; n <= 2 && pass; ++n) {
            for (int m = 1; m <= n + 3 && pass; ++m) {
                Context ctx(p, m);
                Element closed = closed_form(n, m, ctx);
                Element x = top_class(m, ctx);
                Element d = iterated_q(n, x, QEngine::derivation);
                Element r = iterated_q(n, x, QEngine::recursive);
                if (!(closed == d) || !(closed == r)) {
                    pass = false;
                    detail = "p=" + std::to_string(p) + " n=" + std::to_string(n) +
                             " m=" + std::to_string(m);
                }
            }
        }
    }
    report("1 oracle triple-equality (p in {2,3,5}, n<=2, m<=n+3)", pass, detail);
}

// 2. Q_n...Q_0(x1...xm) = 0 iff m <= n, over the grid.
void criterion_vanishing_threshold() {
    bool pass = true;
    std::string detail;
    for (long long p : kPrimes) {
        for (int n = 0; n <= 2 && pass; ++n) {
            for (int m = 1; m <= n + 3 && pass; ++m) {
                Context ctx(p, m);
                Element v = iterated_q(n, top_class(m, ctx), QEngine::derivation);
                bool should_vanish = (m <= n);
                if (v.is_zero() != should_vanish) {
                    pass = false;
                    detail = "p=" + std::to_string(p) + " n=" + std::to_string(n) +
                             " m=" + std::to_string(m);
                }
            }
        }
    }
    report("2 vanishing threshold (zero iff m <= n)", pass, detail);
}

// 3. Generator rules, both engines.
void criterion_generator_rules() {
    bool pass = true;
    std::string detail;
    {
        Context ctx(2, 1, Context::kDefaultExpCap, 6);
        Element x = Element::gen_x(ctx, 1);
        for (int i = 0; i <= 3 && pass; ++i) {
            Monomial want(1);
            want.exps[0] = 1LL << (i + 1);
            Element expected = Element::from_monomial(ctx, want, 1);
            if (!(milnor_q_derivation(i, x) == expected) ||
                !(milnor_q_recursive(i, x) == expected)) {
                pass = false;
                detail = "Q_" + std::to_string(i) + "(x) at p=2";
            }
            for (int t = 1; t <= 4 && pass; ++t) {
                Monomial even(1);
                even.exps[0] = 2 * t;
                Element xe = Element::from_monomial(ctx, even, 1);
                if (!milnor_q_derivation(i, xe).is_zero() ||
                    !milnor_q_recursive(i, xe).is_zero()) {
                    pass = false;
                    detail = "Q_" + std::to_string(i) + "(x^" +
                             std::to_string(2 * t) + ") at p=2";
                }
            }
        }
    }
    for (long long p : {3LL, 5LL}) {
        Context ctx(p, 1);
        Element x = Element::gen_x(ctx, 1);
        Element y = Element::gen_y(ctx, 1);
        for (int n = 0; n <= 2 && pass; ++n) {
            long long pn = 1;
            for (int i = 0; i < n; ++i) pn *= p;
            Monomial want(1);
            want.exps[0] = pn;
            Element expected = Element::from_monomial(ctx, want, 1);
            if (!(milnor_q_derivation(n, x) == expected) ||
                !(milnor_q_recursive(n, x) == expected) ||
                !milnor_q_derivation(n, y).is_zero() ||
                !milnor_q_recursive(n, y).is_zero()) {
                pass = false;
                detail = "Q_" + std::to_string(n) + " generator rule at p=" +
                         std::to_string(p);
            }
        }
    }
    report("3 generator rules (Q_i(x), Q_i(x^2t), Q_n(x_i), Q_n(y_i))", pass,
           detail);
}

// 4. Degree ledger identities.
void criterion_degree_ledger() {
    bool pass = true;
    std::string detail;
    for (long long p : kPrimes) {
        for (int n = 0; n <= 2 && pass; ++n) {
            for (int m = n + 1; m <= n + 3 && pass; ++m) {
                Context ctx(p, m);
                Element v = iterated_q(n, top_class(m, ctx), QEngine::derivation);
                if (v.is_zero() || *v.degree() - m != q_degree_sum(p, n)) {
                    pass = false;
                    detail = "composite degree shift at p=" + std::to_string(p);
                }
            }
            Certificate c = minimal_example(p, n);
            bool ok = c.bp_degree == 2 * w(p, n) + 2 &&
                      c.bp_degree == c.wilson_bound + 2 &&
                      c.variety_dimension == 2 * w(p, n + 1) + 1;
            if (p == 2) {
                ok = ok && c.bp_degree == (1LL << (n + 2)) &&
                     c.variety_dimension == (1LL << (n + 3)) - 1;
            }
            if (!ok) {
                pass = false;
                detail = "certificate degrees at p=" + std::to_string(p) +
                         " n=" + std::to_string(n);
            }
        }
    }
    report("4 degree ledger (2w(n)-n-1 shifts, 2w(n)+2 minima, dimensions)",
           pass, detail);
}

// 5. The n = 0, p = 2 base case certificate.
void criterion_base_case() {
    bool pass = true;
    std::string detail;
    try {
        Certificate c = minimal_example(2, 0);
        pass = c.source_class == "x1*x2*x3" && c.bp_degree == 4 &&
               c.variety_dimension == 7 && !c.witness.empty();
        auto [code, out] = run_cli("certify --p 2 --n 0 --format json");
        pass = pass && code == 0 &&
               out.find("\"source_class\": \"x1*x2*x3\"") != std::string::npos &&
               out.find("\"bp_degree\": 4") != std::string::npos &&
               out.find("\"variety_dimension\": 7") != std::string::npos;
        if (!pass) detail = "cli exit " + std::to_string(code);
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    report("5 base case certificate (p=2, n=0: degree 4, dimension 7)", pass,
           detail);
}

// 6. Structural properties.
void criterion_structural_properties() {
    bool pass = true;
    std::string detail;
    std::mt19937_64 rng(600613);

    // Derivation rule, 200 random homogeneous pairs per (p, n).
    for (long long p : kPrimes) {
        Context ctx(p, 3);
        for (int n = 0; n <= 2 && pass; ++n) {
            int checked = 0;
            while (checked < 200) {
                Element a = testutil::random_homogeneous(ctx, 6, rng);
                Element b = testutil::random_homogeneous(ctx, 6, rng);
                if (a.is_zero() || b.is_zero()) continue;
                long long sign = (*a.degree() % 2 == 0) ? 1 : -1;
                Element lhs = milnor_q_derivation(n, a * b);
                Element rhs = milnor_q_derivation(n, a) * b +
                              (a * milnor_q_derivation(n, b)).scaled(sign);
                if (!(lhs == rhs)) {
                    pass = false;
                    detail = "derivation rule p=" + std::to_string(p) +
                             " n=" + std::to_string(n);
                    break;
                }
                ++checked;
            }
        }
    }

    // Q_n^2 = 0 and odd-p anticommutation on all basis monomials, k<=3, deg<=10.
    for (long long p : kPrimes) {
        if (!pass) break;
        Context ctx(p, 3);
        for (const auto& mono : testutil::basis_up_to(ctx, 10)) {
            Element e = Element::from_monomial(ctx, mono, 1);
            for (int n = 0; n <= 2; ++n) {
                if (!milnor_q_derivation(n, milnor_q_derivation(n, e)).is_zero()) {
                    pass = false;
                    detail = "Q_n^2 != 0";
                }
            }
            for (int i = 0; i <= 2 && pass; ++i) {
                for (int j = 0; j < i; ++j) {
                    Element ij = milnor_q_derivation(i, milnor_q_derivation(j, e));
                    Element ji = milnor_q_derivation(j, milnor_q_derivation(i, e));
                    if (!(ij == (p == 2 ? ji : -ji))) {
                        pass = false;
                        detail = "Q_i Q_j commutation";
                    }
                }
            }
            if (!pass) break;
        }
    }

    // Cartan formula on 200 random pairs.
    {
        int checked = 0;
        std::mt19937_64 crng(31415);
        while (checked < 200 && pass) {
            long long p = kPrimes[checked % kPrimes.size()];
            Context ctx(p, 2);
            Element a = testutil::random_homogeneous(ctx, 5, crng);
            Element b = testutil::random_homogeneous(ctx, 5, crng);
            if (a.is_zero() || b.is_zero()) continue;
            Element ab = a * b;
            if (ab.is_zero()) continue;
            long long top =
                (p == 2) ? (*a.degree() + *b.degree()) : (*a.degree() + *b.degree()) / 2;
            for (int i = 0; i <= top && pass; ++i) {
                Element lhs = (p == 2) ? sq(i, ab) : power_op(i, ab);
                Element rhs(ctx);
                for (int j = 0; j <= i; ++j) {
                    Element l = (p == 2) ? sq(j, a) : power_op(j, a);
                    Element r = (p == 2) ? sq(i - j, b) : power_op(i - j, b);
                    rhs = rhs + l * r;
                }
                if (!(lhs == rhs)) {
                    pass = false;
                    detail = "Cartan formula p=" + std::to_string(p);
                }
            }
            ++checked;
        }
    }

    // beta^2 = 0 on all basis monomials with k <= 4, degree <= 12.
    for (long long p : {3LL, 5LL}) {
        if (!pass) break;
        Context ctx(p, 4);
        for (const auto& mono : testutil::basis_up_to(ctx, 12)) {
            Element e = Element::from_monomial(ctx, mono, 1);
            if (!bockstein(bockstein(e)).is_zero()) {
                pass = false;
                detail = "beta^2 != 0 at p=" + std::to_string(p);
                break;
            }
        }
    }

    report("6 structural properties (derivation, Q^2=0, anticommutation, "
           "Cartan, beta^2=0)",
           pass, detail);
}

// 7. Term combinatorics of the closed form.
void criterion_combinatorics() {
    bool pass = true;
    std::string detail;
    for (long long p : kPrimes) {
        for (int n = 0; n <= 2 && pass; ++n) {
            for (int m = 1; m <= n + 3 && pass; ++m) {
                Context ctx(p, m);
                Element closed = closed_form(n, m, ctx);
                if (closed.term_count() !=
                    static_cast<std::size_t>(monomial_count(n, m))) {
                    pass = false;
                    detail = "term count p=" + std::to_string(p) +
                             " n=" + std::to_string(n) + " m=" + std::to_string(m);
                }
                for (const auto& [mono, c] : closed.terms()) {
                    if (c != 1 && c != p - 1) {
                        pass = false;
                        detail = "coefficient not +-1";
                    }
                }
            }
        }
    }
    report("7 combinatorics (m!/(m-n-1)! terms, coefficients +-1)", pass, detail);
}

// 8. Round-trip and CLI determinism.
void criterion_determinism() {
    bool pass = true;
    std::string detail;
    std::mt19937_64 rng(8080);
    int checked = 0;
    while (checked < 500) {
        long long p = kPrimes[static_cast<std::size_t>(checked) % kPrimes.size()];
        Context ctx(p, 1 + static_cast<int>(rng() % 4));
        Element e = testutil::random_element(ctx, 8, rng);
        if (!(parse_element(format_element(e), ctx) == e)) {
            pass = false;
            detail = "round-trip failed: " + format_element(e);
            break;
        }
        ++checked;
    }
    for (const std::string& args :
         {std::string("verify --p 3 --n-max 1 --seed 12"),
          std::string("certify --p 2 --all-n --n-max 1 --format json"),
          std::string("table --p 5 --n-max 2 --format json"),
          std::string("--p 2 --k 3 eval \"Q1*Q0(x1*x2*x3)\"")}) {
        auto a = run_cli(args);
        auto b = run_cli(args);
        if (a.first != b.first || a.second != b.second || a.first != 0) {
            pass = false;
            detail = "CLI rerun differs for: " + args;
            break;
        }
    }
    report("8 determinism (500 parse/format round-trips, byte-identical reruns)",
           pass, detail);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) {
        g_binary = argv[1];
    } else if (const char* env = std::getenv("MILNORQ_BIN")) {
        g_binary = env;
    } else {
        std::cerr << "usage: acceptance <path-to-milnorq-binary>\n";
        return 2;
    }
    criterion_oracle_triple_equality();
    criterion_vanishing_threshold();
    criterion_generator_rules();
    criterion_degree_ledger();
    criterion_base_case();
    criterion_structural_properties();
    criterion_combinatorics();
    criterion_determinism();
    if (g_failures == 0) {
        std::cout << "all acceptance criteria pass\n";
        return 0;
    }
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
}
