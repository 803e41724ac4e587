#include "milnorq/obstruction.hpp"

#include <sstream>

#include "milnorq/io.hpp"

#include "json.hpp"

namespace milnorq {

namespace {

long long pow_ll(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

std::string build_statement(const Certificate& c) {
    std::ostringstream os;
    os << "The class q_" << c.n << "...q_0(" << c.source_class
       << ") is a nonzero element of BP<" << c.n << ">^" << c.bp_degree
       << " of B(Z/" << c.p << ")^" << c.k
       << " which does not lift along BP<" << c.n + 1 << "> -> BP<" << c.n
       << ">, because Q_" << c.n + 1 << "...Q_0(" << c.source_class
       << ") = " << c.witness << " is nonzero in mod-" << c.p
       << " cohomology (degree " << c.witness_degree
       << "). BP -> BP<" << c.n << "> is surjective through degree "
       << c.wilson_bound
       << ". Pulled back to a suitable smooth projective variety of complex"
          " dimension "
       << c.variety_dimension
       << ", the class is therefore not in the image of the cycle map from"
          " motivic BP<"
       << c.n << "> cohomology.";
    return os.str();
}

void check_certificate(const Certificate& c) {
    if (c.witness_degree - c.source_degree != 2 * w(c.p, c.n + 1) - c.n - 2) {
        throw internal_error("certificate witness degree inconsistent");
    }
    if (c.bp_degree - c.source_degree != q_degree_sum(c.p, c.n)) {
        throw internal_error("certificate bp degree inconsistent");
    }
    if (c.wilson_bound != 2 * w(c.p, c.n)) {
        throw internal_error("certificate wilson bound inconsistent");
    }
    if (c.variety_dimension != 2 * w(c.p, c.n + 1) + 1) {
        throw internal_error("certificate variety dimension inconsistent");
    }
}

}  // namespace

long long w(long long p, int n) {
    if (n < -1) throw std::invalid_argument("w requires n >= -1");
    long long sum = 0;
    for (int i = 0; i <= n; ++i) sum += pow_ll(p, i);
    return sum;
}

long long q_op_degree(long long p, int i) {
    if (i < 0) throw std::invalid_argument("q_op_degree requires i >= 0");
    return 2 * pow_ll(p, i) - 1;
}

long long q_degree_sum(long long p, int n) { return 2 * w(p, n) - n - 1; }

std::optional<Certificate> detect_nonliftable(int n, const Element& x) {
    const Context& ctx = x.context();
    if (x.is_zero()) throw std::invalid_argument("source class must be nonzero");
    auto deg = x.degree();
    if (!deg) throw std::invalid_argument("source class must be homogeneous");

    Element witness = iterated_q(n + 1, x, QEngine::derivation);
    Element check = iterated_q(n + 1, x, QEngine::recursive);
    if (!(witness == check)) {
        throw internal_error("Q-engines disagree on Q_" + std::to_string(n + 1) +
                             "...Q_0 of " + format_element(x));
    }
    if (witness.is_zero()) return std::nullopt;

    Certificate c;
    c.p = ctx.p;
    c.n = n;
    c.k = ctx.k;
    c.m = static_cast<int>(*deg);
    c.source_class = format_element(x);
    c.witness = format_element(witness);
    c.source_degree = *deg;
    c.bp_degree = *deg + q_degree_sum(ctx.p, n);
    c.witness_degree = *deg + 2 * w(ctx.p, n + 1) - n - 2;
    c.wilson_bound = 2 * w(ctx.p, n);
    c.variety_dimension = 2 * w(ctx.p, n + 1) + 1;
    if (*witness.degree() != c.witness_degree) {
        throw internal_error("computed witness degree does not match the ledger");
    }
    c.statement = build_statement(c);
    check_certificate(c);
    return c;
}

Certificate minimal_example(long long p, int n) {
    Context ctx(p, n + 3);
    auto cert = detect_nonliftable(n, top_class(n + 3, ctx));
    if (!cert) {
        throw internal_error("minimal example witness vanished unexpectedly");
    }
    if (cert->bp_degree != 2 * w(p, n) + 2) {
        throw internal_error("minimal certificate degree is not 2w(n)+2");
    }
    if (p == 2 && cert->bp_degree != pow_ll(2, n + 2)) {
        throw internal_error("minimal certificate degree is not 2^{n+2} at p=2");
    }
    if (cert->source_degree != n + 3) {
        throw internal_error("minimal certificate source degree is not n+3");
    }
    return *cert;
}

std::vector<TowerRow> tower_degree_table(long long p, int n_max) {
    std::vector<TowerRow> rows;
    for (int n = 0; n <= n_max; ++n) {
        TowerRow r;
        r.n = n;
        r.q_degree = q_op_degree(p, n);
        r.v_shift = 2 * (pow_ll(p, n) - 1);
        r.w_value = w(p, n);
        r.wilson_bound = 2 * w(p, n);
        r.min_bp_degree = 2 * w(p, n) + 2;
        r.variety_dimension = 2 * w(p, n + 1) + 1;
        rows.push_back(r);
    }
    return rows;
}

std::string certificate_to_json(const Certificate& c) {
    nlohmann::ordered_json j;
    j["schema"] = "cert-v1";
    j["p"] = c.p;
    j["n"] = c.n;
    j["k"] = c.k;
    j["m"] = c.m;
    j["source_class"] = c.source_class;
    j["source_degree"] = c.source_degree;
    j["witness"] = c.witness;
    j["witness_degree"] = c.witness_degree;
    j["bp_degree"] = c.bp_degree;
    j["wilson_bound"] = c.wilson_bound;
    j["variety_dimension"] = c.variety_dimension;
    j["statement"] = c.statement;
    return j.dump(2);
}

std::string certificate_to_text(const Certificate& c) {
    std::ostringstream os;
    os << "certificate cert-v1\n"
       << "  p                 = " << c.p << "\n"
       << "  n                 = " << c.n << "\n"
       << "  k                 = " << c.k << "\n"
       << "  m                 = " << c.m << "\n"
       << "  source_class      = " << c.source_class << "\n"
       << "  source_degree     = " << c.source_degree << "\n"
       << "  witness           = " << c.witness << "\n"
       << "  witness_degree    = " << c.witness_degree << "\n"
       << "  bp_degree         = " << c.bp_degree << "\n"
       << "  wilson_bound      = " << c.wilson_bound << "\n"
       << "  variety_dimension = " << c.variety_dimension << "\n"
       << "  statement         = " << c.statement << "\n";
    return os.str();
}

}  // namespace milnorq
