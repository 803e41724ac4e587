#include "milnorq/steenrod.hpp"

namespace milnorq {

namespace {

long long pow_ll(long long base, long long exp) {
    long long r = 1;
    for (long long i = 0; i < exp; ++i) r *= base;
    return r;
}

long long pow_mod(long long base, long long exp, long long mod) {
    long long r = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

// C(a, b) mod p for 0 <= a, b < p, p prime.
long long binom_small(long long a, long long b, long long p) {
    if (b < 0 || b > a) return 0;
    long long num = 1, den = 1;
    for (long long i = 0; i < b; ++i) {
        num = num * ((a - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    return num * pow_mod(den, p - 2, p) % p;
}

// Lucas: C(a, b) mod p.
long long binom_mod(long long a, long long b, long long p) {
    long long r = 1;
    while (a > 0 || b > 0) {
        r = r * binom_small(a % p, b % p, p) % p;
        if (r == 0) return 0;
        a /= p;
        b /= p;
    }
    return r;
}

// Expansion of the total operation on one generator power:
// (g + g^p)^e = sum_j C(e,j) g^{e + j(p-1)}, as (exponent, coeff) pairs.
std::vector<std::pair<long long, long long>> power_expansion(long long e,
                                                             long long p) {
    std::vector<std::pair<long long, long long>> out;
    for (long long j = 0; j <= e; ++j) {
        long long c = binom_mod(e, j, p);
        if (c != 0) out.emplace_back(e + j * (p - 1), c);
    }
    return out;
}

// The multiplicative total operation: Sq at p = 2 (x_i -> x_i + x_i^2),
// the total reduced power at odd p (x_i fixed, y_i -> y_i + y_i^p).
Element total_operation(const Element& e) {
    const Context& ctx = e.context();
    Element out(ctx);
    for (const auto& [m, c] : e.terms()) {
        // Product of per-generator expansions; exterior part is untouched.
        std::vector<Monomial> partial{Monomial(ctx.k)};
        std::vector<long long> coeffs{c};
        partial[0].ext = m.ext;
        for (int i = 0; i < ctx.k; ++i) {
            long long exp = m.exps[static_cast<std::size_t>(i)];
            if (exp == 0) continue;
            auto expansion = power_expansion(exp, ctx.p);
            std::vector<Monomial> next;
            std::vector<long long> next_coeffs;
            for (std::size_t t = 0; t < partial.size(); ++t) {
                for (const auto& [ne, nc] : expansion) {
                    Monomial mm = partial[t];
                    mm.exps[static_cast<std::size_t>(i)] = ne;
                    next.push_back(std::move(mm));
                    next_coeffs.push_back(coeffs[t] * nc % ctx.p);
                }
            }
            partial = std::move(next);
            coeffs = std::move(next_coeffs);
        }
        for (std::size_t t = 0; t < partial.size(); ++t) {
            out.add_term(partial[t], coeffs[t]);
        }
    }
    return out;
}

Element homogeneous_piece(const Element& total, long long degree) {
    return total.component(degree);
}

void require_homogeneous(const Element& e, const char* op) {
    if (e.is_zero()) return;
    if (!e.degree()) {
        throw std::invalid_argument(std::string(op) +
                                    " requires homogeneous input");
    }
}

Element q_recursive_homogeneous(int n, const Element& e) {
    const Context& ctx = e.context();
    if (e.is_zero()) return e;
    if (n == 0) {
        return ctx.odd() ? bockstein(e) : sq(1, e);
    }
    long long step = ctx.odd() ? pow_ll(ctx.p, n - 1) : pow_ll(2, n);
    Element qe = q_recursive_homogeneous(n - 1, e);
    Element first(ctx);
    if (!qe.is_zero()) {
        first = ctx.odd() ? power_op(static_cast<int>(step), qe)
                          : sq(static_cast<int>(step), qe);
    }
    Element inner = ctx.odd() ? power_op(static_cast<int>(step), e)
                              : sq(static_cast<int>(step), e);
    Element second = q_recursive_homogeneous(n - 1, inner);
    return ctx.odd() ? first - second : first + second;
}

}  // namespace

long long q_shift(long long p, int n) { return 2 * pow_ll(p, n) - 1; }

Element bockstein(const Element& e) {
    const Context& ctx = e.context();
    if (!ctx.odd()) {
        throw std::invalid_argument("bockstein at p = 2 is sq(1, .)");
    }
    Element out(ctx);
    for (const auto& [m, c] : e.terms()) {
        // Derivation over x_{i_1} < ... < x_{i_r}: the t-th factor picks up
        // the parity of the t-1 exterior factors before it.
        for (std::size_t t = 0; t < m.ext.size(); ++t) {
            Monomial mm(ctx.k);
            mm.exps = m.exps;
            for (std::size_t s = 0; s < m.ext.size(); ++s) {
                if (s != t) mm.ext.push_back(m.ext[s]);
            }
            mm.exps[static_cast<std::size_t>(m.ext[t] - 1)] += 1;
            long long sign = (t % 2 == 0) ? 1 : -1;
            out.add_term(mm, c * sign);
        }
    }
    return out;
}

Element total_square(const Element& e) {
    if (e.context().odd()) {
        throw std::invalid_argument("total_square requires p = 2");
    }
    return total_operation(e);
}

Element sq(int i, const Element& e) {
    if (e.context().odd()) {
        throw std::invalid_argument("sq requires p = 2");
    }
    if (e.is_zero()) return e;
    require_homogeneous(e, "sq");
    long long d = *e.degree();
    if (i < 0 || i > d) return Element::zero(e.context());
    return homogeneous_piece(total_operation(e), d + i);
}

Element total_power(const Element& e) {
    if (!e.context().odd()) {
        throw std::invalid_argument("total_power requires odd p");
    }
    return total_operation(e);
}

Element power_op(int i, const Element& e) {
    const Context& ctx = e.context();
    if (!ctx.odd()) {
        throw std::invalid_argument("power_op requires odd p");
    }
    if (e.is_zero()) return e;
    require_homogeneous(e, "power_op");
    long long d = *e.degree();
    if (i < 0 || 2 * static_cast<long long>(i) > d) return Element::zero(ctx);
    return homogeneous_piece(total_operation(e), d + 2LL * i * (ctx.p - 1));
}

Element milnor_q_recursive(int n, const Element& e) {
    const Context& ctx = e.context();
    if (n < 0) throw std::invalid_argument("Q index must be >= 0");
    if (n > ctx.recursion_cap) {
        throw cap_error("Q_" + std::to_string(n) + " exceeds recursion cap " +
                        std::to_string(ctx.recursion_cap));
    }
    Element out(ctx);
    for (const Element& piece : e.homogeneous_components()) {
        out = out + q_recursive_homogeneous(n, piece);
    }
    return out;
}

}  // namespace milnorq
