#include "milnorq/milnor.hpp"

#include <algorithm>

#include "milnorq/steenrod.hpp"

namespace milnorq {

namespace {

long long pow_ll(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

// The multiset of placed exponents: p^t for t = 0..n plus halves at odd p;
// 2^{t+1} plus literal 1 entries at p = 2 (the generators have degree 1 there,
// so every symbol doubles and a half becomes exponent 1).
static std::vector<long long> symbol_multiset(long long p, int n, int m) {
    std::vector<long long> out;
    for (int i = 0; i < m - (n + 1); ++i) {
        out.push_back(p == 2 ? 1 : Assignment::kHalf);
    }
    for (int t = 0; t <= n; ++t) {
        out.push_back(p == 2 ? pow_ll(2, t + 1) : pow_ll(p, t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Assignment::valid() const {
    if (m < n + 1 || static_cast<int>(values.size()) != m) return false;
    std::vector<long long> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    return sorted == symbol_multiset(p, n, m);
}

long long rho(const Assignment& j) {
    if (j.p == 2) throw std::invalid_argument("rho is defined for odd p only");
    if (!j.valid()) throw std::invalid_argument("invalid assignment");
    // a_t counts entries left of the p^t placement that are either a half or
    // a strictly larger power; summed over every placed power t = 0..n.
    long long total = 0;
    for (int t = 0; t <= j.n; ++t) {
        long long pt = pow_ll(j.p, t);
        int placed = -1;
        for (int s = 0; s < j.m; ++s) {
            if (j.values[static_cast<std::size_t>(s)] == pt) {
                placed = s;
                break;
            }
        }
        for (int s = 0; s < placed; ++s) {
            long long v = j.values[static_cast<std::size_t>(s)];
            if (v == Assignment::kHalf || v > pt) ++total;
        }
    }
    return total;
}

std::vector<Assignment> enumerate_assignments(long long p, int n, int m) {
    std::vector<Assignment> out;
    if (m < n + 1) return out;
    std::vector<long long> values = symbol_multiset(p, n, m);
    do {
        Assignment a;
        a.p = p;
        a.n = n;
        a.m = m;
        a.values = values;
        out.push_back(std::move(a));
    } while (std::next_permutation(values.begin(), values.end()));
    return out;
}

long long monomial_count(int n, int m) {
    if (m <= n) return 0;
    long long r = 1;
    for (int i = 0; i <= n; ++i) r *= (m - i);
    return r;
}

Element milnor_q_derivation(int n, const Element& e) {
    const Context& ctx = e.context();
    if (n < 0) throw std::invalid_argument("Q index must be >= 0");
    long long qexp = pow_ll(ctx.p, n + (ctx.odd() ? 0 : 1));
    Element out(ctx);
    for (const auto& [m, c] : e.terms()) {
        if (ctx.odd()) {
            // Q_n(x_i) = y_i^{p^n}, Q_n(y_i) = 0; the t-th exterior factor
            // picks up the parity of the t-1 factors before it.
            for (std::size_t t = 0; t < m.ext.size(); ++t) {
                Monomial mm(ctx.k);
                mm.exps = m.exps;
                for (std::size_t s = 0; s < m.ext.size(); ++s) {
                    if (s != t) mm.ext.push_back(m.ext[s]);
                }
                mm.exps[static_cast<std::size_t>(m.ext[t] - 1)] += qexp;
                long long sign = (t % 2 == 0) ? 1 : -1;
                out.add_term(mm, c * sign);
            }
        } else {
            // Q_n(x_i^{2t}) = 0, Q_n(x_i^{2t+1}) = x_i^{2t + 2^{n+1}}.
            for (int i = 0; i < ctx.k; ++i) {
                long long exp = m.exps[static_cast<std::size_t>(i)];
                if (exp % 2 == 0) continue;
                Monomial mm = m;
                mm.exps[static_cast<std::size_t>(i)] = exp - 1 + qexp;
                out.add_term(mm, c);
            }
        }
    }
    return out;
}

Element milnor_q(int n, const Element& e, QEngine engine) {
    return engine == QEngine::derivation ? milnor_q_derivation(n, e)
                                         : milnor_q_recursive(n, e);
}

Element iterated_q(int n, const Element& e, QEngine engine) {
    Element out = e;
    for (int t = 0; t <= n; ++t) out = milnor_q(t, out, engine);
    return out;
}

Element top_class(int m, const Context& ctx) {
    if (m < 1 || m > ctx.k) {
        throw std::invalid_argument("class length m must lie in 1..k");
    }
    Monomial mono(ctx.k);
    for (int i = 1; i <= m; ++i) {
        if (ctx.odd()) {
            mono.ext.push_back(i);
        } else {
            mono.exps[static_cast<std::size_t>(i - 1)] = 1;
        }
    }
    return Element::from_monomial(ctx, mono, 1);
}

Element closed_form(int n, int m, const Context& ctx) {
    if (n < -1) throw std::invalid_argument("n must be >= -1");
    if (m < 1 || m > ctx.k) {
        throw std::invalid_argument("class length m must lie in 1..k");
    }
    if (n == -1) return top_class(m, ctx);
    Element out(ctx);
    for (const Assignment& j : enumerate_assignments(ctx.p, n, m)) {
        Monomial mono(ctx.k);
        for (int i = 0; i < m; ++i) {
            long long v = j.values[static_cast<std::size_t>(i)];
            if (v == Assignment::kHalf) {
                mono.ext.push_back(i + 1);
            } else {
                mono.exps[static_cast<std::size_t>(i)] = v;
            }
        }
        long long sign = 1;
        if (ctx.odd() && rho(j) % 2 != 0) sign = -1;
        out.add_term(mono, sign);
    }
    return out;
}

}  // namespace milnorq
