#include "milnorq/element.hpp"

#include <algorithm>
#include <numeric>

namespace milnorq {

long long Monomial::degree(bool odd_prime) const {
    long long poly = std::accumulate(exps.begin(), exps.end(), 0LL);
    return odd_prime ? static_cast<long long>(ext.size()) + 2 * poly : poly;
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const {
    long long da = a.degree(odd_prime);
    long long db = b.degree(odd_prime);
    if (da != db) return da < db;
    if (a.ext != b.ext) {
        return std::lexicographical_compare(a.ext.begin(), a.ext.end(),
                                            b.ext.begin(), b.ext.end());
    }
    return std::lexicographical_compare(a.exps.begin(), a.exps.end(),
                                        b.exps.begin(), b.exps.end());
}

Element Element::unit(const Context& ctx) {
    Element e(ctx);
    e.add_term(Monomial(ctx.k), 1);
    return e;
}

Element Element::gen_x(const Context& ctx, int i) {
    if (i < 1 || i > ctx.k) {
        throw std::invalid_argument("generator index out of range: " +
                                    std::to_string(i));
    }
    Monomial m(ctx.k);
    if (ctx.odd()) {
        m.ext.push_back(i);
    } else {
        m.exps[static_cast<std::size_t>(i - 1)] = 1;
    }
    return from_monomial(ctx, m, 1);
}

Element Element::gen_y(const Context& ctx, int i) {
    if (!ctx.odd()) {
        throw std::invalid_argument("y generators only exist at odd p");
    }
    if (i < 1 || i > ctx.k) {
        throw std::invalid_argument("generator index out of range: " +
                                    std::to_string(i));
    }
    Monomial m(ctx.k);
    m.exps[static_cast<std::size_t>(i - 1)] = 1;
    return from_monomial(ctx, m, 1);
}

Element Element::from_monomial(const Context& ctx, const Monomial& m,
                               long long coeff) {
    Element e(ctx);
    e.add_term(m, coeff);
    return e;
}

void Element::add_term(const Monomial& m, long long coeff) {
    coeff %= ctx_.p;
    if (coeff < 0) coeff += ctx_.p;
    if (coeff == 0) return;
    for (long long e : m.exps) {
        if (e > ctx_.exp_cap) {
            throw cap_error("exponent " + std::to_string(e) + " exceeds cap " +
                            std::to_string(ctx_.exp_cap));
        }
    }
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
        it->second = (it->second + coeff) % ctx_.p;
        if (it->second == 0) terms_.erase(it);
    }
}

std::optional<long long> Element::degree() const {
    if (terms_.empty()) {
        throw std::invalid_argument("the zero element has no degree");
    }
    long long d = terms_.begin()->first.degree(ctx_.odd());
    for (const auto& [m, c] : terms_) {
        if (m.degree(ctx_.odd()) != d) return std::nullopt;
    }
    return d;
}

Element Element::component(long long degree) const {
    Element out(ctx_);
    for (const auto& [m, c] : terms_) {
        if (m.degree(ctx_.odd()) == degree) out.add_term(m, c);
    }
    return out;
}

std::vector<Element> Element::homogeneous_components() const {
    std::vector<Element> out;
    long long last = -1;
    for (const auto& [m, c] : terms_) {  // map order is degree-ascending
        long long d = m.degree(ctx_.odd());
        if (out.empty() || d != last) {
            out.emplace_back(ctx_);
            last = d;
        }
        out.back().add_term(m, c);
    }
    return out;
}

Element Element::scaled(long long c) const {
    Element out(ctx_);
    for (const auto& [m, coeff] : terms_) out.add_term(m, coeff * c);
    return out;
}

Element operator+(const Element& a, const Element& b) {
    require_same_context(a.ctx_, b.ctx_);
    Element out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
}

Element operator-(const Element& a) { return a.scaled(-1); }

Element operator-(const Element& a, const Element& b) { return a + (-b); }

std::optional<std::pair<Monomial, int>> monomial_product(const Monomial& a,
                                                         const Monomial& b,
                                                         const Context& ctx) {
    Monomial out(ctx.k);
    int sign = 1;
    if (ctx.odd()) {
        // Merge the sorted exterior lists; x_i^2 = 0 kills intersections and
        // each inversion (a_i > b_j pair) contributes a Koszul sign.
        std::size_t ia = 0, ib = 0;
        long long inversions = 0;
        while (ia < a.ext.size() && ib < b.ext.size()) {
            if (a.ext[ia] == b.ext[ib]) return std::nullopt;
            if (a.ext[ia] < b.ext[ib]) {
                out.ext.push_back(a.ext[ia++]);
            } else {
                inversions += static_cast<long long>(a.ext.size() - ia);
                out.ext.push_back(b.ext[ib++]);
            }
        }
        while (ia < a.ext.size()) out.ext.push_back(a.ext[ia++]);
        while (ib < b.ext.size()) out.ext.push_back(b.ext[ib++]);
        if (inversions % 2 != 0) sign = -1;
    }
    for (int i = 0; i < ctx.k; ++i) {
        out.exps[static_cast<std::size_t>(i)] =
            a.exps[static_cast<std::size_t>(i)] + b.exps[static_cast<std::size_t>(i)];
    }
    return std::make_pair(out, sign);
}

Element operator*(const Element& a, const Element& b) {
    require_same_context(a.ctx_, b.ctx_);
    Element out(a.ctx_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            auto prod = monomial_product(ma, mb, a.ctx_);
            if (!prod) continue;
            out.add_term(prod->first, ca * cb * prod->second);
        }
    }
    return out;
}

}  // namespace milnorq
