#pragma once

#include <map>
#include <optional>
#include <vector>

#include "milnorq/context.hpp"

namespace milnorq {

// One basis monomial: an exterior subset of {1..k} (always empty at p = 2)
// and a polynomial exponent vector of length k. At p = 2 the exponents belong
// to the degree-1 generators x_i; at odd p to the degree-2 generators y_i.
struct Monomial {
    std::vector<int> ext;            // sorted, 1-based generator indices
    std::vector<long long> exps;     // size k

    explicit Monomial(int k) : exps(static_cast<std::size_t>(k), 0) {}

    long long degree(bool odd_prime) const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.ext == b.ext && a.exps == b.exps;
    }
};

// Canonical term order: total degree, then exterior index list, then exponents,
// both lexicographic.
struct TermOrder {
    bool odd_prime = false;
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// A finitely supported F_p-linear combination of Monomials in canonical form:
// coefficients in 1..p-1, never zero, keyed under TermOrder.
class Element {
public:
    using TermMap = std::map<Monomial, long long, TermOrder>;

    explicit Element(const Context& ctx)
        : ctx_(ctx), terms_(TermOrder{ctx.odd()}) {}

    static Element zero(const Context& ctx) { return Element(ctx); }
    static Element unit(const Context& ctx);
    static Element gen_x(const Context& ctx, int i);
    static Element gen_y(const Context& ctx, int i);  // odd p only
    static Element from_monomial(const Context& ctx, const Monomial& m,
                                 long long coeff);

    const Context& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Adds coeff * m (mod p), erasing the term if the sum vanishes.
    void add_term(const Monomial& m, long long coeff);

    // Common degree of all terms; nullopt means mixed. Throws on zero.
    std::optional<long long> degree() const;

    // Terms of the given degree.
    Element component(long long degree) const;
    // Splits into homogeneous components, ascending degree.
    std::vector<Element> homogeneous_components() const;

    Element scaled(long long c) const;

    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator-(const Element& a);
    friend Element operator*(const Element& a, const Element& b);
    friend bool operator==(const Element& a, const Element& b) {
        return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
    }

private:
    Context ctx_;
    TermMap terms_;
};

// Product of two monomials. Returns nullopt when the exterior subsets meet
// (x_i^2 = 0); otherwise the product monomial and the Koszul sign (+1/-1)
// from interleaving the two exterior lists.
std::optional<std::pair<Monomial, int>> monomial_product(const Monomial& a,
                                                         const Monomial& b,
                                                         const Context& ctx);

}  // namespace milnorq
