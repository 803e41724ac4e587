#pragma once

#include <vector>

#include "milnorq/element.hpp"

namespace milnorq {

// One summand index of the closed-form expansion of Q_n...Q_0(x_1...x_m):
// a bijection from positions {1..m} onto the exponent multiset
// {p^n, ..., p, 1} plus m-(n+1) "half" symbols. A half at position i stands
// for an exterior factor x_i (the y_i^{1/2} convention); at p = 2 the halves
// are plain exponent-1 entries.
struct Assignment {
    static constexpr long long kHalf = -1;

    long long p = 2;
    int n = 0;
    int m = 0;
    std::vector<long long> values;  // size m, entries p^t or kHalf

    bool valid() const;
};

// Sign exponent of an assignment at odd p: rho = sum of a_t for t = 0..n,
// where a_t counts positions s left of the p^t entry holding either a half
// or an exponent greater than p^t.
long long rho(const Assignment& j);

// All assignments for (p, n, m), in lexicographic order of the value vectors.
std::vector<Assignment> enumerate_assignments(long long p, int n, int m);

// Number of assignments: m!/(m-n-1)!, or 0 when m <= n.
long long monomial_count(int n, int m);

enum class QEngine { derivation, recursive };

// Milnor operation as a graded derivation extending the generator rules
//   p = 2:  Q_n(x_i) = x_i^{2^{n+1}},  Q_n(x_i^{2t}) = 0
//   p odd:  Q_n(x_i) = y_i^{p^n},      Q_n(y_i) = 0
// with Q_n(ab) = Q_n(a)b + (-1)^{deg a} a Q_n(b).
Element milnor_q_derivation(int n, const Element& e);

Element milnor_q(int n, const Element& e, QEngine engine);

// The composite Q_n Q_{n-1} ... Q_0 (e); n = -1 is the identity.
Element iterated_q(int n, const Element& e, QEngine engine);

// Closed form of Q_n...Q_0(x_1...x_m) as a signed sum over assignments.
// n = -1 returns x_1...x_m itself. Requires m <= ctx.k.
Element closed_form(int n, int m, const Context& ctx);

// The class x_1...x_m (exterior generators at odd p, degree-1 polynomial
// generators at p = 2).
Element top_class(int m, const Context& ctx);

}  // namespace milnorq
