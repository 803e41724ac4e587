#pragma once

#include "milnorq/element.hpp"

namespace milnorq {

// Degree shift of the Milnor operation Q_n: 2p^n - 1.
long long q_shift(long long p, int n);

// Bockstein, odd p only: the derivation with b(x_i) = y_i, b(y_i) = 0.
// At p = 2 callers use sq(1, e).
Element bockstein(const Element& e);

// Total square, p = 2 only: the ring endomorphism with Sq(x_i) = x_i + x_i^2.
Element total_square(const Element& e);

// Sq^i: the degree-(deg e + i) component of the total square.
// Requires homogeneous input.
Element sq(int i, const Element& e);

// Total reduced power, odd p only: P(x_i) = x_i, P(y_i) = y_i + y_i^p.
Element total_power(const Element& e);

// P^i: the degree-(deg e + 2i(p-1)) component of the total power.
// Requires homogeneous input.
Element power_op(int i, const Element& e);

// Milnor operation through the Steenrod recursion:
//   Q_0 = Sq^1 (p = 2) or the Bockstein (p odd)
//   Q_{n+1} = Sq^{2^{n+1}} Q_n + Q_n Sq^{2^{n+1}}   (p = 2)
//   Q_{n+1} = P^{p^n} Q_n - Q_n P^{p^n}             (p odd)
// Mixed inputs are handled by linear extension over homogeneous components.
// Throws cap_error when n exceeds the context recursion cap.
Element milnor_q_recursive(int n, const Element& e);

}  // namespace milnorq
