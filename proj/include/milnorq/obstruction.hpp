#pragma once

#include <optional>
#include <string>
#include <vector>

#include "milnorq/element.hpp"
#include "milnorq/milnor.hpp"

namespace milnorq {

// w(n) = p^n + p^{n-1} + ... + p + 1; w(-1) = 0.
long long w(long long p, int n);

// |Q_i| = 2p^i - 1.
long long q_op_degree(long long p, int i);

// Sum_{i=0}^{n} |Q_i| = 2w(n) - n - 1.
long long q_degree_sum(long long p, int n);

// A self-contained non-liftability record: the class q_n...q_0(x) in
// BP<n>^{bp_degree}(B(Z/p)^k) is nonzero and not in the image of
// rho^{n+1}_n, witnessed by Q_{n+1}...Q_0(x) != 0 in mod-p cohomology.
struct Certificate {
    long long p = 2;
    int n = 0;
    int k = 0;                 // group rank
    int m = 0;                 // class length
    std::string source_class;  // x, in the element grammar
    std::string witness;       // Q_{n+1}...Q_0(x), nonzero
    long long source_degree = 0;
    long long bp_degree = 0;       // source_degree + 2w(n) - n - 1
    long long witness_degree = 0;  // source_degree + 2w(n+1) - n - 2
    long long wilson_bound = 0;    // 2w(n)
    long long variety_dimension = 0;  // 2w(n+1) + 1
    std::string statement;
};

// Runs Q_{n+1}...Q_0(x) through both engines (which must agree); returns a
// certificate when the witness is nonzero, nullopt when it vanishes.
// The x passed in must be homogeneous and nonzero.
std::optional<Certificate> detect_nonliftable(int n, const Element& x);

// The minimal-degree example: k = m = n + 3, x = x_1...x_{n+3}, giving a
// nonzero class in degree 2w(n) + 2 (= 2^{n+2} at p = 2).
Certificate minimal_example(long long p, int n);

struct TowerRow {
    int n;
    long long q_degree;          // |Q_n| = 2p^n - 1
    long long v_shift;           // 2(p^n - 1)
    long long w_value;           // w(n)
    long long wilson_bound;      // 2w(n)
    long long min_bp_degree;     // 2w(n) + 2
    long long variety_dimension; // 2w(n+1) + 1
};

std::vector<TowerRow> tower_degree_table(long long p, int n_max);

// cert-v1 serializations.
std::string certificate_to_json(const Certificate& c);
std::string certificate_to_text(const Certificate& c);

}  // namespace milnorq
