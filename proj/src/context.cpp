#include "milnorq/context.hpp"

namespace milnorq {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

Context::Context(long long p_, int k_, long long exp_cap_, int recursion_cap_)
    : p(p_), k(k_), exp_cap(exp_cap_), recursion_cap(recursion_cap_) {
    if (!is_prime(p)) {
        throw std::invalid_argument("p must be prime, got " + std::to_string(p));
    }
    if (k < 1) {
        throw std::invalid_argument("generator count k must be >= 1");
    }
    if (exp_cap < 1) {
        throw std::invalid_argument("exp_cap must be >= 1");
    }
    if (recursion_cap < 0) {
        recursion_cap = default_recursion_cap(p);
    }
}

int Context::default_recursion_cap(long long p) {
    if (p == 2) return 6;
    if (p == 3) return 4;
    return 3;
}

void require_same_context(const Context& a, const Context& b) {
    if (!(a == b)) {
        throw std::invalid_argument("context mismatch: (p=" + std::to_string(a.p) +
                                    ",k=" + std::to_string(a.k) + ") vs (p=" +
                                    std::to_string(b.p) + ",k=" + std::to_string(b.k) +
                                    ")");
    }
}

}  // namespace milnorq
