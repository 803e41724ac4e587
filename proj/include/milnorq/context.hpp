#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace milnorq {

// Exit-code relevant error categories (see tools/milnorq.cpp).
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class cap_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Internal consistency failure (e.g. the two Q-engines disagree).
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

bool is_prime(long long p);

// The ambient ring H*((Z/p)^k; F_p):
//   p = 2:   F_2[x_1,...,x_k],              deg x_i = 1
//   p odd:   Lambda(x_1,...,x_k) (x) F_p[y_1,...,y_k], deg x_i = 1, deg y_i = 2
struct Context {
    long long p;
    int k;
    long long exp_cap;
    int recursion_cap;

    static constexpr long long kDefaultExpCap = 1LL << 20;

    Context(long long p_, int k_, long long exp_cap_ = kDefaultExpCap,
            int recursion_cap_ = -1);

    bool odd() const { return p != 2; }

    // Default cap on the recursive Milnor operation index; Sq^{2^{n+1}} / P^{p^n}
    // costs grow with p^n.
    static int default_recursion_cap(long long p);

    friend bool operator==(const Context& a, const Context& b) {
        return a.p == b.p && a.k == b.k;
    }
};

void require_same_context(const Context& a, const Context& b);

}  // namespace milnorq
