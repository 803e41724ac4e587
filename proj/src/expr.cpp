#include "milnorq/expr.hpp"

#include <cctype>
#include <vector>

#include "milnorq/io.hpp"
#include "milnorq/milnor.hpp"
#include "milnorq/steenrod.hpp"

namespace milnorq {

namespace {

struct Op {
    enum class Kind { q, sq, power, bockstein } kind;
    int index = 0;
};

std::vector<Op> parse_ops(const std::string& text, std::size_t end) {
    std::vector<Op> ops;
    std::size_t pos = 0;
    while (pos < end) {
        while (pos < end && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= end) break;
        Op op{Op::Kind::q, 0};
        if (text.compare(pos, 2, "Sq") == 0) {
            op.kind = Op::Kind::sq;
            pos += 2;
        } else if (text[pos] == 'Q') {
            op.kind = Op::Kind::q;
            pos += 1;
        } else if (text[pos] == 'P') {
            op.kind = Op::Kind::power;
            pos += 1;
        } else if (text[pos] == 'b') {
            op.kind = Op::Kind::bockstein;
            pos += 1;
        } else {
            throw parse_error("expected an operation (Q, Sq, P or b)", pos);
        }
        if (op.kind != Op::Kind::bockstein) {
            std::size_t start = pos;
            long long v = 0;
            while (pos < end && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                v = v * 10 + (text[pos] - '0');
                ++pos;
            }
            if (pos == start) throw parse_error("expected an operation index", pos);
            op.index = static_cast<int>(v);
        }
        ops.push_back(op);
        while (pos < end && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos < end) {
            if (text[pos] != '*') {
                throw parse_error("expected '*' between operations", pos);
            }
            ++pos;
        }
    }
    return ops;
}

Element apply_op(const Op& op, const Element& e) {
    switch (op.kind) {
        case Op::Kind::q:
            return milnor_q_recursive(op.index, e);
        case Op::Kind::sq:
            return sq(op.index, e);
        case Op::Kind::power:
            return power_op(op.index, e);
        case Op::Kind::bockstein:
            return bockstein(e);
    }
    throw internal_error("unreachable operation kind");
}

}  // namespace

Element eval_expression(const std::string& text, const Context& ctx) {
    std::size_t open = text.find('(');
    if (open == std::string::npos) {
        return parse_element(text, ctx);
    }
    std::size_t close = text.rfind(')');
    if (close == std::string::npos || close < open) {
        throw parse_error("unbalanced parentheses", open);
    }
    std::string inner = text.substr(open + 1, close - open - 1);
    std::size_t tail = close + 1;
    while (tail < text.size() && std::isspace(static_cast<unsigned char>(text[tail]))) ++tail;
    if (tail != text.size()) {
        throw parse_error("unexpected trailing input", tail);
    }
    std::vector<Op> ops = parse_ops(text, open);
    Element value = parse_element(inner, ctx);
    // Right-to-left composition: the op written last applies first.
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        value = apply_op(*it, value);
    }
    return value;
}

}  // namespace milnorq
