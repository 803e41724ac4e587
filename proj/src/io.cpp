#include "milnorq/io.hpp"

#include <cctype>
#include <sstream>

namespace milnorq {

namespace {

class Lexer {
public:
    Lexer(const std::string& text, const Context& ctx) : text_(text), ctx_(ctx) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            throw parse_error(std::string("expected '") + c + "'", pos_);
        }
        ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    long long number() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            throw parse_error("expected a number", pos_);
        }
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > (1LL << 40)) throw parse_error("number too large", pos_);
            ++pos_;
        }
        return v;
    }

    std::size_t pos() const { return pos_; }

    // factor := ("x"|"y") index ["^" exponent]
    Element factor() {
        skip_ws();
        std::size_t start = pos_;
        char g = peek();
        if (g != 'x' && g != 'y') {
            throw parse_error("expected a generator 'x' or 'y'", pos_);
        }
        ++pos_;
        if (g == 'y' && !ctx_.odd()) {
            throw parse_error("'y' generators are not valid at p = 2", start);
        }
        long long idx = number();
        if (idx < 1 || idx > ctx_.k) {
            throw parse_error("generator index " + std::to_string(idx) +
                                  " out of range 1.." + std::to_string(ctx_.k),
                              start);
        }
        long long exp = 1;
        if (accept('^')) exp = number();
        if (g == 'x' && ctx_.odd() && exp > 1) {
            throw parse_error("exterior generators square to zero", start);
        }
        if (exp > ctx_.exp_cap) {
            throw parse_error("exponent exceeds cap", start);
        }
        Element base = (g == 'x') ? Element::gen_x(ctx_, static_cast<int>(idx))
                                  : Element::gen_y(ctx_, static_cast<int>(idx));
        if (exp == 0) return Element::unit(ctx_);
        if (g == 'y' || !ctx_.odd()) {
            Monomial m(ctx_.k);
            m.exps[static_cast<std::size_t>(idx - 1)] = exp;
            return Element::from_monomial(ctx_, m, 1);
        }
        return base;
    }

    // term := [coeff "*"] factor ("*" factor)* | coeff
    Element term() {
        skip_ws();
        std::size_t start = pos_;
        long long coeff = 1;
        bool have_factor = false;
        Element out = Element::unit(ctx_);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = number();
            if (coeff >= ctx_.p) {
                throw parse_error("coefficient must lie in 0.." +
                                      std::to_string(ctx_.p - 1),
                                  start);
            }
            if (!accept('*')) {
                return Element::unit(ctx_).scaled(coeff);  // bare constant
            }
        }
        out = factor();
        have_factor = true;
        while (accept('*')) out = out * factor();
        (void)have_factor;
        return out.scaled(coeff);
    }

    Element element() {
        Element out = term();
        while (accept('+')) out = out + term();
        skip_ws();
        if (pos_ < text_.size()) {
            throw parse_error("unexpected trailing input", pos_);
        }
        return out;
    }

private:
    const std::string& text_;
    Context ctx_;
    std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(const std::string& text, const Context& ctx) {
    Lexer lex(text, ctx);
    return lex.element();
}

std::string format_monomial(const Monomial& m, const Context& ctx) {
    std::ostringstream os;
    bool first = true;
    for (int i : m.ext) {
        if (!first) os << "*";
        os << "x" << i;
        first = false;
    }
    const char* gen = ctx.odd() ? "y" : "x";
    for (int i = 0; i < ctx.k; ++i) {
        long long e = m.exps[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        if (!first) os << "*";
        os << gen << (i + 1);
        if (e > 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

std::string format_element(const Element& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        if (!first) os << " + ";
        std::string body = format_monomial(m, e.context());
        if (body.empty()) {
            os << c;
        } else if (c != 1) {
            os << c << "*" << body;
        } else {
            os << body;
        }
        first = false;
    }
    return os.str();
}

}  // namespace milnorq
