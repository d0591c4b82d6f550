#pragma once

#include <cctype>
#include <map>
#include <string>
#include <utility>

#include "riordan/series.hpp"

namespace riordan {

// Named series visible to the expression parser.
using Environment = std::map<std::string, Series>;

// Recursive-descent parser for series expressions:
//
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' natural)?
//   base   := natural | 'x' | name | '(' expr ')' | 'sqrt' '(' expr ')'
//
// No implicit multiplication.  Names resolve through the environment.
class ExprParser {
public:
    ExprParser(std::string text, std::size_t order, const Environment* env)
        : text_(std::move(text)), order_(order), env_(env) {}

    Series parse() {
        pos_ = 0;
        Series r = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail(Errc::parse_error, "trailing input at position " + std::to_string(pos_) +
                                        ": '" + text_.substr(pos_) + "'");
        return r;
    }

private:
    std::string text_;
    std::size_t order_;
    const Environment* env_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Series expr() {
        bool neg = eat('-');
        Series r = term();
        if (neg) r = -r;
        for (;;) {
            if (eat('+'))
                r = r + term();
            else if (eat('-'))
                r = r - term();
            else
                return r;
        }
    }

    Series term() {
        Series r = factor();
        for (;;) {
            if (eat('*'))
                r = r * factor();
            else if (eat('/'))
                r = r / factor();
            else
                return r;
        }
    }

    Series factor() {
        Series b = base();
        if (eat('^')) return b.pow(natural());
        return b;
    }

    unsigned long natural() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail(Errc::parse_error, "expected a natural number at position " +
                                                       std::to_string(start));
        return std::stoul(text_.substr(start, pos_ - start));
    }

    Series base() {
        skip_ws();
        if (pos_ >= text_.size()) fail(Errc::parse_error, "unexpected end of expression");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return Series::constant(Rat(Int(text_.substr(start, pos_ - start))), order_);
        }
        if (c == '(') {
            ++pos_;
            Series r = expr();
            if (!eat(')')) fail(Errc::parse_error, "missing ')'");
            return r;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            if (name == "sqrt") {
                if (!eat('(')) fail(Errc::parse_error, "sqrt needs '('");
                Series r = expr();
                if (!eat(')')) fail(Errc::parse_error, "missing ')' after sqrt argument");
                return r.sqrt();
            }
            if (name == "x") return Series::x(order_);
            if (env_) {
                auto it = env_->find(name);
                if (it != env_->end()) return it->second.truncated(std::min(order_, it->second.order()));
            }
            fail(Errc::parse_error, "unknown symbol '" + name + "'");
        }
        fail(Errc::parse_error, std::string("unexpected character '") + c + "' at position " +
                                    std::to_string(pos_));
    }
};

inline Series parse_series(const std::string& text, std::size_t order,
                           const Environment& env = {}) {
    return ExprParser(text, order, &env).parse();
}

// Solves u = phi(x, u) by x-adic fixed-point iteration, where phi is an
// expression with free symbol `name`.  Requires phi to be a contraction:
// coefficient n of phi(u) may depend only on coefficients < n of u.  Padding
// the iterate with zeros is then harmless, and divisions inside phi merely
// shorten the evaluation order by a fixed amount, compensated with guard
// coefficients.  Cap: order + 2 iterations, after which a still-moving prefix
// means the equation is not contractive.
inline Series solve_fixpoint(const std::string& name, const std::string& phi,
                             std::size_t order, const Environment& env = {}) {
    std::size_t guard = 0;
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::size_t work = order + guard;
        Environment scratch = env;
        Series u = Series(work);  // start from 0
        bool lost = false;
        for (std::size_t it = 0; it < order + 2; ++it) {
            scratch.insert_or_assign(name, u.padded(work));
            Series next = ExprParser(phi, work, &scratch).parse();
            if (next.order() < order) {  // divisions ate the guard; widen and retry
                guard += order - next.order();
                lost = true;
                break;
            }
            if (u.order() >= order && next.equal_to(u, order))
                return next.truncated(order);
            u = next;
        }
        if (!lost)
            fail(Errc::not_contractive,
                 "fixed point of '" + name + " = " + phi + "' did not stabilize in " +
                     std::to_string(order + 2) + " iterations");
    }
    fail(Errc::not_contractive, "fixed point '" + phi + "' keeps losing truncation order");
}

}  // namespace riordan
