#include "kha/parser.hpp"

#include <cctype>

namespace kha {

namespace {

class Parser {
public:
    Parser(std::string_view text, const ParseContext& ctx) : text_(text), ctx_(ctx) {}

    RatFunc run() {
        RatFunc r = expr();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError("unexpected trailing input", pos_);
        return r;
    }

private:
    std::string_view text_;
    const ParseContext& ctx_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c))
            throw SyntaxError(std::string("expected '") + c + "'", pos_);
    }

    long integer() {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw SyntaxError("expected integer", start);
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return neg ? -v : v;
    }

    RatFunc expr() {
        skip_ws();
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        RatFunc r = term();
        if (neg) r = -r;
        for (;;) {
            if (accept('+'))
                r = r + term();
            else if (accept('-'))
                r = r - term();
            else
                break;
        }
        return r;
    }

    RatFunc term() {
        RatFunc r = factor();
        for (;;) {
            if (accept('*')) {
                r = r * factor();
            } else if (accept('/')) {
                r = r * factor().inverse();
            } else {
                break;
            }
        }
        return r;
    }

    RatFunc factor() {
        RatFunc base = atom();
        skip_ws();
        if (accept('^')) {
            bool paren = accept('(');
            long k = integer();
            if (paren) expect(')');
            RatFunc r = RatFunc::one();
            RatFunc b = k < 0 ? base.inverse() : base;
            for (long i = 0; i < (k < 0 ? -k : k); ++i) r = r * b;
            return r;
        }
        return base;
    }

    RatFunc atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc r = expr();
            expect(')');
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = integer();
            return RatFunc(Rational(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            std::string name;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                name += text_[pos_];
                ++pos_;
            }
            if (name == "z" && peek('[')) return variable(start);
            if (!ctx_.knows_param(name))
                throw UnknownSymbol("undeclared symbol '" + name + "' at position " +
                                    std::to_string(start));
            return RatFunc::monomial(Monomial::of(Sym::parameter(name)));
        }
        throw SyntaxError("unexpected character", pos_);
    }

    RatFunc variable(std::size_t start) {
        expect('[');
        long vertex = integer();
        expect(',');
        long slot = integer();
        expect(']');
        if (slot < 1)
            throw SyntaxError("variable slot must be positive", start);
        if (ctx_.check_dims) {
            auto it = ctx_.dims.find(static_cast<int>(vertex));
            if (it == ctx_.dims.end())
                throw UnknownSymbol("unknown vertex " + std::to_string(vertex) +
                                    " at position " + std::to_string(start));
            if (slot > it->second)
                throw UnknownSymbol("slot " + std::to_string(slot) + " exceeds dimension " +
                                    std::to_string(it->second) + " at vertex " +
                                    std::to_string(vertex));
        }
        return RatFunc::monomial(
            Monomial::of(Sym::var(static_cast<int>(vertex), static_cast<int>(slot))));
    }
};

}  // namespace

RatFunc parse_expr(std::string_view text, const ParseContext& ctx) {
    return Parser(text, ctx).run();
}

}  // namespace kha
