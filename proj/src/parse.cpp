#include "frobsig/parse.hpp"

#include <cctype>

namespace frobsig {

namespace {

class Parser {
   public:
    Parser(const std::string& text, const RingPtr& ring) : s_(text), ring_(ring) {}

    Poly run() {
        Poly f = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return f;
    }

   private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Poly parse_expr() {
        Poly acc = parse_term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc += parse_term();
            } else if (c == '-') {
                ++pos_;
                acc -= parse_term();
            } else {
                return acc;
            }
        }
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        while (peek() == '*') {
            ++pos_;
            acc *= parse_factor();
        }
        return acc;
    }

    Poly parse_factor() {
        Poly base = parse_base();
        if (peek() == '^') {
            ++pos_;
            size_t at = pos_;
            skip_ws();
            at = pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw ParseError("expected integer exponent", at);
            std::uint64_t e = parse_uint();
            return base.pow(e);
        }
        return base;
    }

    Poly parse_base() {
        char c = peek();
        size_t at = pos_;
        if (c == '\0') throw ParseError("unexpected end of input", pos_);
        if (c == '(') {
            ++pos_;
            Poly inner = parse_expr();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return -parse_factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t v = parse_uint();
            return Poly::constant(ring_, static_cast<std::int64_t>(v % ring_->p()));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                name += s_[pos_++];
            int idx = ring_->var_index(name);
            if (idx < 0) throw ParseError("unknown variable '" + name + "'", at);
            return Poly::variable(ring_, static_cast<size_t>(idx));
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    std::uint64_t parse_uint() {
        std::uint64_t v = 0;
        size_t at = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
            if (v > (1ull << 40)) throw ParseError("integer literal too large", at);
            ++pos_;
        }
        return v;
    }

    const std::string& s_;
    RingPtr ring_;
    size_t pos_ = 0;
};

}  // namespace

Poly poly_parse(const std::string& text, const RingPtr& ring) { return Parser(text, ring).run(); }

}  // namespace frobsig
