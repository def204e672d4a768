#pragma once

// Parser for the CLI expression grammar over the generator algebra:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor | factor)*     (juxtaposition multiplies)
//   factor := atom ('^' exponent)?
//   atom   := generator | integer | 'q' | '(' expr ')'
//   generator := 'L[a,b]' | 'p[a]' | 'SL[a,b]' | 'Sp[a]'   (1-based indices)
// Division and negative powers require a purely scalar operand.

#include <qhopf/algebra.hpp>
#include <qhopf/scalar.hpp>

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

namespace qhopf {

namespace detail {

class NcParser {
public:
    NcParser(std::string_view text, int dim) : s_(text), n_(dim) {}

    NcPoly parse() {
        NcPoly v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw parse_error("unexpected trailing input", pos_);
        return v;
    }

private:
    std::string_view s_;
    int n_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool starts_factor() {
        char c = peek();
        return c == '(' || c == 'q' || c == 'L' || c == 'p' || c == 'S' ||
               std::isdigit(static_cast<unsigned char>(c));
    }

    static std::optional<Scalar> as_constant(const NcPoly& p) {
        if (p.is_zero()) return Scalar(0);
        if (p.term_count() == 1 && p.terms().begin()->first.empty())
            return p.terms().begin()->second;
        return std::nullopt;
    }

    NcPoly expr() {
        NcPoly v = term();
        for (;;) {
            if (eat('+')) v = v + term();
            else if (eat('-')) v = v - term();
            else return v;
        }
    }
    NcPoly term() {
        NcPoly v = unary();
        for (;;) {
            if (eat('*')) {
                v = v * unary();
            } else if (peek() == '/') {
                std::size_t at = pos_;
                eat('/');
                NcPoly d = unary();
                auto c = as_constant(d);
                if (!c) throw parse_error("division by a noncommutative factor", at);
                if (c->is_zero()) throw parse_error("division by zero", at);
                v = c->inverse() * v;
            } else if (starts_factor()) {
                v = v * unary();
            } else {
                return v;
            }
        }
    }
    NcPoly unary() {
        if (eat('-')) return Scalar(-1) * unary();
        return factor();
    }
    NcPoly factor() {
        NcPoly base = atom();
        if (peek() == '^') {
            std::size_t at = pos_;
            eat('^');
            int e = exponent();
            auto c = as_constant(base);
            if (c) return NcPoly(c->pow(e));
            if (e < 0)
                throw parse_error("negative power of a noncommutative factor", at);
            NcPoly r = NcPoly::one();
            for (int i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }
    int exponent() {
        skip_ws();
        bool paren = eat('(');
        bool neg = eat('-');
        long v = integer();
        if (paren && !eat(')')) throw parse_error("expected ')' after exponent", pos_);
        if (v > 1000) throw parse_error("exponent too large", pos_);
        return neg ? -static_cast<int>(v) : static_cast<int>(v);
    }
    long integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw parse_error("expected integer", start);
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }
    int index1() {  // 1-based index, validated against the dimension
        std::size_t at = pos_;
        long v = integer();
        if (v < 1 || v > n_)
            throw parse_error("generator index out of range 1.." + std::to_string(n_), at);
        return static_cast<int>(v - 1);
    }
    NcPoly atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw parse_error("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            NcPoly v = expr();
            if (!eat(')')) throw parse_error("expected ')'", pos_);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            mpz_class v(std::string(s_.substr(start, pos_ - start)));
            return NcPoly(Scalar(Poly(std::move(v))));
        }
        if (c == 'q') {
            ++pos_;
            return NcPoly(Scalar::q_power(1));
        }
        if (c == 'S') {
            ++pos_;
            if (pos_ < s_.size() && s_[pos_] == 'L') {
                ++pos_;
                if (!eat('[')) throw parse_error("expected '[' after SL", pos_);
                int a = index1();
                if (!eat(',')) throw parse_error("expected ',' in SL index", pos_);
                int b = index1();
                if (!eat(']')) throw parse_error("expected ']'", pos_);
                return NcPoly({gen_s_lambda(a, b)}, Scalar(1));
            }
            if (pos_ < s_.size() && s_[pos_] == 'p') {
                ++pos_;
                if (!eat('[')) throw parse_error("expected '[' after Sp", pos_);
                int a = index1();
                if (!eat(']')) throw parse_error("expected ']'", pos_);
                return NcPoly({gen_s_p(a)}, Scalar(1));
            }
            throw parse_error("unknown generator starting with 'S'", pos_);
        }
        if (c == 'L') {
            ++pos_;
            if (!eat('[')) throw parse_error("expected '[' after L", pos_);
            int a = index1();
            if (!eat(',')) throw parse_error("expected ',' in L index", pos_);
            int b = index1();
            if (!eat(']')) throw parse_error("expected ']'", pos_);
            return NcPoly({gen_lambda(a, b)}, Scalar(1));
        }
        if (c == 'p') {
            ++pos_;
            if (!eat('[')) throw parse_error("expected '[' after p", pos_);
            int a = index1();
            if (!eat(']')) throw parse_error("expected ']'", pos_);
            return NcPoly({gen_p(a)}, Scalar(1));
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }
};

}  // namespace detail

inline NcPoly parse_ncpoly(std::string_view text, int dim) {
    return detail::NcParser(text, dim).parse();
}

}  // namespace qhopf
