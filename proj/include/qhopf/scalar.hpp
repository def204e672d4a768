#pragma once

// Exact arithmetic in Q(q): rational functions in one deformation parameter q
// with arbitrary-precision integer coefficients.  Every Scalar is kept in
// canonical form (coprime numerator/denominator, denominator with positive
// leading coefficient and reduced integer content), so operator== decides
// field equality.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qhopf {

struct parse_error : std::runtime_error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

struct division_by_zero : std::runtime_error {
    division_by_zero() : std::runtime_error("division by zero in Q(q)") {}
};

// Dense polynomial in q over Z, coefficients in ascending exponent order,
// no trailing zero coefficients.
class Poly {
public:
    Poly() = default;
    Poly(long v) { if (v != 0) c_.emplace_back(v); }
    explicit Poly(mpz_class v) { if (v != 0) c_.push_back(std::move(v)); }
    explicit Poly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(mpz_class coeff, int exp) {
        Poly p;
        if (coeff == 0) return p;
        p.c_.assign(static_cast<std::size_t>(exp) + 1, mpz_class(0));
        p.c_.back() = std::move(coeff);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
    std::size_t term_count() const {
        std::size_t n = 0;
        for (const auto& x : c_) if (x != 0) ++n;
        return n;
    }
    const mpz_class& coeff(std::size_t i) const {
        static const mpz_class zero(0);
        return i < c_.size() ? c_[i] : zero;
    }
    const mpz_class& leading() const { return c_.back(); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) - b.coeff(i);
        r.trim();
        return r;
    }
    Poly operator-() const {
        Poly r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Exact division: requires b | a in Z[q]; throws std::logic_error otherwise.
    static Poly div_exact(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw division_by_zero();
        if (a.is_zero()) return Poly();
        if (a.degree() < b.degree()) throw std::logic_error("div_exact: not divisible");
        std::vector<mpz_class> rem = a.c_;
        std::vector<mpz_class> quot(a.c_.size() - b.c_.size() + 1, mpz_class(0));
        const mpz_class& lb = b.leading();
        for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
            mpz_class& head = rem[k + b.degree()];
            if (head == 0) continue;
            mpz_class qk, r;
            mpz_tdiv_qr(qk.get_mpz_t(), r.get_mpz_t(), head.get_mpz_t(), lb.get_mpz_t());
            if (r != 0) throw std::logic_error("div_exact: not divisible");
            quot[k] = qk;
            for (std::size_t i = 0; i < b.c_.size(); ++i)
                rem[k + i] -= qk * b.c_[i];
        }
        for (const auto& x : rem)
            if (x != 0) throw std::logic_error("div_exact: nonzero remainder");
        return Poly(std::move(quot));
    }

    mpz_class content() const {  // gcd of coefficients, nonnegative
        mpz_class g(0);
        for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        return g;
    }

    // gcd with positive leading coefficient; content folded in.
    static Poly gcd(Poly a, Poly b) {
        if (a.is_zero()) return b.positive_leading();
        if (b.is_zero()) return a.positive_leading();
        mpz_class ca = a.content(), cb = b.content(), cg;
        mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        a = a.divide_content(ca);
        b = b.divide_content(cb);
        // primitive PRS
        while (!b.is_zero()) {
            Poly r = pseudo_rem(a, b);
            a = std::move(b);
            b = r.is_zero() ? Poly() : r.divide_content(r.content());
        }
        Poly g = a.positive_leading();
        return Poly(cg) * g;
    }

    std::string str() const;  // plain polynomial, descending exponents

private:
    std::vector<mpz_class> c_;

    void trim() { while (!c_.empty() && c_.back() == 0) c_.pop_back(); }
    Poly positive_leading() const { return (!c_.empty() && leading() < 0) ? -*this : *this; }
    Poly divide_content(const mpz_class& g) const {
        Poly r(*this);
        for (auto& x : r.c_) x /= g;
        return r;
    }
    static Poly pseudo_rem(Poly a, const Poly& b) {
        while (!a.is_zero() && a.degree() >= b.degree()) {
            int shift = a.degree() - b.degree();
            mpz_class la = a.leading();
            const mpz_class& lb = b.leading();
            Poly scaled = a * Poly(lb) - Poly::monomial(la, shift) * b;
            a = std::move(scaled);
        }
        return a;
    }
};

class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(long v) : num_(v), den_(1) {}
    Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }
    explicit Scalar(Poly num) : num_(std::move(num)), den_(1) {}

    static Scalar q_power(int e) {
        if (e >= 0) return Scalar(Poly::monomial(1, e));
        return Scalar(Poly(1), Poly::monomial(1, -e));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_zero() || b.is_zero()) return Scalar();
        return Scalar(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw division_by_zero();
        return Scalar(a.num_ * b.den_, a.den_ * b.num_);
    }
    Scalar operator-() const {
        Scalar r(*this);
        r.num_ = -r.num_;
        return r;
    }
    Scalar inverse() const {
        if (is_zero()) throw division_by_zero();
        return Scalar(den_, num_);
    }
    Scalar pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        Scalar r(1), base(*this);
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) {  // arbitrary total order for map keys
        return a.str() < b.str();
    }

    std::string str() const;

private:
    Poly num_, den_;

    void canonicalize() {
        if (den_.is_zero()) throw division_by_zero();
        if (num_.is_zero()) { den_ = Poly(1); return; }
        Poly g = Poly::gcd(num_, den_);
        num_ = Poly::div_exact(num_, g);
        den_ = Poly::div_exact(den_, g);
        if (den_.leading() < 0) { num_ = -num_; den_ = -den_; }
    }
};

// ---------------------------------------------------------------------------
// printing

inline std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        if (i == 0) {
            out += a.get_str();
        } else {
            if (a != 1) out += a.get_str() + "*";
            out += (i == 1) ? "q" : "q^" + std::to_string(i);
        }
    }
    return out;
}

namespace detail {
inline bool is_monomial(const Poly& p, mpz_class& coeff, int& exp) {
    if (p.is_zero()) return false;
    if (p.term_count() != 1) return false;
    exp = p.degree();
    coeff = p.coeff(static_cast<std::size_t>(exp));
    return true;
}
}  // namespace detail

inline std::string Scalar::str() const {
    if (num_.is_zero()) return "0";
    mpz_class dc;
    int dexp;
    if (detail::is_monomial(den_, dc, dexp) && dc == 1) {
        // Laurent form: shift every exponent down by dexp.
        std::string out;
        bool first = true;
        for (int i = num_.degree(); i >= 0; --i) {
            const mpz_class& c = num_.coeff(static_cast<std::size_t>(i));
            if (c == 0) continue;
            mpz_class a = abs(c);
            if (first) {
                if (c < 0) out += "-";
                first = false;
            } else {
                out += (c < 0) ? " - " : " + ";
            }
            int e = i - dexp;
            if (e == 0) {
                out += a.get_str();
            } else {
                if (a != 1) out += a.get_str() + "*";
                out += (e == 1) ? "q" : "q^" + std::to_string(e);
            }
        }
        return out;
    }
    std::string ns = num_.str();
    if (num_.term_count() > 1) ns = "(" + ns + ")";
    std::string ds = den_.str();
    mpz_class nc;
    int nexp;
    bool den_simple = detail::is_monomial(den_, nc, nexp) && (nc == 1 || nexp == 0);
    if (!den_simple) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

// ---------------------------------------------------------------------------
// parsing
//
// Grammar: expr := term (('+'|'-') term)* ; term := unary (('*'|'/') unary)* ;
// unary := '-' unary | power ; power := atom ('^' exponent)? ;
// atom := integer | 'q' | '(' expr ')' ; exponent := ['-'] integer | '(' ['-'] integer ')'

namespace detail {

class ScalarParser {
public:
    explicit ScalarParser(std::string_view text) : s_(text) {}

    Scalar parse() {
        Scalar v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw parse_error("unexpected trailing input", pos_);
        return v;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    void skip_ws() { while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_; }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (eat('+')) v = v + term();
            else if (eat('-')) v = v - term();
            else return v;
        }
    }
    Scalar term() {
        Scalar v = unary();
        for (;;) {
            if (eat('*')) v = v * unary();
            else if (eat('/')) {
                std::size_t at = pos_;
                Scalar d = unary();
                if (d.is_zero()) throw parse_error("division by zero", at);
                v = v / d;
            } else return v;
        }
    }
    Scalar unary() {
        if (eat('-')) return -unary();
        return power();
    }
    Scalar power() {
        Scalar base = atom();
        if (eat('^')) {
            int e = exponent();
            return base.is_zero() && e < 0 ? throw parse_error("zero to negative power", pos_) : base.pow(e);
        }
        return base;
    }
    int exponent() {
        skip_ws();
        bool paren = eat('(');
        bool neg = eat('-');
        skip_ws();
        std::size_t start = pos_;
        long v = integer();
        if (paren && !eat(')')) throw parse_error("expected ')' after exponent", pos_);
        if (v > 1000) throw parse_error("exponent too large", start);
        return neg ? -static_cast<int>(v) : static_cast<int>(v);
    }
    long integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw parse_error("expected integer", start);
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }
    Scalar atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw parse_error("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            if (!eat(')')) throw parse_error("expected ')'", pos_);
            return v;
        }
        if (c == 'q') {
            ++pos_;
            return Scalar::q_power(1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            mpz_class v(std::string(s_.substr(start, pos_ - start)));
            return Scalar(Poly(std::move(v)));
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }
};

}  // namespace detail

inline Scalar parse_scalar(std::string_view text) {
    return detail::ScalarParser(text).parse();
}

}  // namespace qhopf
