#pragma once

// Printer for noncommutative polynomials in the CLI expression grammar:
// generators L[a,b], p[a], SL[a,b], Sp[a] with 1-based indices, products
// joined by '*', scalar coefficients in the scalar grammar.  Output
// re-parses to the same polynomial.

#include <qhopf/algebra.hpp>

#include <string>

namespace qhopf {

namespace detail {

inline bool scalar_prints_negative(const Scalar& s) {
    return !s.is_zero() && s.num().leading() < 0;
}

inline std::string coeff_str(const Scalar& s) {
    std::string t = s.str();
    // multi-term scalars need parentheses when used as a factor
    if (t.find(" + ") != std::string::npos || t.find(" - ") != std::string::npos)
        return "(" + t + ")";
    return t;
}

}  // namespace detail

inline std::string NcPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Word& w = it->first;
        const Scalar& c = it->second;
        bool neg = detail::scalar_prints_negative(c);
        Scalar mag = neg ? -c : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (w.empty()) {
            out += detail::coeff_str(mag);
        } else if (mag.is_one()) {
            out += word_str(w);
        } else {
            out += detail::coeff_str(mag) + " * " + word_str(w);
        }
    }
    return out;
}

}  // namespace qhopf
