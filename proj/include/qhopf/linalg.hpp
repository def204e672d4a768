#pragma once

// Exact dense linear algebra over Q(q).  Elimination is fraction-free
// (Bareiss): each row is cleared to polynomial entries first, the forward
// sweep divides by the previous pivot exactly, and only the back
// substitution returns to field arithmetic.

#include <qhopf/scalar.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qhopf {

struct singular_error : std::runtime_error {
    explicit singular_error(const std::string& what) : std::runtime_error(what) {}
};

struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<Scalar> e;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), e(r * c) {}

    Scalar& at(std::size_t r, std::size_t c) { return e[r * cols + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return e[r * cols + c]; }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
        return m;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols != b.rows) throw std::logic_error("Mat: shape mismatch in product");
        Mat r(a.rows, b.cols);
        for (std::size_t i = 0; i < a.rows; ++i)
            for (std::size_t k = 0; k < a.cols; ++k) {
                const Scalar& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols; ++j) {
                    const Scalar& bkj = b.at(k, j);
                    if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        if (a.rows != b.rows || a.cols != b.cols) throw std::logic_error("Mat: shape mismatch");
        Mat r(a.rows, a.cols);
        for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] - b.e[i];
        return r;
    }
    friend Mat operator+(const Mat& a, const Mat& b) {
        if (a.rows != b.rows || a.cols != b.cols) throw std::logic_error("Mat: shape mismatch");
        Mat r(a.rows, a.cols);
        for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
        return r;
    }
    bool is_zero() const {
        for (const auto& x : e)
            if (!x.is_zero()) return false;
        return true;
    }
    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows == b.rows && a.cols == b.cols && a.e == b.e;
    }
};

namespace detail {

inline Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    return Poly::div_exact(a * b, Poly::gcd(a, b));
}

// cheapness measure for pivot selection
inline std::pair<std::size_t, int> poly_cost(const Poly& p) {
    return {p.term_count(), p.degree()};
}

}  // namespace detail

// Solves A X = B exactly; A must be square and invertible over Q(q).
inline Mat solve_linear(const Mat& A, const Mat& B) {
    if (A.rows != A.cols || B.rows != A.rows)
        throw std::logic_error("solve_linear: shape mismatch");
    const std::size_t n = A.rows, m = B.cols, w = n + m;

    // clear denominators row by row
    std::vector<std::vector<Poly>> W(n, std::vector<Poly>(w));
    for (std::size_t i = 0; i < n; ++i) {
        Poly d(1);
        for (std::size_t j = 0; j < n; ++j) d = detail::poly_lcm(d, A.at(i, j).den());
        for (std::size_t j = 0; j < m; ++j) d = detail::poly_lcm(d, B.at(i, j).den());
        auto scaled = [&d](const Scalar& s) {
            return s.num() * Poly::div_exact(d, s.den());
        };
        for (std::size_t j = 0; j < n; ++j) W[i][j] = scaled(A.at(i, j));
        for (std::size_t j = 0; j < m; ++j) W[i][n + j] = scaled(B.at(i, j));
    }

    Poly prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = n;
        for (std::size_t r = k; r < n; ++r) {
            if (W[r][k].is_zero()) continue;
            if (best == n || detail::poly_cost(W[r][k]) < detail::poly_cost(W[best][k]))
                best = r;
        }
        if (best == n) throw singular_error("singular matrix over Q(q)");
        if (best != k) std::swap(W[best], W[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < w; ++j)
                W[i][j] = Poly::div_exact(W[k][k] * W[i][j] - W[i][k] * W[k][j], prev);
            W[i][k] = Poly();
        }
        prev = W[k][k];
    }

    Mat X(n, m);
    for (std::size_t i = n; i-- > 0;) {
        Scalar piv{W[i][i], Poly(1)};
        for (std::size_t c = 0; c < m; ++c) {
            Scalar s{W[i][n + c], Poly(1)};
            for (std::size_t j = i + 1; j < n; ++j)
                if (!W[i][j].is_zero() && !X.at(j, c).is_zero())
                    s -= Scalar{W[i][j], Poly(1)} * X.at(j, c);
            X.at(i, c) = s / piv;
        }
    }
    return X;
}

inline Mat invert(const Mat& A) { return solve_linear(A, Mat::identity(A.rows)); }

}  // namespace qhopf
