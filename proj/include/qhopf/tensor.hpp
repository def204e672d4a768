#pragma once

// Dense tensors over Q(q) on the N-dimensional module V and its tensor
// powers.  A tensor carries `up` upper axes followed by `low` lower axes,
// each of extent N, stored row-major with the upper block most significant.
//
// Index convention: an operator A on V (x) V is stored as A[(n,m),(l,k)],
// the coefficient of source pair (l,k) in image pair (n,m); pairs flatten
// as n*N + m.

#include <qhopf/linalg.hpp>
#include <qhopf/scalar.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qhopf {

class Tensor {
public:
    Tensor() = default;
    Tensor(int dim, int up, int low)
        : dim_(dim), up_(up), low_(low), e_(pow_size(dim, up + low)) {}

    static Tensor identity_op(int dim, int factors) {
        Tensor t(dim, factors, factors);
        std::size_t n = t.rows();
        for (std::size_t i = 0; i < n; ++i) t.at(i, i) = Scalar(1);
        return t;
    }

    // flip on V (x) V: P[(n,m),(l,k)] = delta(n,k) delta(m,l)
    static Tensor flip(int dim) {
        Tensor t(dim, 2, 2);
        for (int n = 0; n < dim; ++n)
            for (int m = 0; m < dim; ++m)
                t.at(static_cast<std::size_t>(n) * dim + m,
                     static_cast<std::size_t>(m) * dim + n) = Scalar(1);
        return t;
    }

    int dim() const { return dim_; }
    int upper() const { return up_; }
    int lower() const { return low_; }
    std::size_t rows() const { return pow_size(dim_, up_); }
    std::size_t cols() const { return pow_size(dim_, low_); }
    bool is_square() const { return up_ == low_; }

    Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols() + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols() + c]; }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Tensor& a, const Tensor& b) {
        return a.dim_ == b.dim_ && a.up_ == b.up_ && a.low_ == b.low_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

    friend Tensor operator+(const Tensor& a, const Tensor& b) {
        a.require_same_shape(b);
        Tensor r(a);
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] + b.e_[i];
        return r;
    }
    friend Tensor operator-(const Tensor& a, const Tensor& b) {
        a.require_same_shape(b);
        Tensor r(a);
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] - b.e_[i];
        return r;
    }
    Tensor operator-() const {
        Tensor r(*this);
        for (auto& x : r.e_) x = -x;
        return r;
    }
    friend Tensor operator*(const Scalar& s, const Tensor& a) {
        Tensor r(a);
        for (auto& x : r.e_) x = s * x;
        return r;
    }

    const std::vector<Scalar>& entries() const { return e_; }
    std::vector<Scalar>& entries() { return e_; }

private:
    int dim_ = 0, up_ = 0, low_ = 0;
    std::vector<Scalar> e_;

    static std::size_t pow_size(int dim, int k) {
        std::size_t s = 1;
        for (int i = 0; i < k; ++i) s *= static_cast<std::size_t>(dim);
        return s;
    }
    void require_same_shape(const Tensor& o) const {
        if (dim_ != o.dim_ || up_ != o.up_ || low_ != o.low_)
            throw std::logic_error("tensor shape mismatch");
    }

    friend Tensor kron(const Tensor&, const Tensor&);
    friend Tensor compose(const Tensor&, const Tensor&);
};

// (A (x) B)[(ia,ib),(ja,jb)] = A[ia,ja] * B[ib,jb]
inline Tensor kron(const Tensor& a, const Tensor& b) {
    if (a.dim_ != b.dim_) throw std::logic_error("kron: dimension mismatch");
    Tensor r(a.dim_, a.up_ + b.up_, a.low_ + b.low_);
    const std::size_t ar = a.rows(), ac = a.cols(), br = b.rows(), bc = b.cols();
    for (std::size_t ia = 0; ia < ar; ++ia)
        for (std::size_t ja = 0; ja < ac; ++ja) {
            const Scalar& x = a.at(ia, ja);
            if (x.is_zero()) continue;
            for (std::size_t ib = 0; ib < br; ++ib)
                for (std::size_t jb = 0; jb < bc; ++jb) {
                    const Scalar& y = b.at(ib, jb);
                    if (!y.is_zero())
                        r.at(ia * br + ib, ja * bc + jb) = x * y;
                }
        }
    return r;
}

// matrix product contracting a's lower block against b's upper block
inline Tensor compose(const Tensor& a, const Tensor& b) {
    if (a.dim_ != b.dim_ || a.low_ != b.up_)
        throw std::logic_error("compose: shape mismatch");
    Tensor r(a.dim_, a.up_, b.low_);
    const std::size_t n = a.cols(), rr = a.rows(), rc = b.cols();
    for (std::size_t i = 0; i < rr; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Scalar& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < rc; ++j) {
                const Scalar& y = b.at(k, j);
                if (!y.is_zero()) r.at(i, j) += x * y;
            }
        }
    return r;
}

inline Mat to_mat(const Tensor& t) {
    Mat m(t.rows(), t.cols());
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) m.at(i, j) = t.at(i, j);
    return m;
}

// exact inverse via fraction-free elimination
inline Tensor invert(const Tensor& a) {
    if (!a.is_square()) throw std::logic_error("invert: tensor not square");
    Mat x = invert(to_mat(a));
    Tensor r(a.dim(), a.upper(), a.lower());
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) r.at(i, j) = x.at(i, j);
    return r;
}

}  // namespace qhopf
