#pragma once

// Built-in generators of data satisfying the full condition set, used as
// fixtures and as oracles: the classical (flip) datum in any dimension, the
// standard quantum general-linear datum for N = 2, 3, and a brute-force
// solver for the N = 1 specialization.

#include <qhopf/qgdata.hpp>
#include <qhopf/scalar.hpp>
#include <qhopf/tensor.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qhopf {

// R = flip, Z = 0, T = 0, lambda = 0.
inline InhomogeneousData classical(int N) {
    return InhomogeneousData(N, Tensor::flip(N), Tensor(N, 2, 1), Tensor(N, 2, 0), Scalar(0));
}

// R is the standard quantum general-linear braid operator scaled by 1/q so
// that the characteristic equation (R - I)(R + q^-2 I) = 0 holds, i.e.
// lambda = q^-2 - 1.  Entries before scaling: q on repeated index pairs,
// 1 on swapped pairs, q - q^-1 on ordered pairs (i < j).
inline InhomogeneousData glq(int N) {
    if (N != 2 && N != 3) throw data_error("glq is provided for N = 2 and N = 3 only");
    Tensor R(N, 2, 2);
    const Scalar inv_q = Scalar::q_power(-1);
    const Scalar one(1);
    const Scalar hook = one - Scalar::q_power(-2);  // (q - q^-1)/q
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            std::size_t row = static_cast<std::size_t>(i) * N + j;
            if (i == j) {
                R.at(row, row) = one;
            } else {
                R.at(row, static_cast<std::size_t>(j) * N + i) = inv_q;
                if (i < j) R.at(row, row) = hook;
            }
        }
    return InhomogeneousData(N, std::move(R), Tensor(N, 2, 1), Tensor(N, 2, 0),
                             Scalar::q_power(-2) - Scalar(1));
}

struct SolveConstraints {
    std::optional<Scalar> lambda;
    bool want_nonzero_Z = false;
    bool want_nonzero_T = false;
};

// Brute-force solver for the N = 1 specialization, where R, Z, T, lambda are
// four scalars.  Candidates range over a fixed grid of monomials and the
// structured values 1 and -(1 + lambda); every candidate tuple is run
// through the full condition set (strict mode, or the lambda = 0 mode with
// the algebra-level consistency decided by ideal membership) and survivors
// are returned.  A desk-scale oracle, not a classification engine.
inline std::vector<InhomogeneousData> solve_n1(const SolveConstraints& constraints = {});

}  // namespace qhopf

#include <qhopf/algebra.hpp>

namespace qhopf {

inline std::vector<InhomogeneousData> solve_n1(const SolveConstraints& constraints) {
    std::vector<Scalar> lambdas;
    if (constraints.lambda) {
        lambdas.push_back(*constraints.lambda);
    } else {
        lambdas = {Scalar(0),
                   Scalar(1),
                   Scalar(-2),
                   parse_scalar("q - 1"),
                   parse_scalar("q^-1 - 1"),
                   parse_scalar("q^2 - 1"),
                   parse_scalar("q^-2 - 1")};
    }
    const std::vector<Scalar> monomials = {Scalar(0),           Scalar(1),
                                           Scalar(-1),          Scalar::q_power(1),
                                           Scalar::q_power(-1), -Scalar::q_power(1),
                                           -Scalar::q_power(-1)};

    auto push_unique = [](std::vector<Scalar>& pool, const Scalar& v) {
        for (const auto& x : pool)
            if (x == v) return;
        pool.push_back(v);
    };

    std::vector<InhomogeneousData> found;
    std::set<std::string> seen;
    for (const Scalar& lam : lambdas) {
        if (lam == Scalar(-1)) continue;
        std::vector<Scalar> r_pool = {Scalar(1), -(Scalar(1) + lam)};
        for (const auto& m : monomials) push_unique(r_pool, m);
        std::vector<Scalar> zt_pool = monomials;
        push_unique(zt_pool, Scalar(1) + lam);
        push_unique(zt_pool, -(Scalar(1) + lam));

        for (const Scalar& r : r_pool) {
            if (r.is_zero()) continue;
            // cheap screen on the scalar characteristic and inverse relations
            // before the full condition set runs
            if (!((r - Scalar(1)) * (r + Scalar(1) + lam)).is_zero()) continue;
            if (!((r + lam) * r - (Scalar(1) + lam)).is_zero()) continue;
            for (const Scalar& z : zt_pool)
                for (const Scalar& t : zt_pool) {
                    if (constraints.want_nonzero_Z && z.is_zero()) continue;
                    if (constraints.want_nonzero_T && t.is_zero()) continue;
                    Tensor R(1, 2, 2), Z(1, 2, 1), T(1, 2, 0);
                    R.at(0, 0) = r;
                    Z.at(0, 0) = z;
                    T.at(0, 0) = t;
                    try {
                        InhomogeneousData cand(1, R, Z, T, lam);
                        CheckMode mode =
                            lam.is_zero() ? CheckMode::lambda_zero : CheckMode::strict;
                        if (!check_axioms(cand, mode).all_pass()) continue;
                        if (lam.is_zero() && !check_lambda_zero(cand).all_pass()) continue;
                        std::string key =
                            r.str() + "|" + z.str() + "|" + t.str() + "|" + lam.str();
                        if (seen.insert(key).second) found.push_back(std::move(cand));
                    } catch (const data_error&) {
                        // non-invertible or excluded candidate
                    }
                }
        }
    }
    return found;
}

}  // namespace qhopf
