#include <catch2/catch_amalgamated.hpp>

#include <qhopf/examples.hpp>
#include <qhopf/functionals.hpp>

using namespace qhopf;

namespace {

Scalar substitute_q_one(const Scalar& s) {
    std::string text = s.str(), out;
    for (char c : text) {
        if (c == 'q') out += "(1)";
        else out += c;
    }
    return parse_scalar(out);
}

}  // namespace

TEST_CASE("classical data in small dimensions") {
    auto d1 = classical(1);
    CHECK(d1.R.at(0, 0) == Scalar(1));
    CHECK(check_axioms(d1).all_pass());
    CHECK(check_axioms(classical(2)).all_pass());
    CHECK(check_axioms(classical(3)).all_pass());
}

TEST_CASE("quantum datum satisfies the characteristic equation oracle") {
    for (int n : {2, 3}) {
        auto d = glq(n);
        Tensor i2 = Tensor::identity_op(n, 2);
        CHECK(compose(d.R - i2, d.R + Scalar::q_power(-2) * i2).is_zero());
        CHECK(d.lambda == parse_scalar("q^-2 - 1"));
    }
    CHECK_THROWS_AS(glq(4), data_error);
    CHECK_THROWS_AS(glq(1), data_error);
}

TEST_CASE("quantum Yang-Baxter holds by direct evaluation") {
    auto d = glq(2);
    Tensor i1 = Tensor::identity_op(2, 1);
    Tensor lhs = compose(compose(kron(i1, d.R), kron(d.R, i1)), kron(i1, d.R));
    Tensor rhs = compose(compose(kron(d.R, i1), kron(i1, d.R)), kron(d.R, i1));
    CHECK(lhs == rhs);
}

TEST_CASE("substituting q = 1 into the quantum datum yields the classical one") {
    for (int n : {2, 3}) {
        auto dq = glq(n);
        auto dc = classical(n);
        for (std::size_t i = 0; i < dq.R.entries().size(); ++i)
            CHECK(substitute_q_one(dq.R.entries()[i]) == dc.R.entries()[i]);
        CHECK(substitute_q_one(dq.lambda) == dc.lambda);
    }
}

TEST_CASE("solver finds the trivial datum") {
    auto sols = solve_n1({});
    bool trivial = false;
    for (const auto& d : sols)
        if (d.R.at(0, 0) == Scalar(1) && d.Z.is_zero() && d.T.is_zero() && d.lambda.is_zero())
            trivial = true;
    CHECK(trivial);
    CHECK(!sols.empty());
}

TEST_CASE("every solver datum re-passes the checker in its mode") {
    auto sols = solve_n1({});
    for (const auto& d : sols) {
        CheckMode mode = d.lambda.is_zero() ? CheckMode::lambda_zero : CheckMode::strict;
        CHECK(check_axioms(d, mode).all_pass());
        CHECK(implication_suite(d, mode).all_pass());
    }
}

TEST_CASE("solver finds data with nonzero translation structure") {
    SolveConstraints want_z;
    want_z.want_nonzero_Z = true;
    auto with_z = solve_n1(want_z);
    CHECK(!with_z.empty());
    for (const auto& d : with_z) {
        CHECK(!d.Z.is_zero());
        CheckMode mode = d.lambda.is_zero() ? CheckMode::lambda_zero : CheckMode::strict;
        CHECK(check_axioms(d, mode).all_pass());
    }

    SolveConstraints want_t;
    want_t.want_nonzero_T = true;
    want_t.lambda = Scalar(0);
    auto with_t = solve_n1(want_t);
    CHECK(!with_t.empty());
    for (const auto& d : with_t) CHECK(!d.T.is_zero());
}

TEST_CASE("lambda = -1 admits no solution") {
    SolveConstraints c;
    c.lambda = Scalar(-1);
    CHECK(solve_n1(c).empty());
}

TEST_CASE("solved data support the functional representation") {
    SolveConstraints c;
    c.want_nonzero_Z = true;
    auto sols = solve_n1(c);
    REQUIRE(!sols.empty());
    const auto& d = sols.front();
    auto rep = check_representation(d);
    for (const auto& e : rep.entries) {
        INFO(e.name << " " << e.note);
        CHECK(e.pass);
    }
}
