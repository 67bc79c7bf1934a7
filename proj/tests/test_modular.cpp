#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "daha/modular.hpp"

using namespace daha;

TEST_CASE("conjugation basics") {
    const int p = 3;
    RepZ rep(p);
    ZOperator I = ZOperator::identity(rep.dim(), p);
    ZOperator T = rep.build_T();
    CHECK(conjugate(I, T) == I);
    // multiplication operators commute, so conjugating X by one fixes it
    ZOperator X = rep.build_X();
    ZOperator V = rep.mult_operator(rep.gaussian_element());
    CHECK(conjugate(X, V) == X);
    YBasisBuilder b(rep);
    ZOperator S = b.build_S();
    CHECK(conjugate(T, S) == T);
}

TEST_CASE("tau_plus realizes the expected generator images") {
    RepZ rep(3);
    ModularAction act(rep);
    CheckSuite suite = act.verify_tau_plus();
    for (const auto& r : suite.reports) {
        INFO(r.relation);
        CHECK(r.ok);
    }
}

TEST_CASE("tau_minus from the braid relation") {
    RepZ rep(3);
    ModularAction act(rep);
    CheckSuite suite = act.verify_tau_minus();
    for (const auto& r : suite.reports) {
        INFO(r.relation);
        CHECK(r.ok);
    }
    // tau_-^{-1} really inverts tau_-
    ZOperator Y = rep.build_Y();
    CHECK(act.tau_minus_inv(act.tau_minus(Y)) == Y);
}

TEST_CASE("full psl2z suite at p = 3") {
    RepZ rep(3);
    ModularAction act(rep);
    CheckSuite suite = act.verify_psl2z();
    for (const auto& r : suite.reports) {
        INFO(r.relation);
        CHECK(r.ok);
    }
}

TEST_CASE("sigma squared conjugates like T^-1 ... T") {
    const int p = 4;
    RepZ rep(p);
    ModularAction act(rep);
    ZOperator X = rep.build_X();
    ZOperator T = rep.build_T();
    ZOperator Tinv = rep.invert_T(T);
    CHECK(act.sigma(act.sigma(X)) == Tinv * X * T);
}
