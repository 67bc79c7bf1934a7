#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "daha/polyoracle.hpp"

using namespace daha;

namespace {
LaurentPoly monomial(int p, long long e) {
    LaurentPoly f(p);
    f.add_term(e, CycScalar::one(p));
    return f;
}

LaurentPoly random_poly(int p, std::mt19937& rng) {
    std::uniform_int_distribution<int> exp(-3 * p, 3 * p);
    std::uniform_int_distribution<int> coef(-3, 3);
    LaurentPoly f(p);
    for (int i = 0; i < 6; ++i)
        f.add_term(exp(rng), CycScalar::q_power(p, coef(rng)) * Rational(coef(rng)));
    return f;
}
}  // namespace

TEST_CASE("reduction into the exponent window") {
    const int p = 3;
    PolyOracle o(p);
    // X^{2p} is inside the window and stays
    CHECK(o.reduce(monomial(p, 2 * p)) == monomial(p, 2 * p));
    // X^{2p+1} -> 2X - X^{1-2p}
    LaurentPoly want(p);
    want.add_term(1, CycScalar::from_rational(p, 2));
    want.add_term(1 - 2 * p, -CycScalar::one(p));
    CHECK(o.reduce(monomial(p, 2 * p + 1)) == want);
    CHECK(o.reduce(o.one()) == o.one());
    std::mt19937 rng(2);
    for (int i = 0; i < 10; ++i) {
        LaurentPoly f = random_poly(p, rng);
        CHECK(o.reduce(o.reduce(f)) == o.reduce(f));
    }
}

TEST_CASE("T fixes constants up to the eigenvalue q") {
    const int p = 4;
    PolyOracle o(p);
    CHECK(o.op_T(o.one()) == o.one().scaled(CycScalar::q_power(p, 1)));
}

TEST_CASE("eigenfunction recursions hold with the sign of Y = -(s p T)") {
    const int p = 3;
    PolyOracle o(p);
    for (int s = 1; s <= 2 * p; ++s) {
        LaurentPoly us = o.reduce(chebyshev_U(p, s));
        LaurentPoly usq = o.reduce(chebyshev_U(p, s).substitute_zx(-2));
        CHECK(o.op_Y(us) == o.reduce(usq.scaled(-CycScalar::q_power(p, 1))));
    }
}

TEST_CASE("idempotents and nilpotents of the polynomial model") {
    const int p = 3;
    PolyOracle o(p);
    LaurentPoly sum(p);
    for (int s = 1; s <= 2 * p; ++s) sum = sum + o.e_poly(s);
    CHECK(sum == o.one());
    for (int s = 1; s <= 2 * p; ++s) {
        CycScalar qs = CycScalar::q_power(p, s);
        CHECK(o.op_X(o.w_poly(s)) == o.w_poly(s).scaled(qs));
        CHECK(o.op_X(o.e_poly(s)) ==
              (o.e_poly(s) + o.w_poly(s)).scaled(qs));
    }
}

TEST_CASE("u eigenfunctions satisfy Y u = q^{-s} u") {
    const int p = 3;
    PolyOracle o(p);
    for (int s = 1; s <= 2 * p; ++s)
        CHECK(o.op_Y(o.u_poly(s)) ==
              o.u_poly(s).scaled(CycScalar::q_power(p, -s)));
}

TEST_CASE("the s = 2p special eigenfunction") {
    const int p = 3;
    PolyOracle o(p);
    CycScalar c = CycScalar::sqrt_2p(p) * make_fraction(1, 2L * p * p);
    CHECK(o.f_special_poly(2 * p) == o.reduce(chebyshev_U(p, p).scaled(c)));
}

TEST_CASE("decomposition") {
    const int p = 3;
    PolyOracle o(p);
    auto [e1, w1] = o.decompose(o.one());
    for (int s = 0; s < 2 * p; ++s) {
        CHECK(e1[s] == CycScalar::one(p));
        CHECK(w1[s].is_zero());
    }
    auto [ex, wx] = o.decompose(monomial(p, 1));
    for (int s = 1; s <= 2 * p; ++s) {
        CHECK(ex[s - 1] == CycScalar::q_power(p, s));
        CHECK(wx[s - 1] == CycScalar::q_power(p, s));
    }
    std::mt19937 rng(9);
    for (int i = 0; i < 6; ++i) {
        LaurentPoly f = o.reduce(random_poly(p, rng));
        auto [ec, wc] = o.decompose(f);
        CHECK(o.reassemble(ec, wc) == f);
    }
}

TEST_CASE("oracle crosscheck against the abstract module") {
    for (int p : {3, 6}) {
        RepZ rep(p);
        CheckSuite suite = PolyOracle(p).crosscheck_matrices(rep);
        for (const auto& r : suite.reports) {
            INFO(r.relation);
            CHECK(r.ok);
        }
    }
}

TEST_CASE("full oracle suite at p = 3") {
    RepZ rep(3);
    CheckSuite suite = PolyOracle(3).verify(rep);
    for (const auto& r : suite.reports) {
        INFO(r.relation);
        CHECK(r.ok);
    }
}
