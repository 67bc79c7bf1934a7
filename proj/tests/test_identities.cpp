#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "daha/identities.hpp"
#include "daha/qnum.hpp"

using namespace daha;

namespace {
// inner summation range r in {2..p-1} union {p+2..2p-1}
std::vector<int> inner_range(int p) {
    std::vector<int> out;
    for (int r = 2; r <= p - 1; ++r) out.push_back(r);
    for (int r = p + 2; r <= 2 * p - 1; ++r) out.push_back(r);
    return out;
}
}  // namespace

TEST_CASE("frozen closed-form values at p = 3") {
    const int p = 3;
    // sum over r of [s,r][r,j] at s=1, j=2 equals [1]((-1)^3 - 1) = -2
    CycScalar acc = CycScalar::zero(p);
    for (int r : inner_range(p)) acc += bracket2(p, 1, r) * bracket2(p, r, 2);
    CHECK(acc == CycScalar::from_rational(p, -2));
    // sum over r of [s,r-1][r-1,j] at s=2, j=1 equals [2](1-(-1)^3) = 2[2]
    acc = CycScalar::zero(p);
    for (int r : inner_range(p)) acc += bracket2(p, 2, r - 1) * bracket2(p, r - 1, 1);
    CHECK(acc == q_bracket(p, 2) * Rational(2));
    // sum of {s,r} over a full period vanishes
    for (int s = 1; s <= 2 * p; ++s) {
        acc = CycScalar::zero(p);
        for (int r = 1; r <= 2 * p; ++r) acc += brace2(p, s, r);
        CHECK(acc.is_zero());
    }
}

TEST_CASE("appendix summation suites pass for p = 3, 4") {
    for (int p : {3, 4}) {
        for (const CheckSuite& suite :
             {verify_appendix_e_sums(p), verify_appendix_w_sums(p)}) {
            for (const auto& r : suite.reports) {
                INFO(suite.name << ": " << r.relation);
                CHECK(r.ok);
            }
        }
    }
}

TEST_CASE("assembled S^2 coefficients match the matrix product at p = 3") {
    RepZ rep(3);
    CheckSuite suite = verify_S_squared_assembly(rep);
    for (const auto& r : suite.reports) {
        INFO(r.relation);
        CHECK(r.ok);
    }
}
