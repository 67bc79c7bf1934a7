#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "daha/qnum.hpp"
#include "daha/ybasis.hpp"

using namespace daha;

namespace {
bool vec_eq(const ZVector& a, const ZVector& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}
}  // namespace

TEST_CASE("u coefficient table") {
    const int p = 3;
    RepZ rep(p);
    YBasisBuilder b(rep);
    CycScalar inv_root = CycScalar::sqrt_2p(p) * make_fraction(1, 2 * p);
    for (int s = 1; s <= 2 * p; ++s) {
        CHECK(b.u_coeff_e(1, s) ==
              CycScalar::q_power(p, 1) * Rational(parity_sign(s)) * inv_root);
        CHECK(b.u_coeff_e(2, s).is_zero());
    }
    // Y^-1 u_s = q^s u_s
    ZOperator T = rep.build_T();
    ZOperator Yinv = rep.invert_Y(rep.build_Y(), rep.invert_T(T));
    for (int s = 1; s <= 2 * p; ++s) {
        ZVector u = b.u_vector(s);
        ZVector want = u;
        for (auto& c : want) c *= CycScalar::q_power(p, s);
        CHECK(vec_eq(Yinv * u, want));
    }
}

TEST_CASE("k vectors") {
    const int p = 3;
    RepZ rep(p);
    YBasisBuilder b(rep);
    CHECK_THROWS_AS(b.k_vector(1), DomainError);
    CHECK_THROWS_AS(b.k_vector(p), DomainError);
    ZOperator T = rep.build_T();
    ZOperator Yinv = rep.invert_Y(rep.build_Y(), rep.invert_T(T));
    ZVector k2 = b.k_vector(2);
    ZVector want = k2;
    for (auto& c : want) c *= CycScalar::q_power(p, 2);
    CHECK(vec_eq(Yinv * k2, want));
}

TEST_CASE("f vectors") {
    const int p = 4;
    RepZ rep(p);
    YBasisBuilder b(rep);
    CycScalar inv_root = CycScalar::sqrt_2p(p) * make_fraction(1, 2 * p);
    CycScalar qm1 = CycScalar::q_power(p, 1) - CycScalar::q_power(p, -1);
    for (int s = 1; s <= 2 * p; ++s) {
        CHECK(b.f_coeff_w(1, s) == CycScalar::q_power(p, 2 * s) *
                                       Rational(2 * parity_sign(s + 1)) *
                                       qm1.inverse() * inv_root);
        for (int j = 1; j <= 2 * p; ++j)
            if (j != p && j != 2 * p) CHECK(b.f_coeff_e(j, s).is_zero());
    }
    // the m-block of f_s vanishes exactly for s = 1, p, p+1, 2p
    for (int s : {1, p, p + 1, 2 * p})
        for (int j : rep.m_labels()) CHECK(b.f_coeff_m(j, s).is_zero());
    bool generic_nonzero = false;
    for (int j : rep.m_labels())
        if (!b.f_coeff_m(j, 2).is_zero()) generic_nonzero = true;
    CHECK(generic_nonzero);
    // Y^-1 f_s = q^s (f_s + u_s)
    ZOperator T = rep.build_T();
    ZOperator Yinv = rep.invert_Y(rep.build_Y(), rep.invert_T(T));
    for (int s = 1; s <= 2 * p; ++s) {
        ZVector f = b.f_vector(s), u = b.u_vector(s);
        ZVector want = rep.zero_vector();
        for (int i = 0; i < rep.dim(); ++i)
            want[i] = CycScalar::q_power(p, s) * (f[i] + u[i]);
        CHECK(vec_eq(Yinv * f, want));
    }
}

TEST_CASE("change of basis") {
    const int p = 3;
    RepZ rep(p);
    YBasis yb = build_change_of_basis(rep);
    CHECK(yb.u.size() == 2u * p);
    CHECK(yb.f.size() == 2u * p);
    CHECK(yb.k.size() == 2u * p - 4);
    // u vectors have no m components
    for (const auto& u : yb.u)
        for (int j : rep.m_labels()) CHECK(u[rep.m_index(j)].is_zero());
    // f_p has a zero m-block
    for (int j : rep.m_labels()) CHECK(yb.f[p - 1][rep.m_index(j)].is_zero());
}

TEST_CASE("S operator maps the X-basis to the Y-basis") {
    const int p = 3;
    RepZ rep(p);
    YBasisBuilder b(rep);
    ZOperator S = b.build_S();
    CHECK(vec_eq(S.column(rep.w_index(1)), b.u_vector(1)));
    CHECK(vec_eq(S.column(rep.m_index(2)), b.k_vector(2)));
    ZVector s2ep = S * (S * rep.basis_vector(rep.e_index(p)));
    CHECK(vec_eq(s2ep, rep.basis_vector(rep.e_index(p))));
}

TEST_CASE("fourier relations for p = 3, 4") {
    for (int p : {3, 4}) {
        RepZ rep(p);
        CheckSuite suite = verify_S_relations(rep);
        for (const auto& r : suite.reports) {
            INFO(r.relation);
            CHECK(r.ok);
        }
    }
}

TEST_CASE("T S^2 acts as q on every e_s") {
    const int p = 3;
    RepZ rep(p);
    YBasisBuilder b(rep);
    ZOperator S = b.build_S();
    ZOperator TS2 = rep.build_T() * S * S;
    for (int s = 1; s <= 2 * p; ++s) {
        ZVector got = TS2 * rep.basis_vector(rep.e_index(s));
        ZVector want = rep.basis_vector(rep.e_index(s));
        for (auto& c : want) c *= CycScalar::q_power(p, 1);
        CHECK(vec_eq(got, want));
    }
}

TEST_CASE("full ybasis suite at p = 3") {
    RepZ rep(3);
    CheckSuite suite = verify_ybasis(rep);
    for (const auto& r : suite.reports) {
        INFO(r.relation);
        CHECK(r.ok);
    }
}
