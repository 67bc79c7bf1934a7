#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "daha/qnum.hpp"
#include "daha/rep_z.hpp"

using namespace daha;

namespace {

bool vec_eq(const ZVector& a, const ZVector& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

ZVector scaled(ZVector v, const CycScalar& c) {
    for (auto& x : v) x *= c;
    return v;
}

ZVector random_element(const RepZ& rep, std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-3, 3);
    ZVector v = rep.zero_vector();
    for (int i = 0; i < rep.dim(); ++i)
        v[i] = CycScalar::z_power(rep.p(), coef(rng) + 5) * Rational(coef(rng));
    return v;
}

}  // namespace

TEST_CASE("basis layout") {
    RepZ rep(3);
    CHECK(rep.dim() == 14);
    CHECK(rep.basis_label(0) == "w1");
    CHECK(rep.basis_label(6) == "e1");
    CHECK(rep.basis_label(12) == "m2");
    CHECK(rep.basis_label(13) == "m5");
    CHECK(rep.w_index(0) == rep.w_index(6));  // w_0 means w_2p
    CHECK_THROWS_AS(rep.m_index(1), DomainError);
    CHECK_THROWS_AS(RepZ(2), DomainError);
}

TEST_CASE("X action columns") {
    const int p = 3;
    RepZ rep(p);
    ZOperator X = rep.build_X();
    CycScalar q = CycScalar::q_power(p, 1);
    CHECK(vec_eq(X.column(rep.w_index(1)),
                 scaled(rep.basis_vector(rep.w_index(1)), q)));
    ZVector want = rep.zero_vector();
    want[rep.e_index(p)] = -CycScalar::one(p);
    want[rep.w_index(p)] = -CycScalar::one(p);
    CHECK(vec_eq(X.column(rep.e_index(p)), want));
    CHECK(vec_eq(X.column(rep.m_index(2)),
                 scaled(rep.basis_vector(rep.m_index(2)), CycScalar::q_power(p, 2))));
}

TEST_CASE("T action columns") {
    const int p = 3;
    RepZ rep(p);
    ZOperator T = rep.build_T();
    CycScalar q = CycScalar::q_power(p, 1);
    CHECK(vec_eq(T.column(rep.e_index(p)),
                 scaled(rep.basis_vector(rep.e_index(p)), q)));
    CHECK(vec_eq(T.column(rep.m_index(p - 1)),
                 scaled(rep.basis_vector(rep.m_index(p - 1)), q)));
    ZVector want = rep.zero_vector();
    want[rep.m_index(2 * p - 1)] = q;
    want[rep.w_index(1)] = -(q + CycScalar::q_power(p, -1));
    CHECK(vec_eq(T.column(rep.m_index(2 * p - 1)), want));
}

TEST_CASE("Y action columns") {
    const int p = 3;
    RepZ rep(p);
    ZOperator Y = rep.build_Y();
    CycScalar q = CycScalar::q_power(p, 1);
    CHECK(vec_eq(Y.column(rep.e_index(2 * p)),
                 scaled(rep.basis_vector(rep.e_index(1)), -q)));
    CHECK(vec_eq(Y.column(rep.m_index(p - 1)),
                 scaled(rep.basis_vector(rep.m_index(p + 2)), -q)));
    ZVector want = rep.zero_vector();
    want[rep.m_index(2)] = -q;
    want[rep.w_index(2 * p)] = -(q + CycScalar::q_power(p, -1));
    CHECK(vec_eq(Y.column(rep.m_index(2 * p - 1)), want));
}

TEST_CASE("operator inversion") {
    const int p = 3;
    RepZ rep(p);
    ZOperator I = ZOperator::identity(rep.dim(), p);
    CHECK(I.inverse() == I);
    ZOperator T = rep.build_T();
    // general elimination agrees with the closed form T - (q - q^{-1})
    CycScalar qm1 = CycScalar::q_power(p, 1) - CycScalar::q_power(p, -1);
    CHECK(T.inverse() == T - I.scaled(qm1));
    ZOperator X = rep.build_X();
    ZOperator Xinv = X.inverse();
    for (int s = 1; s <= 2 * p; ++s)
        CHECK(vec_eq(Xinv.column(rep.w_index(s)),
                     scaled(rep.basis_vector(rep.w_index(s)),
                            CycScalar::q_power(p, -s))));
    CHECK(rep.invert_X(X) == Xinv);
    ZOperator singular(rep.dim(), rep.dim(), p);
    CHECK_THROWS_AS(singular.inverse(), SingularMatrixError);
}

TEST_CASE("daha relations hold for p = 3, 4") {
    for (int p : {3, 4}) {
        RepZ rep(p);
        CheckSuite suite = rep.verify_daha();
        for (const auto& r : suite.reports) {
            INFO(r.relation);
            CHECK(r.ok);
        }
    }
}

TEST_CASE("a corrupted generator is diagnosed with the relation name") {
    const int p = 3;
    RepZ rep(p);
    ZOperator X = rep.build_X();
    X.at(rep.w_index(1), rep.w_index(1)) *= Rational(2);
    CheckSuite suite = rep.verify_daha_generators(X, rep.build_Y(), rep.build_T());
    REQUIRE(!suite.all_ok());
    CHECK(suite.reports[0].relation == "TXT = X^-1");
    CHECK(!suite.reports[0].ok);
    CHECK(suite.reports[0].first_mismatch.has_value());
}

TEST_CASE("algebra product rules") {
    const int p = 3;
    RepZ rep(p);
    ZVector e2 = rep.basis_vector(rep.e_index(2));
    ZVector m2 = rep.basis_vector(rep.m_index(2));
    CHECK(vec_eq(rep.multiply(e2, m2), m2));
    ZVector w1 = rep.basis_vector(rep.w_index(1));
    CHECK(vec_eq(rep.multiply(w1, w1), rep.zero_vector()));
    std::mt19937 rng(3);
    for (int i = 0; i < 5; ++i) {
        ZVector x = random_element(rep, rng);
        CHECK(vec_eq(rep.multiply(rep.unit(), x), x));
    }
}

TEST_CASE("product is commutative and associative") {
    RepZ rep(3);
    for (int i = 0; i < rep.dim(); ++i)
        for (int j = 0; j < rep.dim(); ++j) {
            ZVector a = rep.basis_vector(i), b = rep.basis_vector(j);
            CHECK(vec_eq(rep.multiply(a, b), rep.multiply(b, a)));
            for (int k = 0; k < rep.dim(); ++k) {
                ZVector c = rep.basis_vector(k);
                CHECK(vec_eq(rep.multiply(rep.multiply(a, b), c),
                             rep.multiply(a, rep.multiply(b, c))));
            }
        }
    // randomized at a larger p
    RepZ rep5(5);
    std::mt19937 rng(11);
    for (int i = 0; i < 4; ++i) {
        ZVector a = random_element(rep5, rng);
        ZVector b = random_element(rep5, rng);
        ZVector c = random_element(rep5, rng);
        CHECK(vec_eq(rep5.multiply(a, b), rep5.multiply(b, a)));
        CHECK(vec_eq(rep5.multiply(rep5.multiply(a, b), c),
                     rep5.multiply(a, rep5.multiply(b, c))));
    }
}

TEST_CASE("unit element") {
    const int p = 4;
    RepZ rep(p);
    ZVector unit = rep.unit();
    CHECK(vec_eq(rep.multiply(unit, rep.basis_vector(rep.e_index(5))),
                 rep.basis_vector(rep.e_index(5))));
    CHECK(vec_eq(rep.multiply(unit, unit), unit));
    ZOperator T = rep.build_T();
    CHECK(vec_eq(T * unit, scaled(unit, CycScalar::q_power(p, 1))));
}

TEST_CASE("gaussian element coefficients") {
    const int p = 3;
    RepZ rep(p);
    ZVector g = rep.gaussian_element();
    CHECK(g[rep.e_index(1)] == CycScalar::one(p));
    CHECK(g[rep.w_index(1)] == -CycScalar::one(p));
    CHECK(g[rep.m_index(2)] == CycScalar::z_power(p, -3) * Rational(p));
}

TEST_CASE("algebra inversion") {
    const int p = 3;
    RepZ rep(p);
    CHECK(vec_eq(rep.invert_algebra_element(rep.unit()), rep.unit()));
    ZVector g = rep.gaussian_element();
    CHECK(vec_eq(rep.multiply(rep.invert_algebra_element(g), g), rep.unit()));
    CHECK_THROWS_AS(rep.invert_algebra_element(rep.basis_vector(rep.e_index(1))),
                    NotInvertibleError);
}

TEST_CASE("multiplication operators") {
    const int p = 3;
    RepZ rep(p);
    CHECK(rep.mult_operator(rep.unit()) == ZOperator::identity(rep.dim(), p));
    // X is multiplication by sum q^s (e_s + w_s)
    ZVector xelt = rep.zero_vector();
    for (int s = 1; s <= 2 * p; ++s) {
        xelt[rep.e_index(s)] = CycScalar::q_power(p, s);
        xelt[rep.w_index(s)] = CycScalar::q_power(p, s);
    }
    CHECK(rep.mult_operator(xelt) == rep.build_X());
    ZOperator proj = rep.mult_operator(rep.basis_vector(rep.e_index(1)));
    for (int i = 0; i < rep.dim(); ++i) {
        ZVector col = proj.column(i);
        if (i == rep.e_index(1) || i == rep.w_index(1)) {
            CHECK(vec_eq(col, rep.basis_vector(i)));
        } else {
            CHECK(vec_eq(col, rep.zero_vector()));
        }
    }
}

TEST_CASE("jordan block structure of X") {
    const int p = 3;
    RepZ rep(p);
    ZOperator X = rep.build_X();
    ZOperator I = ZOperator::identity(rep.dim(), p);
    for (int s = 1; s <= 2 * p; ++s) {
        ZOperator A = X - I.scaled(CycScalar::q_power(p, s));
        ZVector we = A * rep.basis_vector(rep.w_index(s));
        CHECK(vec_eq(we, rep.zero_vector()));
        ZVector e1 = A * (A * rep.basis_vector(rep.e_index(s)));
        CHECK(vec_eq(e1, rep.zero_vector()));
    }
    CheckSuite suite = verify_jordan_structure(rep);
    CHECK(suite.all_ok());
}

TEST_CASE("submodule structure") {
    for (int p : {3, 4}) {
        RepZ rep(p);
        CheckSuite suite = rep.submodule_checks();
        for (const auto& r : suite.reports) {
            INFO(r.relation);
            CHECK(r.ok);
        }
    }
}
