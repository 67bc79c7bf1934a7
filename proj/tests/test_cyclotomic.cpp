#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "daha/cyclotomic.hpp"

using namespace daha;

namespace {

// Independent oracle: Phi_n as the product of (x^d - 1)^{mu(n/d)} over
// divisors d of n, computed with exact integer polynomial arithmetic.
int moebius(int n) {
    int out = 1;
    for (int f = 2; f * f <= n; ++f) {
        if (n % f) continue;
        n /= f;
        if (n % f == 0) return 0;
        out = -out;
    }
    if (n > 1) out = -out;
    return out;
}

std::vector<long long> xn_minus_1(int n) {
    std::vector<long long> v(n + 1, 0);
    v[0] = -1;
    v[n] = 1;
    return v;
}

std::vector<long long> pmul(const std::vector<long long>& a,
                            const std::vector<long long>& b) {
    std::vector<long long> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::vector<long long> pdiv_exact(std::vector<long long> num,
                                  const std::vector<long long>& den) {
    int dd = static_cast<int>(den.size()) - 1;
    std::vector<long long> q(num.size() - dd, 0);
    for (int i = static_cast<int>(num.size()) - 1 - dd; i >= 0; --i) {
        long long c = num[i + dd] / den[dd];
        q[i] = c;
        for (int j = 0; j <= dd; ++j) num[i + j] -= c * den[j];
    }
    for (long long c : num) REQUIRE(c == 0);
    return q;
}

std::vector<long long> phi_oracle(int n) {
    std::vector<long long> num{1}, den{1};
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        int mu = moebius(n / d);
        if (mu == 1) num = pmul(num, xn_minus_1(d));
        if (mu == -1) den = pmul(den, xn_minus_1(d));
    }
    return pdiv_exact(num, den);
}

CycScalar random_scalar(std::mt19937& rng, int p) {
    std::uniform_int_distribution<int> zexp(0, 4 * p - 1);
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    CycScalar x =
        CycScalar::z_power(p, zexp(rng)) * make_fraction(coef(rng), den(rng));
    if (coef(rng) % 2 == 0)
        x += CycScalar::sqrt_2p(p) * CycScalar::z_power(p, zexp(rng)) *
             make_fraction(coef(rng), den(rng));
    return x;
}

}  // namespace

TEST_CASE("cyclotomic polynomials, small cases") {
    CHECK(cyclotomic_poly(1) == std::vector<long long>{-1, 1});
    CHECK(cyclotomic_poly(2) == std::vector<long long>{1, 1});
    CHECK(cyclotomic_poly(12) == std::vector<long long>{1, 0, -1, 0, 1});
}

TEST_CASE("cyclotomic polynomials match the Moebius-product oracle") {
    for (int n : {6, 12, 16, 20, 24, 28, 32, 36})
        CHECK(cyclotomic_poly(n) == phi_oracle(n));
}

TEST_CASE("product of Phi_d over divisors gives x^n - 1") {
    for (int n : {12, 20}) {
        std::vector<long long> prod{1};
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) prod = pmul(prod, cyclotomic_poly(d));
        CHECK(prod == xn_minus_1(n));
    }
}

TEST_CASE("q powers") {
    for (int p : {3, 4, 5}) {
        CHECK(CycScalar::q_power(p, 0) == CycScalar::one(p));
        CHECK(CycScalar::q_power(p, p) == -CycScalar::one(p));
        CHECK(CycScalar::q_power(p, 2 * p) == CycScalar::one(p));
        // Phi_{4p}(z) evaluates to zero
        CycScalar acc = CycScalar::zero(p);
        auto phi = cyclotomic_poly(4 * p);
        for (size_t k = 0; k < phi.size(); ++k)
            acc += CycScalar::z_power(p, static_cast<long long>(k)) *
                   Rational(static_cast<long>(phi[k]));
        CHECK(acc.is_zero());
    }
}

TEST_CASE("basic ring identities") {
    const int p = 3;
    CycScalar root = CycScalar::sqrt_2p(p);
    CHECK(root * root == CycScalar::from_rational(p, 2 * p));
    CycScalar q = CycScalar::q_power(p, 1);
    CHECK(q * CycScalar::q_power(p, -1) == CycScalar::one(p));
    std::mt19937 rng(7);
    CycScalar x = random_scalar(rng, p);
    CHECK((x + (-x)).is_zero());
}

TEST_CASE("mismatched rings are rejected") {
    CycScalar a = CycScalar::one(3), b = CycScalar::one(4);
    CHECK_THROWS_AS(a + b, RingMismatchError);
    CHECK_THROWS_AS(a * b, RingMismatchError);
}

TEST_CASE("inverses") {
    const int p = 3;
    CycScalar two = CycScalar::from_rational(p, 2);
    CHECK(two.inverse() == CycScalar::from_rational(p, make_fraction(1, 2)));
    CycScalar root = CycScalar::sqrt_2p(p);
    CHECK(root.inverse() == root * make_fraction(1, 2 * p));
    CHECK(root.inverse() * root == CycScalar::one(p));
    CycScalar qdiff = CycScalar::q_power(p, 1) - CycScalar::q_power(p, -1);
    CHECK(qdiff.inverse() * qdiff == CycScalar::one(p));
    CHECK_THROWS_AS(CycScalar::zero(p).inverse(), NotInvertibleError);
}

TEST_CASE("inverse round-trips on random units") {
    std::mt19937 rng(42);
    for (int p : {3, 4, 6}) {
        for (int i = 0; i < 20; ++i) {
            CycScalar x = random_scalar(rng, p);
            if (x.is_zero() || !x.is_unit()) continue;
            CHECK(x.inverse() * x == CycScalar::one(p));
        }
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(1);
    for (int p : {3, 5}) {
        for (int i = 0; i < 15; ++i) {
            CycScalar a = random_scalar(rng, p);
            CycScalar b = random_scalar(rng, p);
            CycScalar c = random_scalar(rng, p);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK(a + b == b + a);
        }
    }
}

TEST_CASE("complex embedding") {
    const int p = 3;
    auto z = CycScalar::q_power(p, 1).embed_complex();
    CHECK(std::abs(z - std::complex<double>(0.5, 0.8660254037844386)) < 1e-12);
    CHECK(std::abs(CycScalar::sqrt_2p(p).embed_complex() -
                   std::complex<double>(2.449489742783178, 0)) < 1e-12);
    CHECK(std::abs(CycScalar::zero(p).embed_complex()) == 0.0);
}

TEST_CASE("embedding is a ring homomorphism to machine precision") {
    std::mt19937 rng(5);
    const int p = 4;
    for (int i = 0; i < 10; ++i) {
        CycScalar a = random_scalar(rng, p), b = random_scalar(rng, p);
        CHECK(std::abs((a * b).embed_complex() -
                       a.embed_complex() * b.embed_complex()) < 1e-9);
        CHECK(std::abs((a + b).embed_complex() -
                       (a.embed_complex() + b.embed_complex())) < 1e-9);
    }
}

TEST_CASE("high precision embedding strings") {
    const int p = 3;
    auto [re, im] = CycScalar::sqrt_2p(p).embed_complex_str(20);
    CHECK(re.substr(0, 18) == "2.4494897427831780");
    CHECK(im == "0");
    CHECK_THROWS_AS(CycScalar::one(p).embed_complex_str(0), DomainError);
}
