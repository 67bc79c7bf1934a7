#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "daha/rational.hpp"

namespace daha {

// Coefficients of the n-th cyclotomic polynomial, low degree first, monic.
// Computed by exact division of x^n - 1 by the Phi_d over proper divisors d;
// memoized, safe under concurrent first use.
std::vector<long long> cyclotomic_poly(int n);

class CycScalar;

// Shared tables for the ring Q[z]/Phi_{4p}(z) adjoined t with t^2 = 2p,
// where z stands for q^{1/2} = e^{i pi/2p}.  One instance per p, built on
// first use and then immutable.
struct RingTable {
    int p;
    int conductor;                     // 4p
    std::vector<long long> min_poly;   // Phi_{4p}, low degree first
    int deg;                           // deg Phi_{4p}
    // z^(deg+i) reduced mod Phi_{4p}, for i = 0 .. conductor + deg
    std::vector<std::vector<Rational>> reduction;

    static const RingTable& get(int p);
};

// Element a + b*t of Q(zeta_{4p})[t]/(t^2 - 2p).  Both coefficient vectors
// are dense in powers of z, low degree first, always reduced mod Phi_{4p}.
class CycScalar {
public:
    CycScalar() : p_(0) {}  // unusable placeholder; real values carry p >= 3
    explicit CycScalar(int p);

    static CycScalar zero(int p) { return CycScalar(p); }
    static CycScalar one(int p) { return from_rational(p, 1); }
    static CycScalar from_rational(int p, const Rational& r);
    static CycScalar sqrt_2p(int p);
    // z^k, i.e. q^{k/2}
    static CycScalar z_power(int p, long long k);
    // q^k = z^{2k}
    static CycScalar q_power(int p, long long k);
    // raw parts (used by serialization); both must have length deg Phi_{4p}
    static CycScalar from_parts(int p, std::vector<Rational> a,
                                std::vector<Rational> b);

    int p() const { return p_; }
    const std::vector<Rational>& a() const { return a_; }
    const std::vector<Rational>& b() const { return b_; }

    bool is_zero() const;
    bool is_rational() const;      // b = 0 and a constant
    Rational rational_part() const;  // requires is_rational()

    CycScalar operator-() const;
    CycScalar& operator+=(const CycScalar& o);
    CycScalar& operator-=(const CycScalar& o);
    CycScalar& operator*=(const CycScalar& o);
    CycScalar& operator*=(const Rational& r);

    friend CycScalar operator+(CycScalar x, const CycScalar& y) { return x += y; }
    friend CycScalar operator-(CycScalar x, const CycScalar& y) { return x -= y; }
    friend CycScalar operator*(CycScalar x, const CycScalar& y) { return x *= y; }
    friend CycScalar operator*(CycScalar x, const Rational& r) { return x *= r; }
    friend CycScalar operator*(const Rational& r, CycScalar x) { return x *= r; }
    friend bool operator==(const CycScalar& x, const CycScalar& y) {
        return x.p_ == y.p_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

    // True when a^2 - 2p b^2 is nonzero, i.e. the element is invertible even
    // if sqrt(2p) happens to lie in Q(zeta_{4p}) and the ring has zero
    // divisors.
    bool is_unit() const;
    // (a + b t)^{-1} = (a - b t)/(a^2 - 2p b^2); throws NotInvertibleError
    // when the norm vanishes.
    CycScalar inverse() const;
    CycScalar operator/(const CycScalar& o) const { return *this * o.inverse(); }

    // Floating approximation under z -> e^{i pi/2p}, t -> +sqrt(2p),
    // accurate to 10^{-digits}.  Diagnostics only.
    std::complex<double> embed_complex() const;
    // Decimal strings with `digits` significant digits (MPFR-backed).
    std::pair<std::string, std::string> embed_complex_str(int digits) const;

private:
    int p_;
    std::vector<Rational> a_, b_;

    void check_same_ring(const CycScalar& o) const;
};

inline CycScalar inverse(const CycScalar& x) { return x.inverse(); }
inline bool is_zero(const CycScalar& x) { return x.is_zero(); }
inline bool equals(const CycScalar& x, const CycScalar& y) { return x == y; }

}  // namespace daha
