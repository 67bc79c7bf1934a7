#pragma once

#include <map>

#include "daha/cyclotomic.hpp"

namespace daha {

// Exact Laurent polynomial over CycScalar.  No zero coefficients are stored.
class LaurentPoly {
public:
    explicit LaurentPoly(int p) : p_(p) {}

    int p() const { return p_; }
    const std::map<long long, CycScalar>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add_term(long long exp, const CycScalar& c);
    CycScalar coeff(long long exp) const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly scaled(const CycScalar& c) const;
    bool operator==(const LaurentPoly& o) const {
        return p_ == o.p_ && terms_ == o.terms_;
    }

    // f(X^{-1})
    LaurentPoly mirror() const;
    // f(z^{halfExp} X), e.g. halfExp = 2 substitutes X -> qX
    LaurentPoly substitute_zx(long long half_exp) const;
    // f(z^{halfExp}) as a scalar
    CycScalar evaluate_z(long long half_exp) const;
    // (X df/dX)(z^{halfExp})
    CycScalar log_derivative_z(long long half_exp) const;

private:
    int p_;
    std::map<long long, CycScalar> terms_;
};

// [s] = (q^s - q^{-s}) / (q - q^{-1})
CycScalar q_bracket(int p, long long s);
// {s} = (q^s + q^{-s}) / (q - q^{-1})
CycScalar q_brace(int p, long long s);
// [s,j]: s at j = 0, 2p;  (-1)^{s-1} s at j = p;  [sj]/[j] otherwise.
// j is reduced mod 2p before the case split.
CycScalar bracket2(int p, long long s, long long j);
// {s,j}: 0 when j = 0 mod p; {sj}/[j] otherwise.  Same reduction.
CycScalar brace2(int p, long long s, long long j);
// omega_s = (-1)^{p+s+1} p sqrt(2p) / [s]^2, defined for s != 0 mod p
CycScalar omega(int p, long long s);
// xi_s = -(-1)^{p-s} p sqrt(2p) / (q^s - q^{-s}), defined for s != 0 mod p
CycScalar xi(int p, long long s);
// U_s(x) = x^{s-1} + x^{s-3} + ... + x^{-(s-1)}
LaurentPoly chebyshev_U(int p, int s);

inline int parity_sign(long long n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace daha
