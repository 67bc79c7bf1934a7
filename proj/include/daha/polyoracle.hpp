#pragma once

#include "daha/qnum.hpp"
#include "daha/rep_z.hpp"

namespace daha {

// Independent model of the 4p-dimensional submodule as Laurent polynomials
// modulo X^{2p} + X^{-2p} - 2, with representatives confined to the exponent
// window -(2p-1)..2p.  Generators act by
//   T f = q f(X^{-1}) + (q - q^{-1}) (f(X^{-1}) - f(X)) / (X^2 - 1)
//   Y f = -(p T f)(X^{-1})   where (p g)(X) = g(qX)
// and X by multiplication.
class PolyOracle {
public:
    explicit PolyOracle(int p) : p_(p) {
        if (p < 3) throw DomainError("PolyOracle requires p >= 3");
    }

    int p() const { return p_; }

    LaurentPoly reduce(const LaurentPoly& f) const;
    LaurentPoly op_X(const LaurentPoly& f) const;
    LaurentPoly op_T(const LaurentPoly& f) const;
    LaurentPoly op_Y(const LaurentPoly& f) const;

    LaurentPoly one() const;
    LaurentPoly w_poly(int s) const;
    LaurentPoly e_poly(int s) const;
    LaurentPoly u_poly(int s) const;                // s in 1..2p
    LaurentPoly k_poly(int s) const;                // s in the m-label set
    LaurentPoly f_special_poly(int s) const;        // s in {1, p, p+1, 2p}

    // coefficients over {e_1..e_2p} and {w_1..w_2p}:
    // f = sum_s f(q^s) e_s + (X df/dX)|_{q^s} w_s
    std::pair<Vector, Vector> decompose(const LaurentPoly& f) const;
    LaurentPoly reassemble(const Vector& ecoef, const Vector& wcoef) const;

    // 4p x 4p matrix of an operator in the basis w_1..w_2p, e_1..e_2p
    Matrix operator_matrix(LaurentPoly (PolyOracle::*op)(const LaurentPoly&) const) const;

    CheckSuite crosscheck_matrices(const RepZ& rep) const;

    // crosscheck plus the internal quotient-model identities: the Hecke
    // quadratic, the braid relations on the quotient, eigenfunction
    // recursions of the U_s, and the dual-path decomposition of the
    // u/k/f eigenfunctions against the coefficient tables.
    CheckSuite verify(const RepZ& rep) const;

private:
    int p_;
    // exact division of f(X^{-1}) - f(X) by X^2 - 1
    LaurentPoly divided_difference(const LaurentPoly& f) const;
};

}  // namespace daha
