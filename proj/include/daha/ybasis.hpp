#pragma once

#include "daha/rep_z.hpp"

namespace daha {

// Jordan basis of Y^{-1}: vectors u_s, k_s, f_s expressed in the X-basis
// through closed-form coefficient tables.
class YBasisBuilder {
public:
    explicit YBasisBuilder(const RepZ& rep) : rep_(rep) {}

    // coefficient tables; j is the X-basis position label, s the Y-basis label
    CycScalar u_coeff_w(int j, int s) const;
    CycScalar u_coeff_e(int j, int s) const;
    CycScalar k_coeff_w(int j, int s) const;
    CycScalar k_coeff_e(int j, int s) const;
    // the generic-j closed form of k^{(e)}, defined for every s; it vanishes
    // automatically at s in {1, p, p+1, 2p} and seeds the f-tables
    CycScalar k_coeff_e_generic(int j, int s) const;
    CycScalar f_coeff_w(int j, int s) const;
    CycScalar f_coeff_e(int j, int s) const;
    CycScalar f_coeff_m(int j, int s) const;

    ZVector u_vector(int s) const;   // s in 1..2p
    ZVector k_vector(int s) const;   // s in {2..p-1} u {p+2..2p-1}
    ZVector f_vector(int s) const;   // s in 1..2p

    ZOperator build_S() const;       // S w_s = u_s, S e_s = f_s, S m_s = k_s
    // S^{-1} = q^{-1} T S, verified by product.
    ZOperator invert_S(const ZOperator& S, const ZOperator& T) const;

private:
    RepZ rep_;
};

struct YBasis {
    std::vector<ZVector> u;   // u_1..u_2p
    std::vector<ZVector> k;   // k-block, ascending label order
    std::vector<ZVector> f;   // f_1..f_2p
    ZOperator change_of_basis;  // columns u_1..u_2p, f_1..f_2p, k-block
};

// Assembles all u, k, f and checks exact invertibility of the
// change-of-basis matrix (throws SingularMatrixError otherwise).
YBasis build_change_of_basis(const RepZ& rep);

CheckSuite verify_S_relations(const RepZ& rep);

// Jordan action of Y^{-1} on the u/k/f vectors, membership of the u and
// special f vectors in the W submodule, and invertibility of the
// change-of-basis matrix.
CheckSuite verify_ybasis(const RepZ& rep);

}  // namespace daha
