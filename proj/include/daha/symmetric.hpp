#pragma once

#include <string>
#include <vector>

#include "daha/rep_z.hpp"
#include "daha/ybasis.hpp"

namespace daha {

// Eigenspace of T with eigenvalue q, carried by the labeled eigenvector
// basis e0..ep, w+1..w+(p-1), w-1..w-(p-1).  The embedding matrix holds
// those vectors as columns in Z coordinates; they are verified to span
// ker(T - q) exactly.
struct TqSubspace {
    int p = 0;
    Matrix embedding;                  // (6p-4) x (3p-1)
    std::vector<std::string> labels;

    int dim() const { return 3 * p - 1; }
    int e_pos(int s) const { return s; }                 // s = 0..p
    int wp_pos(int s) const { return p + s; }            // s = 1..p-1
    int wm_pos(int s) const { return 2 * p - 1 + s; }    // s = 1..p-1
};

enum class TqProductPath { ZAlgebra, Rules };

struct FusionTensor {
    int p = 0;
    std::vector<std::string> labels;  // chi+1..chi+p, chi-1..chi-p
    std::vector<std::vector<std::vector<CycScalar>>> N;  // N[a][b][c]
    bool integral = false;
};

class Symmetrized {
public:
    explicit Symmetrized(const RepZ& rep);

    const RepZ& rep() const { return rep_; }
    const TqSubspace& tq() const { return tq_; }
    int dim_ker_T_minus_q() const { return dim_ker_minus_; }
    int dim_ker_T_plus_qinv() const { return dim_ker_plus_; }

    const ZOperator& C() const { return C_; }
    const ZOperator& H() const { return H_; }
    const ZOperator& S() const { return S_; }

    // C-basis and H-basis vectors in Z coordinates
    ZVector e_bold(int s) const;        // s = 0..p
    ZVector w_bold_plus(int s) const;   // s = 1..p-1
    ZVector w_bold_minus(int s) const;
    ZVector f_bold(int s) const;
    ZVector u_bold_plus(int s) const;
    ZVector u_bold_minus(int s) const;

    // Restriction of an operator to T_q in the labeled basis; throws
    // DomainError with a witness label when the subspace is not preserved.
    Matrix restrict_to_tq(const ZOperator& A) const;

    // T_q coordinates of a Z vector; throws when the vector is outside T_q.
    Vector tq_coords(const ZVector& v) const;
    ZVector from_tq_coords(const Vector& c) const;

    Vector multiply_tq(const Vector& a, const Vector& b) const;
    Vector multiply_tq_path(const Vector& a, const Vector& b,
                            TqProductPath path) const;

    // Radford-type and Drinfeld-type central elements, in T_q coordinates
    Vector phi_hat(int sign, int s) const;   // sign = +1/-1, s = 1..p
    Vector chi(int sign, int s) const;

    CheckSuite verify_c_basis() const;
    CheckSuite verify_h_basis() const;
    CheckSuite verify_multiplication() const;   // induced product vs rules
    CheckSuite verify_center_basis() const;     // S chi = phi_hat
    CheckSuite verify_restrictions() const;     // S^2 = 1, SCS^-1 = H, Jordan
    CheckSuite ribbon_checks() const;
    CheckSuite radical_analysis() const;

    FusionTensor fusion_constants(TqProductPath path = TqProductPath::ZAlgebra) const;

    // unit scalar relating the two stated expansions of the Gaussian element
    CycScalar ribbon_normalization() const;

    // full aggregate: dimensions, bases, product, restrictions, center
    // basis, ribbon, radical, fusion closure and integrality report
    CheckSuite verify_all() const;

private:
    RepZ rep_;
    ZOperator T_, C_, H_, S_;
    TqSubspace tq_;
    int dim_ker_minus_ = 0, dim_ker_plus_ = 0;
    Matrix Sr_;  // S restricted to T_q

    Vector rules_product(const Vector& a, const Vector& b) const;
};

}  // namespace daha
