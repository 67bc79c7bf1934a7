#pragma once

#include <string>
#include <vector>

#include "daha/linalg.hpp"
#include "daha/report.hpp"

namespace daha {

using ZVector = Vector;
using ZOperator = Matrix;

enum class BasisKind { W, E, M };

struct BasisIndex {
    BasisKind kind;
    int s;
};

// The 6p-4 dimensional module with X-basis
//   w_1..w_2p, e_1..e_2p, m_s for s in {2..p-1} u {p+2..2p-1},
// in that serialization order.  All w/e subscripts are read mod 2p with
// representative in 1..2p (so w_0 means w_2p).  Matrices act on column
// vectors; A*B applies B first.
class RepZ {
public:
    explicit RepZ(int p);

    int p() const { return p_; }
    int dim() const { return dim_; }
    const std::vector<int>& m_labels() const { return m_labels_; }

    int w_index(int s) const;
    int e_index(int s) const;
    int m_index(int s) const;
    BasisIndex basis_index(int i) const;
    std::string basis_label(int i) const;

    ZVector zero_vector() const;
    ZVector basis_vector(int i) const;

    // Generators in the X-basis.
    ZOperator build_X() const;
    ZOperator build_T() const;
    ZOperator build_Y() const;

    // Inverses with verified closed-form candidates: T^{-1} = T - (q-q^{-1}),
    // X^{-1} column-wise, Y^{-1} = T^{-1} Y T^{-1}.  Each is checked against
    // the defining product before being returned.
    ZOperator invert_T(const ZOperator& T) const;
    ZOperator invert_X(const ZOperator& X) const;
    ZOperator invert_Y(const ZOperator& Y, const ZOperator& Tinv) const;

    CheckSuite verify_daha() const;
    // same relations on explicitly supplied generator matrices; inverses are
    // computed by general elimination, so corrupted inputs are diagnosed
    // with the first failing relation
    CheckSuite verify_daha_generators(const ZOperator& X, const ZOperator& Y,
                                      const ZOperator& T) const;

    // Commutative product: e_i e_j = d_{ij} e_j, e_i w_j = d_{ij} w_j,
    // e_i m_j = d_{ij} m_j, all other basis products vanish.
    ZVector multiply(const ZVector& u, const ZVector& v) const;
    ZVector unit() const;
    ZVector gaussian_element() const;
    // Inverse in the algebra: split v = d + n with d diagonal (e-part) and
    // n nilpotent (w,m-part); n^2 = 0, so v^{-1} = d^{-1} - d^{-1} n d^{-1}.
    ZVector invert_algebra_element(const ZVector& v) const;
    ZOperator mult_operator(const ZVector& v) const;

    CheckSuite submodule_checks() const;

private:
    int p_;
    int dim_;
    std::vector<int> m_labels_;
    std::vector<int> m_pos_;
};

// Matrix of an operator restricted to the leading span{w, e} block
// (the 4p-dimensional invariant submodule).
Matrix we_block(const RepZ& rep, const ZOperator& A);

// Exact rank computations: X and Y^{-1} both decompose into 2p Jordan
// blocks of size 2 (eigenvalue q^s, one per s = 1..2p) and 2p-4 blocks of
// size 1, with identical per-eigenvalue block data.
CheckSuite verify_jordan_structure(const RepZ& rep);

}  // namespace daha
