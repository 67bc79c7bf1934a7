#pragma once

#include "daha/rep_z.hpp"
#include "daha/ybasis.hpp"

namespace daha {

struct GeneratorTriple {
    ZOperator X, Y, T;
};

// G^{-1} A G
ZOperator conjugate(const ZOperator& A, const ZOperator& G);

// The automorphisms realized inside the module:
//   sigma(A)  = S A S^{-1}        (X -> Y^{-1}, Y -> XT^2, T -> T)
//   tau_+(A)  = V^{-1} A V        (Y -> q^{-1/2} XY, X -> X, T -> T)
// with V multiplication by the Gaussian element, and tau_- defined through
// the braid relation sigma = tau_+ tau_-^{-1} tau_+.
class ModularAction {
public:
    explicit ModularAction(const RepZ& rep);

    const RepZ& rep() const { return rep_; }
    const ZOperator& S() const { return S_; }
    const ZOperator& V() const { return V_; }

    ZOperator sigma(const ZOperator& A) const;
    ZOperator sigma_inv(const ZOperator& A) const;
    ZOperator tau_plus(const ZOperator& A) const;
    ZOperator tau_plus_inv(const ZOperator& A) const;
    // tau_-^{-1} = tau_+^{-1} . sigma . tau_+^{-1}, hence
    // tau_- = tau_+ . sigma^{-1} . tau_+
    ZOperator tau_minus_inv(const ZOperator& A) const;
    ZOperator tau_minus(const ZOperator& A) const;
    GeneratorTriple tau_minus(const GeneratorTriple& g) const;

    CheckSuite verify_tau_plus() const;
    CheckSuite verify_tau_minus() const;
    CheckSuite verify_psl2z() const;

private:
    RepZ rep_;
    ZOperator X_, Y_, T_, Tinv_, Yinv_, S_, Sinv_, V_, Vinv_;
};

}  // namespace daha
