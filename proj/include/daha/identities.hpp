#pragma once

#include "daha/rep_z.hpp"
#include "daha/ybasis.hpp"

namespace daha {

// Summation identities over r in {2..p-1} u {p+2..2p-1} (or the shifted
// variants) against closed forms.  Every "mod 2p" in a closed form uses the
// representative in 0..2p-1.  Stated validity ranges are honored strictly;
// pairs where a closed form divides by zero are skipped.
CheckSuite verify_appendix_e_sums(int p);
CheckSuite verify_appendix_w_sums(int p);

// Coefficient-level assembly of S^2 e_s from the u/k/f tables:
//  (a) the e_j and w_j coefficients assembled term by term equal the matrix
//      entries of S*S,
//  (b) the closed form of S^2 e_s holds, and
//  (c) T S^2 e_s = q e_s.
CheckSuite verify_S_squared_assembly(const RepZ& rep);

}  // namespace daha
