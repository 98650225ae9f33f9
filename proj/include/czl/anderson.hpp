#pragma once

// The interpolation polynomials H_n in two variables and their twisted
// evaluations h_{n,d}.  H_n is obtained from the coefficient alpha_n of
// the generating series
//   sum_{n>=1} (alpha_n(t)/Gamma_n) x^n
//     = x * (1 - sum_{j>=0} (gamma_j(t)/D_j) x^{q^j})^{-1},
//   gamma_j(t) = prod_{l=1..j} (theta^{q^j} - t^{q^l}),
// by exchanging the two variables.  alpha_n always has polynomial
// coefficients (asserted), and deg_theta H_n <= (n-1) q / (q-1).

#include "czl/ratfunc.hpp"
#include "czl/tpoly.hpp"

namespace czl {

// H_n for n >= 1; cached, thread safe.
TPoly anderson_thakur_H(const FqCtx& F, int n);

// h_{n,d}: H_n with its coefficient variable replaced by theta^{q^d} and
// t replaced by theta.  A polynomial value in K.
RatFunc at_eval(const FqCtx& F, int n, int d);

}  // namespace czl
