#pragma once

#include "czl/fpoly.hpp"

namespace czl {

// The classical A = F_q[theta] quantities.  All functions cache per field
// behind a mutex; returned values are copies.
//
//   ell(0) = 1,   ell(d) = prod_{i=1..d} (theta - theta^{q^i})
//   bracket(k) = theta^{q^k} - theta              (k >= 1)
//   factD(0) = 1, factD(k) = bracket(k) * factD(k-1)^q
//   gamma_fact(n) = prod_j factD(j)^{n_j}  where n-1 = sum_j n_j q^j in base q
//
// v_inf(ell(d)) = -(q + q^2 + ... + q^d).
Fpoly carlitz_ell(const FqCtx& F, int d);
Fpoly carlitz_bracket(const FqCtx& F, int k);
Fpoly carlitz_factD(const FqCtx& F, int k);
Fpoly carlitz_gamma_fact(const FqCtx& F, i64 n);

}  // namespace czl
