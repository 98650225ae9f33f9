#pragma once

// Truncated values in the completion at infinity: the multiple polylog
// value Li(a) = sum_d Si_d(a), the multiple zeta value z(a) = sum_d S_d(a),
// and powers of the fundamental period.  Every result carries an explicit
// known-precision bound of at least N.

#include "czl/arrays.hpp"
#include "czl/laurent.hpp"
#include "czl/power_sums.hpp"

namespace czl {

// sum_d Si_d(a), truncated once the guaranteed term valuation exceeds N
// on two consecutive degrees.  Result precision is exactly N.
LaurentInf acmpl(const Array& a, i64 N);

// sum_d S_d(a).  When every entry is <= q this equals the Si-family sum
// and is evaluated that way; otherwise the degree-d terms are summed by
// exact enumeration, which fails with a resource error if the per-family
// degree cap is reached before the valuation target.  (The evaluator
// module lifts that restriction by reducing the array first.)
LaurentInf amzv(const Array& a, i64 N);

// The canonical w-th period power: (-D_1 * z(q-1))^{w/(q-1)} truncated to
// N.  Requires (q-1) | w; the period itself is never represented.
LaurentInf carlitz_pi_power(const FqCtx& F, i64 w, i64 N);

// Largest precision amzv(a, .) can certify without hitting the family-S
// degree cap: N itself whenever every entry is <= q, otherwise the cap
// implied by the per-degree valuation bound.  amzv(a, m) never throws a
// resource error for m <= this value.
i64 amzv_direct_precision(const Array& a, i64 N);

}  // namespace czl
