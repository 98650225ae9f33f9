#pragma once

// Exact power sums over monic polynomial chains.
//
// For an array a = (eps_1..eps_n; s_1..s_n) and an integer d, the two
// families are
//   family S:   sum over chains d = deg a_1 > ... > deg a_n >= 0 of monic
//               a_i of   prod_i eps_i^{deg a_i} / a_i^{s_i},
//   family Si:  the head-separated analogue built from 1/ell_d^{s} factors,
//               Si_d(a) = eps_1^d / ell_d^{s_1} * Si_{<d}(tail).
// Both are exact elements of the rational function field.  The strict flag
// selects the cumulative sum over degrees e < d instead of the single
// degree d.

#include "czl/arrays.hpp"
#include "czl/ratfunc.hpp"

namespace czl {

enum class Family { S, Si };

// Largest degree d for which family-S evaluation is allowed (the exact
// recursion cost grows with q^d through the denominators involved).
int s_family_dmax(int q);

// Sum of a^{-s} over all monic a of degree d, exact.  Computed through the
// additive polynomial whose roots are exactly those monic polynomials,
// via a sparse Newton-identity recursion; memoized per thread.
RatFunc monic_reciprocal_power_sum(const FqCtx& F, int d, int s);

// The d-th (strict=false) or below-d cumulative (strict=true) power sum of
// the array for the given family.  Empty arrays must carry a field context
// (use Array(F)).  Exact; memoized per thread.
RatFunc power_sum(int d, const Array& a, bool strict, Family fam);

// Drops this thread's memo caches (tests use it to bound memory).
void power_sum_cache_clear();

}  // namespace czl
