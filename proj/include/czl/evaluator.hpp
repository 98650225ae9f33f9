#pragma once

// Evaluation helpers that sit above the series layer: alternating sums at
// any requested precision (routing large entries through the rewriting
// engine onto admissible arrays, where the direct series has no degree
// cap), and the interpolation-polynomial identity check tying those sums
// to twisted evaluations over the degree filtration.

#include "czl/arrays.hpp"
#include "czl/laurent.hpp"

namespace czl {

// The alternating multizeta value on a, certified to >= N coefficients.
// Arrays whose entries stay <= q evaluate directly; otherwise the value
// is rewritten over admissible arrays first, so the result is exact to N
// for every array (no resource cap).
LaurentInf amzv_general(const Array& a, i64 N);

// Compares sum_{i_1 > ... > i_r >= 0} prod_k eps_k^{i_k} h_{s_k, i_k} /
// ell_{i_k}^{s_k} against Gamma_{s_1} ... Gamma_{s_r} times the
// alternating sum on a, both truncated past N; returns the certified
// valuation of the difference (>= N when the identity holds).
i64 at_zeta_check(const Array& a, i64 N);

}  // namespace czl
