#pragma once

// Numeric-exact hybrid search for linear relations among truncated
// infinite-place expansions, with polynomial coefficients of bounded
// degree, plus dimension certificates combining symbolic decomposition
// upper bounds with truncation-rank lower bounds.
//
// Epistemic contract: a returned relation is verified on the jointly
// known coefficient window only ("verified to valuation V"); an empty
// kernel rules out relations of the probed degree within that window,
// never their existence outright.  Upper bounds from decomposition
// sweeps are exact symbolic statements.

#include <string>
#include <vector>

#include "czl/arrays.hpp"
#include "czl/common.hpp"
#include "czl/fpoly.hpp"
#include "czl/laurent.hpp"

namespace czl {

// Basis of the F_q-kernel of (p_1..p_k), deg p_i <= B, mapsto the
// truncation of sum_i p_i * v_i on the window where every coefficient
// of every term is known.  Deterministic: reduced row echelon with
// first-nonzero pivoting, kernel vectors ordered by free column.
// Errors: Precision when the window holds fewer equations than the
// (B+1)*k unknowns.
std::vector<std::vector<Fpoly>> find_A_relations(
    const std::vector<LaurentInf>& values, i64 B);

// Valuation of sum_i coeffs[i] * values[i] over the jointly known
// window (re-verification hook: recompute values at higher precision
// and call again).
i64 relation_residual(const std::vector<LaurentInf>& values,
                      const std::vector<Fpoly>& coeffs);

// Lower bound for the K-rank of the values: number of values minus the
// K-rank of the bounded-degree truncation kernel.  The probe degree is
// capped so the kernel system stays overdetermined; with too little
// precision the cap collapses and the bound degrades toward zero
// (never an error).
i64 truncation_rank(const std::vector<LaurentInf>& values, i64 B = 40);

struct DimensionCertificate {
  int q = 0;
  i64 w = 0;
  std::string family;  // "amzv" or "mzv"
  i64 upper_bound = 0;
  i64 lower_bound = 0;
  i64 target = 0;
  std::string verdict;  // "confirmed" or "inconclusive"
  i64 basis_size = 0;
  i64 generator_count = 0;
  i64 sweep_residual_min = 0;
  i64 precision = 0;
  i64 degree_bound = 0;
  std::vector<std::string> diagnostics;
};

// Upper bound: rewrite every weight-w generator (all compositions of w;
// all nonzero characters for "amzv", trivial characters for "mzv") over
// the weight-w source basis by exact decomposition, numerically checked
// at precision N.  Lower bound: truncation rank of the basis values.
// Verdict "confirmed" iff lower == upper == target, where the target
// counts the predicted basis size.  "mzv" requires q = 2, where the
// classical and character-decorated spaces coincide.
DimensionCertificate dimension_certificate(i64 w, int q,
                                           const std::string& family, i64 N,
                                           i64 B);

}  // namespace czl
