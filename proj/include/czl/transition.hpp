#pragma once

// Change of basis between the two weight-w generating families: the
// admissible arrays (entries <= q, last < q) and the source arrays (no
// entry divisible by q, arbitrary characters).  For every admissible
// array c the matrix carries one row: the expansion, over admissible
// arrays, of the value on the source array obtained by merging each
// maximal q-run of c into a single entry (characters multiply along the
// run).  The rewriting choices are steered so the row passes through c
// itself, which makes the matrix square, congruent to a signed
// permutation modulo D_1 = theta^q - theta, and hence invertible.

#include <cstdint>
#include <string>
#include <vector>

#include "czl/arrays.hpp"
#include "czl/modsolve.hpp"
#include "czl/relations.hpp"

namespace czl {

struct TransitionMatrix {
  int w = 0;
  Family family = Family::Si;
  // Canonical enumerations; `at` indexes both the rows and the columns of
  // `mat`, `as` lists the distinct source arrays.
  std::vector<Array> at;
  std::vector<Array> as;
  // Row r expands the value on as[row_source[r]].
  std::vector<int> row_source;
  RatMat mat;  // mat[row][col]
  // Expected diagonal sign per row: (-1)^(number of merged q-entries).
  std::vector<int> diag_sign;
  // True when every entry is a polynomial that is divisible by D_1 off
  // the diagonal and congruent to diag_sign on it.  A structural theorem
  // for the Si family; recorded as a plain observation for family S.
  bool signed_perm_mod_d1 = false;
};

// Builds, verifies, and caches (per q, w, family) the transition matrix.
// Construction proves invertibility constructively: a modular solver is
// prepared eagerly and a singular matrix raises a theorem-grade error.
const TransitionMatrix& transition_AT_to_AS(const FqCtx& F, int w,
                                            Family fam);

// Exact solve of mat^T y = r against the cached matrix; r and y are
// indexed like TransitionMatrix::at.
RatVec transition_solve(const FqCtx& F, int w, Family fam, const RatVec& r);

// Express value(a) over the weight-w source arrays.  Family Si reduces
// onto admissible arrays and changes basis through its own transition
// matrix; family S reduces with its own stuffle calculus but changes
// basis through the Si matrix, so the output coefficients express the
// family-S value over the family-Si source values (both families take the
// same values on admissible arrays, which is what links the two sides).
// The certificate's numeric check compares both sides at precision N.
DecompCertificate reduce_to_AS(const Array& a, Family fam, i64 N);

}  // namespace czl
