#pragma once

// Binary relations among degree-indexed power sums, the operator calculus
// that transports them, and the rewriting engine that expresses any value
// as a combination of values on admissible arrays.
//
// A binary relation states, for every degree d >= 0,
//
//     sum_u part_d[u] * X_d(u)  +  sum_v part_d1[v] * X_{d+1}(v)  =  0,
//
// where X is the non-strict power sum of the relation's family and the
// coefficients do not depend on d.  A relation with empty part_d1 is
// "fixed"; summing a fixed relation over all d turns it into a relation
// among values.  (Summing also works with a nonempty part_d1 as long as
// every array there has depth >= 2, because the degree-0 boundary term
// then vanishes; the operators below enforce that.)

#include <cstdint>
#include <string>
#include <vector>

#include "czl/stuffle.hpp"

namespace czl {

struct BinaryRelation {
  FormalSum part_d;   // coefficients on X_d(u)
  FormalSum part_d1;  // coefficients on X_{d+1}(v)
  Family family = Family::Si;

  bool fixed() const { return part_d1.empty(); }
};

// The seed relation for the character eps: at every degree d,
//     X_d((eps; q)) + eps^{-1} D_1 X_{d+1}((eps, 1; 1, q-1)) = 0.
BinaryRelation fundamental_relation(const FqCtx& F, uint8_t eps, Family fam);

// Left-extension by the single entry (sigma; v).  part_d arrays are
// prepended; each part_d1 array is both prepended and merged with the new
// head, the merge expanded through the family's diagonal product.  The
// result is fixed.  Every part_d1 array must have depth >= 2 (otherwise
// the degree-0 boundary of the telescoping sum survives) and every array
// must be nonempty.
BinaryRelation apply_B_star(const BinaryRelation& rel, uint8_t sigma,
                            int v);

// Composite left-extension by the entries of sv, innermost first, so that
// sv's first entry ends up leftmost.
BinaryRelation apply_B_star_seq(const BinaryRelation& rel, const Array& sv);

// Multiplication of the degree-d instance by the strict power sum below
// d+1 on sv, expanded through the family's diagonal and mixed products.
// part_d picks up both the same-degree and the strictly-lower pieces;
// part_d1 pairs with the strictly-lower piece only.
BinaryRelation apply_C(const BinaryRelation& rel, const Array& sv);

// The combined step: apply_B_star(rel, eps, q) minus, for every part_d1
// term (v -> b) of rel, b times apply_C(fundamental_relation(eps), v).
// The depth-raising debris of the extension cancels and the output's
// part_d is exactly rel's part_d with (eps; q) prepended, while part_d1
// arrays all start with the entry (eps; 1).
BinaryRelation apply_BC(const BinaryRelation& rel, uint8_t eps);

// Exact check of the defining identity for every degree in [d_lo, d_hi]
// by rational-function arithmetic.  True iff all degrees vanish.
bool verify_binary_relation(const BinaryRelation& rel, int d_lo, int d_hi);

// One rewriting step: for an array that is not admissible (some entry
// exceeds q, or the last entry equals q), returns a formal sum E with
//     value(a) = sum_u E[u] * value(u),
// built by summing a pipeline of the operators above over all degrees.
// The free character eps seeds the pipeline's fundamental relation when
// some entry exceeds q; admissible input is a domain error.
FormalSum decompose_step(const Array& a, uint8_t eps, Family fam);

// Result of rewriting a value onto a generating family, together with the
// numeric check of the claimed identity.
struct DecompCertificate {
  Array input;
  Family family = Family::Si;
  std::string basis;  // "AT" or "AS"
  FormalSum coefficients;
  i64 residual_valuation = 0;  // certified valuation of lhs - rhs
  i64 precision = 0;           // requested check precision
  std::vector<std::string> step_log;
};

// Repeated decompose_step (free character 1) until every support array is
// admissible.  Returns the bare expansion; the optional log records one
// line per rewriting step.
FormalSum reduce_to_AT_symbolic(const Array& a, Family fam,
                                std::vector<std::string>* step_log = nullptr);

// reduce_to_AT_symbolic plus a numeric check at precision N: both sides
// are evaluated and the certificate records the certified valuation of
// their difference.  For family S inputs with entries above q the check
// precision degrades to the direct evaluation cap and the certificate's
// residual reflects the precision actually achieved.
DecompCertificate reduce_to_AT(const Array& a, Family fam, i64 N);

}  // namespace czl
