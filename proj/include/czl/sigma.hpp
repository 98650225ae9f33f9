#pragma once

// Solver for the canonical weight-w linear relation between the
// Carlitz period power pi~^w and depth-graded polylogarithm values.
//
// The solver works over the rational function field F_q(y), where y is
// a formal parameter standing for t - t^q.  A recursive tree of "nodes"
// is built, indexed by an integer parameter m >= 1; each node carries
// an m x m linear system whose solution splits into
//   * "shape" coefficients P[i] describing the node's own value as
//     X^m + sum_{i<m} P[i] X^i in the variable X, and
//   * "edge" multipliers attached to the child parameters k of the
//     node, which accumulate along root-to-leaf paths into the
//     coefficients of the relation.
// Every solution entry vanishes at y = 0; a singular node system would
// contradict the structure theory and raises a theorem-grade error.
//
// A relation exists precisely when the character is trivial and q - 1
// divides the weight; in that case it is unique up to scalar, is
// supported on tuples with all entries divisible by q - 1 and none
// divisible by q, and the solver pins the scalar with an independent
// product-expansion witness before returning it normalized to a
// leading pi~^w coefficient of 1.

#include <cstdint>
#include <map>
#include <vector>

#include "czl/arrays.hpp"
#include "czl/common.hpp"
#include "czl/fpoly.hpp"
#include "czl/fq.hpp"
#include "czl/ratfunc.hpp"

namespace czl {

// Child parameters of the node with parameter m: every k in [0, m)
// with k not congruent to m modulo q.
std::vector<int> sigma_children(int m, int q);

// Order of vanishing at y = 0 of a nonzero rational function in y.
i64 y_valuation(const RatFunc& r);

struct NodeSolution {
  int m = 0;
  // Shape coefficients, indexed by X-power 0..m-1 (the X^m coefficient
  // is 1 by normalization).  Entries not of the form m - i with
  // m - i*q >= 0 are zero.
  std::vector<RatFunc> P;
  // Edge multiplier toward each child parameter.
  std::map<int, RatFunc> edge_P;
};

// Solve the node system for parameter m >= 1 over F_q(y), solving
// children first; results are cached per (q, m).
const NodeSolution& solve_node(const FqCtx& F, int m);

// Accumulated leaf coefficients of the parameter-m tree: each
// root-to-leaf path m = n_0 > n_1 > ... > 0 contributes the tuple
// ((q-1)(n_0-n_1), (q-1)(n_1-n_2), ...) with coefficient equal to the
// product of the edge multipliers along the path, with y specialized
// to theta - theta^q.  Keys enumerate exactly the compositions of
// m*(q-1) into parts divisible by q - 1 but not by q.
std::map<Tuple, RatFunc> sigma_leaf_vector(const FqCtx& F, int m);

enum class SigmaKind { NoRelation, UniqueRelation };

struct SigmaOutcome {
  SigmaKind kind = SigmaKind::NoRelation;
  int q = 0;
  i64 w = 0;
  uint8_t character = 1;  // common character of all terms (always 1)
  // UniqueRelation:  pi~^w + sum_u terms[u] * Li(u) = 0, every tuple u
  // carrying trivial characters.  The pi~^w coefficient is 1.
  RatFunc pi_coefficient;
  std::map<Tuple, RatFunc> terms;
  // Same relation with denominators cleared:
  //   clearing_factor * pi~^w + sum_u cleared_terms[u] * Li(u) = 0.
  Fpoly clearing_factor;
  std::map<Tuple, Fpoly> cleared_terms;
  // Stamped by numeric verification (0 until then).
  i64 residual_valuation = 0;
  i64 precision = 0;
};

// Decide existence and compute the relation.  eps must be a nonzero
// field element; the outcome is NoRelation unless eps == 1 and
// (q - 1) | w.  The returned coefficients are cross-checked against an
// independent expansion of Li(q-1)^(w/(q-1)) over the weight-w value
// basis; any mismatch raises a theorem-grade error.
SigmaOutcome solve_sigma_system(i64 w, int q, uint8_t eps);

// The unique relation at weight w with cleared polynomial
// coefficients; Domain error when no relation exists at this weight.
SigmaOutcome relation_coefficients(i64 w, int q);

// Numerically evaluate the unique relation to precision N and return
// the valuation of the residual (>= N when the relation holds).
i64 verify_unique_relation(i64 w, int q, i64 N);

}  // namespace czl
