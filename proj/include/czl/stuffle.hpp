#pragma once

// Quasi-shuffle (stuffle) expansion of products of nested power sums.
//
// For arrays a, b the three product shapes are expanded, for every degree
// d at once, as finite K-linear combinations of single arrays:
//   X_d(a)    X_d(b)    = sum_u F(u) X_d(u)      (diag_product)
//   X_{<d}(a) X_{<d}(b) = sum_u G(u) X_{<d}(u)   (strict_product)
//   X_d(a)    X_{<d}(b) = sum_u H(u) X_d(u)      (mixed_product)
// where X is the degree-d (resp. strict below-d) power sum of the chosen
// family.  Both families share the same head-separation recursion; the
// zeta-family diagonal additionally picks up the depth-raising terms of
// Chen's identity for products of equal-degree depth-one sums.
//
// Summing the strict identity over all degrees expands a product of two
// full nested-sum values (zeta values / polylogarithms); value_product
// returns that expansion.  All coefficients produced here are constants
// in the prime subfield.

#include <map>
#include <string>

#include "czl/arrays.hpp"
#include "czl/power_sums.hpp"
#include "czl/ratfunc.hpp"

namespace czl {

// Finitely supported linear combination of arrays with coefficients in K,
// kept in canonical array order and free of zero coefficients.
using FormalSum = std::map<Array, RatFunc>;

// f += c * {a}; removes the entry when the total cancels.
void fs_add_term(FormalSum& f, const Array& a, const RatFunc& c);
// f += g  /  f += c * g.
void fs_add(FormalSum& f, const FormalSum& g);
void fs_add_scaled(FormalSum& f, const FormalSum& g, const RatFunc& c);
FormalSum fs_scaled(const FormalSum& f, const RatFunc& c);
FormalSum fs_neg(const FormalSum& f);
bool fs_equal(const FormalSum& f, const FormalSum& g);
// Diagnostic rendering: "coeff * {array}; ..." in canonical order.
std::string fs_to_text(const FormalSum& f);

// Depth-raising coefficient of the product identity for two depth-one
// equal-degree zeta-family sums with exponents s and t at split i:
//   (-1)^{s-1} C(i-1, s-1) + (-1)^{t-1} C(i-1, t-1)   in the prime field
// when (q-1) | i and 0 < i < s+t; zero otherwise.  Binomials are reduced
// mod p digitwise (Lucas).
uint8_t chen_delta(i64 s, i64 t, i64 i, const FqCtx& F);

FormalSum diag_product(const Array& a, const Array& b, Family fam);
FormalSum strict_product(const Array& a, const Array& b, Family fam);
// Requires a nonempty left factor.
FormalSum mixed_product(const Array& a, const Array& b, Family fam);

// Expansion of the product of the two full values; termwise it coincides
// with strict_product.
FormalSum value_product(const Array& a, const Array& b, Family fam);

// Drops this thread's memo cache.
void stuffle_cache_clear();

}  // namespace czl
