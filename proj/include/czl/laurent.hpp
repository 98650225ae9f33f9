#pragma once

#include <string>
#include <vector>

#include "czl/ratfunc.hpp"

namespace czl {

// Truncated Laurent series at the infinite place of F_q(theta):
//   sum_{j >= lead} c_j theta^{-j},
// stored as the window [lead, lead+size) together with known_to: every
// coefficient with index <= known_to is exact (indices outside the stored
// window are exact zeros up to known_to).  known_to == KNOWN_INF marks a
// series that is known exactly (all further coefficients are zero).
//
// Precision propagates worst-case through arithmetic; see the individual
// operations for the bounds used.
class LaurentInf {
 public:
  static constexpr i64 KNOWN_INF = std::numeric_limits<i64>::max() / 4;

  LaurentInf() : F_(nullptr), lead_(0), known_to_(KNOWN_INF) {}
  static LaurentInf zero(const FqCtx& F);
  static LaurentInf zero_to(const FqCtx& F, i64 known_to);
  // Exact finite series from a polynomial in theta (indices -deg..0).
  static LaurentInf exact_poly(const Fpoly& f);
  // laurent_expand: n exact coefficients starting at the valuation of r.
  // Polynomial r yields an exact (KNOWN_INF) series.
  static LaurentInf from_ratfunc(const RatFunc& r, i64 n);

  const FqCtx& field() const;
  bool attached() const { return F_ != nullptr; }
  i64 known_to() const { return known_to_; }
  bool exact() const { return known_to_ == KNOWN_INF; }

  // Coefficient of theta^{-idx}; idx must be <= known_to.
  uint8_t coeff_at(i64 idx) const;

  // True if no nonzero coefficient is known.
  bool is_zero_to_precision() const { return c_.empty(); }
  // Exact valuation if a nonzero coefficient exists; otherwise known_to+1
  // (a certified lower bound), or KNOWN_INF for the exact zero.
  i64 valuation_lower_bound() const;
  bool has_definite_valuation() const { return !c_.empty() || exact(); }
  // Largest index carrying a stored nonzero coefficient; requires one.
  i64 support_end() const;

  LaurentInf operator+(const LaurentInf& o) const;
  LaurentInf operator-(const LaurentInf& o) const;
  LaurentInf operator*(const LaurentInf& o) const;
  LaurentInf operator-() const;
  LaurentInf scaled(uint8_t c) const;
  // Division; the divisor needs a definite valuation.
  LaurentInf operator/(const LaurentInf& o) const;
  // Multiply by an exact rational function (expanded as far as needed).
  LaurentInf mul_exact(const RatFunc& r) const;
  LaurentInf pow(i64 e) const;  // e >= 0

  // Reduce the precision claim to k (drops stored coefficients beyond k).
  LaurentInf truncated(i64 k) const;

  std::string to_string(int max_terms = 8) const;

 private:
  void normalize();
  const FqCtx* F_;
  i64 lead_;
  std::vector<uint8_t> c_;  // c_[i] multiplies theta^{-(lead_ + i)}
  i64 known_to_;
};

}  // namespace czl
