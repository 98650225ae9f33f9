#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "czl/common.hpp"
#include "czl/fq.hpp"

namespace czl {

// Dense univariate polynomial over F_q.  The indeterminate is contextual
// (theta, t or y depending on the caller); printing takes the variable name.
// Invariant: no high-order zero coefficients; the zero polynomial has an
// empty coefficient vector and degree -1.
class Fpoly {
 public:
  Fpoly() : F_(nullptr) {}
  explicit Fpoly(const FqCtx& F) : F_(&F) {}
  Fpoly(const FqCtx& F, std::vector<uint8_t> coeffs);

  static Fpoly zero(const FqCtx& F) { return Fpoly(F); }
  static Fpoly constant(const FqCtx& F, uint8_t c);
  static Fpoly one(const FqCtx& F) { return constant(F, 1); }
  static Fpoly monomial(const FqCtx& F, uint8_t c, int e);
  static Fpoly x(const FqCtx& F) { return monomial(F, 1, 1); }

  const FqCtx& field() const;
  bool attached() const { return F_ != nullptr; }
  int deg() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  uint8_t coeff(int i) const {
    return (i >= 0 && i < int(c_.size())) ? c_[i] : 0;
  }
  uint8_t lc() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<uint8_t>& coeffs() const { return c_; }

  Fpoly operator+(const Fpoly& o) const;
  Fpoly operator-(const Fpoly& o) const;
  Fpoly operator*(const Fpoly& o) const;
  Fpoly operator-() const;
  Fpoly scaled(uint8_t c) const;
  Fpoly shifted(int e) const;  // multiply by x^e, e >= 0
  Fpoly pow(i64 e) const;

  // Substitute x -> x^m (exponent dilation).  For m = q^i this is the i-fold
  // Frobenius twist, since F_q coefficients are Frobenius-fixed.
  Fpoly dilate(i64 m) const;

  static void divrem(const Fpoly& a, const Fpoly& b, Fpoly* quo, Fpoly* rem);
  Fpoly operator/(const Fpoly& o) const;  // exact or truncated division
  Fpoly operator%(const Fpoly& o) const;
  static Fpoly gcd(const Fpoly& a, const Fpoly& b);  // monic (or zero)
  Fpoly monic() const;

  // Evaluation at a point of F_q (used by small substitution checks).
  uint8_t eval(uint8_t point) const;
  // Substitute x -> g(x) (polynomial composition).
  Fpoly compose(const Fpoly& g) const;

  // Number of leading (low-order) zero coefficients; the zero polynomial
  // reports -1 via ord() users. Order of vanishing at x = 0.
  int x_order() const;

  bool operator==(const Fpoly& o) const { return c_ == o.c_; }
  bool operator!=(const Fpoly& o) const { return !(*this == o); }
  bool operator<(const Fpoly& o) const;  // deterministic total order

  std::string to_string(const std::string& var) const;
  static Fpoly parse(const FqCtx& F, const std::string& s,
                     const std::string& var);

 private:
  void trim();
  const FqCtx* F_;
  std::vector<uint8_t> c_;  // c_[i] multiplies x^i
};

}  // namespace czl
