#pragma once

#include <vector>

#include "czl/ratfunc.hpp"

namespace czl {

// Polynomial in t with coefficients in F_q(theta).  Used for the
// interpolation polynomials and the sigma-solver's reconstructed shapes.
class TPoly {
 public:
  TPoly() = default;
  explicit TPoly(const FqCtx& F) : F_(&F) {}
  TPoly(const FqCtx& F, std::vector<RatFunc> coeffs);

  static TPoly zero(const FqCtx& F) { return TPoly(F); }
  static TPoly one(const FqCtx& F);
  static TPoly t(const FqCtx& F);
  static TPoly constant(RatFunc c);
  static TPoly monomial(RatFunc c, int e);
  // Embed an F_q[t] polynomial (theta-free).
  static TPoly from_tpolynomial(const Fpoly& f);

  const FqCtx& field() const;
  int deg_t() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  RatFunc coeff(int i) const;

  TPoly operator+(const TPoly& o) const;
  TPoly operator-(const TPoly& o) const;
  TPoly operator*(const TPoly& o) const;
  TPoly operator-() const;
  TPoly scaled(const RatFunc& c) const;
  TPoly pow(i64 e) const;

  // i-fold Frobenius twist: each theta-coefficient c(theta) -> c(theta^{q^i}).
  TPoly twist(int i) const;
  // Evaluate t -> value in F_q(theta).
  RatFunc eval_t(const RatFunc& value) const;

  // Exchange the roles of theta and t.  Requires polynomial coefficients.
  TPoly swap_vars() const;
  // Max theta-degree over coefficients (requires polynomial coefficients).
  int deg_theta() const;
  bool has_polynomial_coeffs() const;

  bool operator==(const TPoly& o) const { return c_ == o.c_; }

  std::string to_string() const;  // coefficients in theta, variable t

 private:
  void trim();
  const FqCtx* F_ = nullptr;
  std::vector<RatFunc> c_;
};

}  // namespace czl
