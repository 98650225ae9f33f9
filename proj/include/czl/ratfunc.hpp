#pragma once

#include <string>

#include "czl/fpoly.hpp"

namespace czl {

// Rational function over F_q in one variable, kept in canonical form:
// gcd(num, den) = 1 and den monic.  Zero is 0/1.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(Fpoly num);  // num / 1
  RatFunc(Fpoly num, Fpoly den);

  static RatFunc zero(const FqCtx& F) { return RatFunc(Fpoly::zero(F)); }
  static RatFunc one(const FqCtx& F) { return RatFunc(Fpoly::one(F)); }
  static RatFunc constant(const FqCtx& F, uint8_t c) {
    return RatFunc(Fpoly::constant(F, c));
  }
  static RatFunc from_int(const FqCtx& F, i64 n) {
    return constant(F, F.from_int(n));
  }

  const FqCtx& field() const { return num_.field(); }
  bool attached() const { return num_.attached(); }
  const Fpoly& num() const { return num_; }
  const Fpoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_one(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc inv() const;
  RatFunc pow(i64 e) const;  // negative e allowed for nonzero input
  RatFunc scaled(uint8_t c) const;

  // Valuation at the infinite place (v(x) = -1): deg den - deg num.
  // Returns a large sentinel for zero.
  i64 v_inf() const;

  // Substitute x -> x^m in numerator and denominator; for m = q^i this is
  // the i-fold Frobenius twist of the function.
  RatFunc dilate(i64 m) const;
  // Substitute x -> g(x).
  RatFunc compose(const Fpoly& g) const;

  bool operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
  bool operator<(const RatFunc& o) const {
    if (!(num_ == o.num_)) return num_ < o.num_;
    return den_ < o.den_;
  }

  std::string to_string(const std::string& var) const;
  static RatFunc parse(const FqCtx& F, const std::string& s,
                       const std::string& var);

 private:
  void reduce();
  Fpoly num_, den_;
};

}  // namespace czl
