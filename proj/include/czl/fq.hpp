#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "czl/common.hpp"

namespace czl {

// Arithmetic context for the coefficient field F_q, q = p^k.
//
// Elements are encoded as integers in [0, q): the element sum_i d_i g^i
// (coordinates in the polynomial basis 1, g, g^2, ... of F_q over F_p, g the
// class of x modulo the defining polynomial) is encoded as sum_i d_i p^i.
// For prime q this is the usual residue encoding.  All arithmetic goes
// through small lookup tables built once per q.
class FqCtx {
 public:
  // Supported: q in {2, 3, 4, 5, 7, 8, 9}.  Returned reference is permanent.
  static const FqCtx& get(int q);
  static bool supported(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int ext_degree() const { return k_; }

  uint8_t zero() const { return 0; }
  uint8_t one() const { return 1; }
  uint8_t add(uint8_t a, uint8_t b) const { return add_[idx(a, b)]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return add_[idx(a, neg_[b])]; }
  uint8_t neg(uint8_t a) const { return neg_[a]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[idx(a, b)]; }
  uint8_t inv(uint8_t a) const;
  uint8_t div(uint8_t a, uint8_t b) const { return mul(a, inv(b)); }
  uint8_t pow(uint8_t a, i64 e) const;

  // Distinguished multiplicative generator: the smallest primitive root for
  // prime q, the class of x for the extension fields.
  uint8_t generator() const { return gen_; }
  uint8_t gen_pow(i64 e) const;  // g^e, any sign of e
  int unit_log(uint8_t u) const; // e in [0, q-1) with g^e = u

  // n mod p, embedded in the prime subfield.
  uint8_t from_int(i64 n) const;

  // Display: plain residue for prime q, base-p digit vector "[d0,d1,...]"
  // (coordinates in the polynomial basis) otherwise.
  std::string to_string(uint8_t a) const;
  uint8_t parse(const std::string& s) const;

 private:
  explicit FqCtx(int q);
  int idx(uint8_t a, uint8_t b) const { return int(a) * q_ + int(b); }

  int q_ = 0, p_ = 0, k_ = 0;
  uint8_t gen_ = 0;
  std::vector<uint8_t> add_, mul_, neg_, inv_;
  std::vector<uint8_t> exp_;  // g^e for e in [0, q-1)
  std::vector<int> log_;      // inverse of exp_ on units
};

}  // namespace czl
