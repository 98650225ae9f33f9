#pragma once

// Tuples of positive integers and character-decorated arrays: the index
// combinatorics underlying the whole library.  Provides the canonical
// orders, the initial-tuple and partial-sum transforms, admissibility,
// the index-set enumerations J_w, J'_w, AT_w, AS_w, S_w, AJ_w, AJ1_w,
// and the bijections iota (merge q-runs <-> split entries) and phi.

#include <cstdint>
#include <string>
#include <vector>

#include "czl/common.hpp"
#include "czl/fq.hpp"

namespace czl {

// A tuple is a (possibly empty) list of positive integer entries.
using Tuple = std::vector<int>;

i64 tuple_weight(const Tuple& s);
std::string tuple_to_text(const Tuple& s);
Tuple tuple_parse(const std::string& text);
// (val, val, ..., val), m times.
Tuple tuple_repeat(int val, int m);

// Longest prefix (s_1..s_i) with all entries <= q; empty when s_1 > q.
Tuple initial_tuple(const Tuple& s, int q);

// (s_1+...+s_i, s_{i+1}, ..., s_n); entries beyond the depth count as 0.
Tuple t_transform(const Tuple& s, int i);

// True iff s_1..s_k <= q (padding zeros beyond the depth) and s is not a
// tuple of depth r <= k whose last entry equals q (prefix entries <= q).
bool is_k_admissible(const Tuple& s, int k, int q);

// Membership in the two composition index sets of a fixed weight:
//   J:  all entries <= q and the last entry < q.
//   J': no entry divisible by q.
bool in_J(const Tuple& s, int q);
bool in_Jprime(const Tuple& s, int q);

// Exhaustive duplicate-free enumerations in lexicographic order.
std::vector<Tuple> enum_J(int w, int q);
std::vector<Tuple> enum_Jprime(int w, int q);

// The run-splitting bijection J'_w -> J_w: each entry s_i = h_i q + r_i
// (0 < r_i < q) becomes h_i copies of q followed by r_i.  iota_inv merges
// maximal runs of q back.  Both reject tuples outside their domain.
Tuple iota(const Tuple& s, int q);
Tuple iota_inv(const Tuple& s, int q);

// A positive array: a tuple together with one nonzero character per entry.
class Array {
 public:
  Array() : F_(nullptr) {}
  explicit Array(const FqCtx& F) : F_(&F) {}
  Array(const FqCtx& F, std::vector<uint8_t> chars, Tuple s);
  // All characters trivial.
  static Array trivial(const FqCtx& F, Tuple s);
  static Array singleton(const FqCtx& F, uint8_t chr, int entry);

  const FqCtx& field() const;
  bool empty() const { return s_.empty(); }
  int depth() const { return int(s_.size()); }
  i64 weight() const { return tuple_weight(s_); }
  const Tuple& tuple() const { return s_; }
  const std::vector<uint8_t>& chars() const { return eps_; }
  int entry(int i) const;     // 0-based
  uint8_t chr(int i) const;   // 0-based
  // Product of all characters.
  uint8_t chi() const;
  bool trivial_chars() const;

  Array prepend(uint8_t chr, int entry) const;
  Array append(uint8_t chr, int entry) const;
  // Entries i..depth-1 as an array (i = 1 drops the head).
  Array tail(int i = 1) const;
  // Entries 0..i-1.
  Array prefix(int i) const;
  Array concat(const Array& o) const;

  // Text form "s1,...,sn;e1,...,en" with e_i the exponent of the fixed
  // generator of the unit group (0 means the trivial character).  The
  // depth-0 array renders as ";".  parse also accepts a bare tuple,
  // meaning all characters trivial.
  std::string to_text() const;
  static Array parse(const FqCtx& F, const std::string& text);

  bool operator==(const Array& o) const;
  bool operator!=(const Array& o) const { return !(*this == o); }
  // Canonical order: lexicographic on tuples, then on character exponent
  // vectors.  Total on arrays over one field; used for certificates and
  // as the map key order everywhere.
  bool operator<(const Array& o) const;

 private:
  const FqCtx* F_;
  std::vector<uint8_t> eps_;
  Tuple s_;
};

// Componentwise character product and entry sum, padded with (1, 0).
Array array_add(const Array& a, const Array& b);
// True iff chi(a) = chi(b), weights agree, and every partial sum of a is
// <= the matching partial sum of b (padding zeros).
bool array_leq(const Array& a, const Array& b);

// Array index sets of weight w, enumerated in canonical order:
//   AT_w:  tuples in J_w, arbitrary characters.
//   AS_w:  tuples in J'_w, arbitrary characters (same set as AJ_w).
//   S_w:   tuples in J'_w, trivial characters.
//   AJ_w:  tuples in J'_w, arbitrary characters.
//   AJ1_w: tuples in J_w with trivial character on every entry equal to q.
std::vector<Array> enum_AT(int w, const FqCtx& F);
std::vector<Array> enum_AS(int w, const FqCtx& F);
std::vector<Array> enum_S(int w, const FqCtx& F);
std::vector<Array> enum_AJ(int w, const FqCtx& F);
std::vector<Array> enum_AJ1(int w, const FqCtx& F);

bool in_AT(const Array& a);
bool in_AS(const Array& a);
bool in_AJ1(const Array& a);

// Run-splitting on arrays: AJ_w -> AJ1_w.  Each entry h q + r becomes h
// copies of q carrying character 1 followed by r carrying the original
// character.  phi_inv inverts; both reject inputs outside their domain.
Array phi(const Array& a);
Array phi_inv(const Array& a);

// Counting sequences (overflow-checked):
//   d: d(0) = 1; 2^{w-1} for 1 <= w <= q-1; 2^{q-1} - 1 at w = q;
//      d(w) = sum_{i=1..q} d(w-i) beyond.
//   s, t: (q-1) q^{w-1} for w < q; (q-1)(q^{w-1} - 1) at w = q;
//      s(w) = (q-1) sum_{i=1..q-1} s(w-i) + s(w-q),
//      t(w) = (q-1) sum_{i=1..q} t(w-i) beyond.
i64 count_d(int w, int q);
i64 count_s(int w, int q);
i64 count_t(int w, int q);

}  // namespace czl
