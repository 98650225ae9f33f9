#include "czl/arrays.hpp"

#include <vector>

namespace czl {

namespace {

i64 checked_add(i64 a, i64 b) {
  i64 r = 0;
  require(!__builtin_add_overflow(a, b, &r), ErrKind::Resource,
          "counting overflow");
  return r;
}

i64 checked_mul(i64 a, i64 b) {
  i64 r = 0;
  require(!__builtin_mul_overflow(a, b, &r), ErrKind::Resource,
          "counting overflow");
  return r;
}

i64 pow_checked(i64 b, int e) {
  i64 r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, b);
  return r;
}

void check_count_args(int w, int q, int wmin) {
  require(FqCtx::supported(q), ErrKind::Domain, "unsupported field size");
  require(w >= wmin, ErrKind::Domain, "counting weight out of range");
}

}  // namespace

i64 count_d(int w, int q) {
  check_count_args(w, q, 0);
  std::vector<i64> d(size_t(w) + 1);
  for (int v = 0; v <= w; ++v) {
    if (v == 0) {
      d[size_t(v)] = 1;
    } else if (v <= q - 1) {
      d[size_t(v)] = pow_checked(2, v - 1);
    } else if (v == q) {
      d[size_t(v)] = pow_checked(2, q - 1) - 1;
    } else {
      i64 acc = 0;
      for (int i = 1; i <= q; ++i) acc = checked_add(acc, d[size_t(v - i)]);
      d[size_t(v)] = acc;
    }
  }
  return d[size_t(w)];
}

namespace {

// s and t share their base cases and differ only in the recurrence.
i64 count_st(int w, int q, bool include_q_step_factor) {
  check_count_args(w, q, 1);
  std::vector<i64> f(size_t(w) + 1, 0);
  for (int v = 1; v <= w; ++v) {
    if (v < q) {
      f[size_t(v)] = checked_mul(q - 1, pow_checked(q, v - 1));
    } else if (v == q) {
      f[size_t(v)] = checked_mul(q - 1, pow_checked(q, q - 1) - 1);
    } else {
      i64 acc = 0;
      for (int i = 1; i <= q - 1; ++i) acc = checked_add(acc, f[size_t(v - i)]);
      acc = checked_mul(q - 1, acc);
      i64 qterm = f[size_t(v - q)];
      if (include_q_step_factor) qterm = checked_mul(q - 1, qterm);
      f[size_t(v)] = checked_add(acc, qterm);
    }
  }
  return f[size_t(w)];
}

}  // namespace

i64 count_s(int w, int q) { return count_st(w, q, false); }

i64 count_t(int w, int q) { return count_st(w, q, true); }

}  // namespace czl
