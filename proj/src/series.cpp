#include "czl/series.hpp"

#include <algorithm>
#include <vector>

#include "czl/carlitz.hpp"

namespace czl {

namespace {

constexpr int kDegreeLoopCap = 64;

}  // namespace

LaurentInf acmpl(const Array& a, i64 N) {
  const FqCtx& F = a.field();
  require(N >= 1, ErrKind::Domain, "precision target must be >= 1");
  int n = a.depth();
  if (n == 0) return LaurentInf::exact_poly(Fpoly::one(F));
  int q = F.q();

  // P[j] holds Si_{<d}(tail starting at entry j) at the current d;
  // P[n] is the empty-array value 1.
  std::vector<LaurentInf> P(size_t(n) + 1, LaurentInf::zero_to(F, N));
  P[size_t(n)] = LaurentInf::exact_poly(Fpoly::one(F));
  LaurentInf total = LaurentInf::zero_to(F, N);

  i64 ell_deg = 0, qpow = 1;  // deg ell_d = q + ... + q^d
  int consecutive = 0;
  for (int d = 0; consecutive < 2; ++d) {
    require(d < kDegreeLoopCap, ErrKind::Resource,
            "degree loop cap exceeded");
    if (d > 0) {
      qpow *= q;
      ell_deg += qpow;
    }

    // Expand 1/ell_d far enough that every power stays known through N.
    const Fpoly& ell = carlitz_ell(F, d);
    LaurentInf inv_ell = LaurentInf::from_ratfunc(
        RatFunc(Fpoly::one(F), ell), N + 1);

    std::vector<LaurentInf> L(size_t(n), LaurentInf::zero_to(F, N));
    for (int j = n - 1; j >= 0; --j) {
      LaurentInf head = inv_ell.pow(a.entry(j)).scaled(F.pow(a.chr(j), d));
      L[size_t(j)] = head * P[size_t(j) + 1];
    }
    total = total + L[0];

    // Guaranteed valuation of the next degree-d terms: s_1 * deg ell_d.
    if (i64(a.entry(0)) * ell_deg > N)
      ++consecutive;
    else
      consecutive = 0;

    for (int j = 0; j < n; ++j) P[size_t(j)] = P[size_t(j)] + L[size_t(j)];
  }
  LaurentInf out = total.truncated(N);
  require(out.known_to() >= N, ErrKind::Internal, "precision shortfall");
  return out;
}

LaurentInf amzv(const Array& a, i64 N) {
  const FqCtx& F = a.field();
  require(N >= 1, ErrKind::Domain, "precision target must be >= 1");
  int q = F.q();
  bool small_entries = true;
  for (int i = 0; i < a.depth(); ++i)
    if (a.entry(i) > q) small_entries = false;
  // With all entries <= q the two families have identical power sums at
  // every degree, so the Si evaluation computes the same value.
  if (small_entries) return acmpl(a, N);

  int n = a.depth();
  LaurentInf total = LaurentInf::zero_to(F, N);
  int consecutive = 0;
  for (int d = 0; consecutive < 2; ++d) {
    // Guaranteed valuation of S_d(a): each chain d = d_1 > ... > d_n >= 0
    // contributes at least s_1 d + sum_{i>=2} s_i (n - i).
    i64 bound = i64(a.entry(0)) * d;
    for (int i = 1; i < n; ++i) bound += i64(a.entry(i)) * (n - 1 - i);
    if (bound > N) {
      ++consecutive;
      continue;
    }
    consecutive = 0;
    RatFunc term = power_sum(d, a, false, Family::S);  // resource-capped
    if (term.is_zero()) continue;
    i64 terms = N - term.v_inf() + 1;
    if (terms >= 1) total = total + LaurentInf::from_ratfunc(term, terms);
  }
  LaurentInf out = total.truncated(N);
  require(out.known_to() >= N, ErrKind::Internal, "precision shortfall");
  return out;
}

i64 amzv_direct_precision(const Array& a, i64 N) {
  const FqCtx& F = a.field();
  require(N >= 1, ErrKind::Domain, "precision target must be >= 1");
  int q = F.q();
  int n = a.depth();
  bool small_entries = true;
  for (int i = 0; i < n; ++i)
    if (a.entry(i) > q) small_entries = false;
  if (small_entries || n == 0) return N;
  // Mirror the amzv degree loop: the term at degree d is evaluated exactly
  // when bound(d) <= N, and evaluation is capped at s_family_dmax.  The
  // largest safe target keeps every evaluated degree at or below the cap.
  i64 cap = i64(a.entry(0)) * (s_family_dmax(q) + 1) - 1;
  for (int i = 1; i < n; ++i) cap += i64(a.entry(i)) * (n - 1 - i);
  return std::min(N, cap);
}

LaurentInf carlitz_pi_power(const FqCtx& F, i64 w, i64 N) {
  require(N >= 1, ErrKind::Domain, "precision target must be >= 1");
  int q = F.q();
  require(w >= 0 && w % (q - 1) == 0, ErrKind::Domain,
          "period powers exist only for weights divisible by q-1");
  i64 m = w / (q - 1);
  if (m == 0) return LaurentInf::exact_poly(Fpoly::one(F)).truncated(N);
  // Each extra factor loses q coefficients of precision (valuation -q).
  i64 Nwork = N + m * q;
  LaurentInf zeta = acmpl(Array::singleton(F, F.one(), q - 1), Nwork);
  LaurentInf base = zeta.mul_exact(RatFunc(-carlitz_factD(F, 1)));
  return base.pow(m).truncated(N);
}

}  // namespace czl
