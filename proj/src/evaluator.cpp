#include "czl/evaluator.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "czl/anderson.hpp"
#include "czl/carlitz.hpp"
#include "czl/relations.hpp"
#include "czl/series.hpp"

namespace czl {

LaurentInf amzv_general(const Array& a, i64 N) {
  require(N >= 1, ErrKind::Domain, "precision target must be >= 1");
  require(a.depth() >= 1, ErrKind::Domain, "empty array has no value");
  const FqCtx& F = a.field();
  const int q = F.q();
  bool small = true;
  for (int i = 0; i < a.depth(); ++i)
    if (a.entry(i) > q) small = false;
  if (small) return amzv(a, N);

  FormalSum r = reduce_to_AT_symbolic(a, Family::S);
  LaurentInf acc = LaurentInf::zero_to(F, N);
  for (const auto& [u, c] : r) {
    // Polynomial coefficients shift the certified window down by their
    // degree; evaluate deep enough that every term is exact through N.
    const i64 drop = std::max<i64>(0, i64(c.num().deg()) - i64(c.den().deg()));
    acc = acc + acmpl(u, N + drop).mul_exact(c);
  }
  return acc;
}

namespace {

// Valuation at infinity of a nonzero rational function (degree drop).
i64 rat_valuation(const RatFunc& r) {
  check_internal(!r.num().is_zero(), "valuation of zero");
  return i64(r.den().deg()) - i64(r.num().deg());
}

}  // namespace

i64 at_zeta_check(const Array& a, i64 N) {
  require(N >= 1, ErrKind::Domain, "precision target must be >= 1");
  const int r = a.depth();
  require(r >= 1, ErrKind::Domain, "empty array has no value");
  const FqCtx& F = a.field();
  const int q = F.q();

  // Degree data of the interpolation polynomials, one per position.  The
  // position-k factor at index i is
  //   f_k(i) = eps_k^i * h(s_k, i) / ell_i^{s_k},
  // where h(s, i) is the interpolation polynomial with its coefficient
  // variable raised to the q^i power, so
  //   deg h(s_k, i) <= jmax_k * q^i + kdeg_k
  // and the factor's valuation is at least
  //   lb_k(i) = s_k * deg(ell_i) - jmax_k * q^i - kdeg_k.
  // The degree bound jmax*(q-1) < s*q makes lb_k strictly increasing, and
  // lb_k(0) = -(jmax_k + kdeg_k) <= 0, so each factor list below is
  // complete once lb_k clears the budget: indices past the cutoff can
  // never take part in a product of total valuation <= N.
  std::vector<i64> jmax(static_cast<size_t>(r)), kdeg(static_cast<size_t>(r));
  for (int k = 0; k < r; ++k) {
    TPoly H = anderson_thakur_H(F, a.entry(k));
    jmax[size_t(k)] = H.deg_theta();
    kdeg[size_t(k)] = H.deg_t();
    check_internal(jmax[size_t(k)] * (q - 1) < i64(a.entry(k)) * q,
                   "interpolation polynomial exceeds its degree bound");
  }

  std::vector<std::vector<RatFunc>> f(static_cast<size_t>(r));
  std::vector<std::vector<i64>> fv(static_cast<size_t>(r));
  std::vector<i64> minv(static_cast<size_t>(r));
  for (int k = 0; k < r; ++k) {
    const int s = a.entry(k);
    i64 budget = N;
    for (int j = 0; j < r; ++j)
      if (j != k) budget += jmax[size_t(j)] + kdeg[size_t(j)];
    uint8_t eps_pow = F.one();
    i64 qpow = 1;
    for (int i = 0;; ++i) {
      check_internal(i < 60, "factor table failed to terminate");
      const Fpoly ell = carlitz_ell(F, i);
      const i64 lower =
          i64(s) * ell.deg() - jmax[size_t(k)] * qpow - kdeg[size_t(k)];
      if (lower > budget) break;
      RatFunc val = at_eval(F, s, i) * RatFunc(Fpoly::one(F), ell.pow(s)) *
                    RatFunc::constant(F, eps_pow);
      f[size_t(k)].push_back(val);
      fv[size_t(k)].push_back(rat_valuation(val));
      eps_pow = F.mul(eps_pow, a.chr(k));
      qpow *= q;
    }
    check_internal(!f[size_t(k)].empty(), "empty factor table");
    minv[size_t(k)] =
        *std::min_element(fv[size_t(k)].begin(), fv[size_t(k)].end());
    check_internal(minv[size_t(k)] >= -(jmax[size_t(k)] + kdeg[size_t(k)]),
                   "factor valuation below its guaranteed bound");
  }

  // Cheapest possible total valuation of the factors at positions k..r-1.
  std::vector<i64> suffix_min(static_cast<size_t>(r) + 1, 0);
  for (int k = r - 1; k >= 0; --k)
    suffix_min[size_t(k)] = suffix_min[size_t(k) + 1] + minv[size_t(k)];

  // Depth-first walk over strictly decreasing index tuples, pruning once
  // the partial valuation plus the best the remaining positions can do
  // exceeds the target.  Every surviving term is exact through N.
  LaurentInf lhs = LaurentInf::zero_to(F, N);
  auto walk = [&](auto&& self, int k, int limit, const RatFunc& partial,
                  i64 pval) -> void {
    if (k == r) {
      lhs = lhs + LaurentInf::from_ratfunc(partial, N - pval + 1);
      return;
    }
    const int top = std::min(limit, int(f[size_t(k)].size()) - 1);
    for (int i = r - 1 - k; i <= top; ++i) {
      const i64 v = fv[size_t(k)][size_t(i)];
      if (pval + v + suffix_min[size_t(k) + 1] > N) continue;
      self(self, k + 1, i - 1, partial * f[size_t(k)][size_t(i)], pval + v);
    }
  };
  walk(walk, 0, std::numeric_limits<int>::max(), RatFunc::one(F), 0);

  Fpoly gamma = Fpoly::one(F);
  for (int k = 0; k < r; ++k)
    gamma = gamma * carlitz_gamma_fact(F, a.entry(k));
  LaurentInf rhs = amzv_general(a, N + gamma.deg()).mul_exact(RatFunc(gamma));

  return (lhs - rhs).valuation_lower_bound();
}

}  // namespace czl
