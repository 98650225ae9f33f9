#include "czl/power_sums.hpp"

#include <map>
#include <tuple>
#include <vector>

#include "czl/carlitz.hpp"

namespace czl {

int s_family_dmax(int q) {
  switch (q) {
    case 2:
      return 10;
    case 3:
      return 7;
    default:
      return 5;
  }
}

namespace {

// The monic polynomials of degree d are the roots of
//   W(X) = E_d(X) - E_d(theta^d),
// where E_d(X) = prod_{deg v < d} (X - v) is additive with support on the
// exponents q^0..q^d:  E_0 = X and
//   E_{d+1}(X) = E_d(X)^q - E_d(theta^d)^{q-1} E_d(X).
// Writing n = q^d and reversing W into the monic polynomial with roots
// 1/a, the only nonzero non-leading coefficients sit at indices k = q^i:
//   a_{q^i} = w_{q^i} / w_0   (w_j = coefficient of X^j in W, w_0 = W(0)),
// so Newton's identities give the reciprocal power sums by the sparse
// recursion  p_s = -sum_{q^i <= s-1} a_{q^i} p_{s-q^i} - (s mod p) a_s.
struct MonicSumTable {
  std::vector<RatFunc> a;  // a[i] = a_{q^i}, i = 0..d
  std::vector<i64> qpow;   // q^0..q^d
  std::vector<RatFunc> p;  // p[s] = sum over monic deg-d a of a^{-s}; p[0] unused
};

using MonicKey = std::pair<int, int>;  // (q, d)

thread_local std::map<MonicKey, MonicSumTable> g_monic;

using PsKey = std::tuple<int, int, int, int, Array>;  // (q, family, strict, d, a)

thread_local std::map<PsKey, RatFunc> g_power;

MonicSumTable& monic_table(const FqCtx& F, int d) {
  MonicKey key{F.q(), d};
  auto it = g_monic.find(key);
  if (it != g_monic.end()) return it->second;

  int q = F.q();
  // e[i] = coefficient of X^{q^i} in E_j, grown from E_0 = X.
  std::vector<Fpoly> e = {Fpoly::one(F)};
  for (int j = 0; j < d; ++j) {
    // u = E_j(theta^j).
    Fpoly u = Fpoly::zero(F);
    i64 qp = 1;
    for (const Fpoly& ei : e) {
      u = u + ei * Fpoly::monomial(F, 1, 0).shifted(int(qp) * j);
      qp *= q;
    }
    Fpoly uq1 = u.pow(q - 1);
    std::vector<Fpoly> next(e.size() + 1, Fpoly::zero(F));
    for (size_t i = 0; i < e.size(); ++i) {
      next[i + 1] = e[i].dilate(q);
      next[i] = next[i] - uq1 * e[i];
    }
    e = std::move(next);
  }
  Fpoly w0 = Fpoly::zero(F);
  i64 qp = 1;
  for (const Fpoly& ei : e) {
    w0 = w0 - ei * Fpoly::monomial(F, 1, 0).shifted(int(qp) * d);
    qp *= q;
  }
  require(!w0.is_zero(), ErrKind::Internal, "degenerate root polynomial");

  MonicSumTable t;
  RatFunc w0inv = RatFunc(w0).inv();
  qp = 1;
  for (const Fpoly& ei : e) {
    t.a.push_back(RatFunc(ei) * w0inv);
    t.qpow.push_back(qp);
    qp *= q;
  }
  t.p.push_back(RatFunc::zero(F));  // index 0 placeholder
  return g_monic.emplace(key, std::move(t)).first->second;
}

const RatFunc& monic_recip(const FqCtx& F, int d, int s) {
  MonicSumTable& t = monic_table(F, d);
  int p_char = F.p();
  while (int(t.p.size()) <= s) {
    int m = int(t.p.size());
    RatFunc acc = RatFunc::zero(F);
    for (size_t i = 0; i < t.qpow.size(); ++i) {
      if (t.qpow[i] > m - 1) break;
      acc = acc - t.a[i] * t.p[size_t(m - t.qpow[i])];
    }
    int mmodp = m % p_char;
    if (mmodp != 0) {
      for (size_t i = 0; i < t.qpow.size(); ++i)
        if (t.qpow[i] == m)
          acc = acc - t.a[i].scaled(F.from_int(mmodp));
    }
    t.p.push_back(acc);
  }
  return t.p[size_t(s)];
}

}  // namespace

RatFunc monic_reciprocal_power_sum(const FqCtx& F, int d, int s) {
  require(d >= 0, ErrKind::Domain, "negative degree");
  require(s >= 1, ErrKind::Domain, "power must be >= 1");
  require(d <= s_family_dmax(F.q()), ErrKind::Resource,
          "family-S degree cap exceeded");
  if (d == 0) return RatFunc::one(F);  // only the monic constant 1
  return monic_recip(F, d, s);
}

RatFunc power_sum(int d, const Array& a, bool strict, Family fam) {
  const FqCtx& F = a.field();
  if (strict) {
    if (a.empty()) return RatFunc::one(F);
    if (a.depth() > d) return RatFunc::zero(F);
  } else {
    if (a.empty())
      return d == 0 ? RatFunc::one(F) : RatFunc::zero(F);
    if (d < 0 || a.depth() > d + 1) return RatFunc::zero(F);
  }

  PsKey key{F.q(), fam == Family::S ? 0 : 1, strict ? 1 : 0, d, a};
  auto it = g_power.find(key);
  if (it != g_power.end()) return it->second;

  RatFunc result = RatFunc::zero(F);
  if (strict) {
    for (int e = a.depth() - 1; e < d; ++e)
      result = result + power_sum(e, a, false, fam);
  } else {
    RatFunc head;
    if (fam == Family::S) {
      head = monic_reciprocal_power_sum(F, d, a.entry(0));
    } else {
      head = RatFunc(Fpoly::one(F), carlitz_ell(F, d)).pow(a.entry(0));
    }
    head = head.scaled(F.pow(a.chr(0), d));
    result = head * power_sum(d, a.tail(), true, fam);
  }
  g_power.emplace(std::move(key), result);
  return result;
}

void power_sum_cache_clear() {
  g_monic.clear();
  g_power.clear();
}

}  // namespace czl
