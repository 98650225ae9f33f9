#include "czl/stuffle.hpp"

#include <sstream>
#include <tuple>
#include <utility>

namespace czl {

void fs_add_term(FormalSum& f, const Array& a, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = f.find(a);
  if (it == f.end()) {
    f.emplace(a, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) f.erase(it);
}

void fs_add(FormalSum& f, const FormalSum& g) {
  for (const auto& [a, c] : g) fs_add_term(f, a, c);
}

void fs_add_scaled(FormalSum& f, const FormalSum& g, const RatFunc& c) {
  if (c.is_zero()) return;
  for (const auto& [a, gc] : g) fs_add_term(f, a, gc * c);
}

FormalSum fs_scaled(const FormalSum& f, const RatFunc& c) {
  FormalSum r;
  fs_add_scaled(r, f, c);
  return r;
}

FormalSum fs_neg(const FormalSum& f) {
  FormalSum r;
  for (const auto& [a, c] : f) r.emplace(a, -c);
  return r;
}

bool fs_equal(const FormalSum& f, const FormalSum& g) {
  if (f.size() != g.size()) return false;
  auto it = g.begin();
  for (const auto& [a, c] : f) {
    if (!(a == it->first) || c != it->second) return false;
    ++it;
  }
  return true;
}

std::string fs_to_text(const FormalSum& f) {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : f) {
    if (!first) os << "; ";
    first = false;
    os << c.to_string("theta") << " * {" << a.to_text() << "}";
  }
  return os.str();
}

namespace {

// C(n, k) mod p for small prime p, digitwise.
int binom_mod_p(i64 n, i64 k, int p) {
  if (k < 0 || k > n) return 0;
  int r = 1;
  while (n > 0 || k > 0) {
    int nd = int(n % p), kd = int(k % p);
    if (kd > nd) return 0;
    // nd, kd < p <= 7: exact small binomial fits easily.
    long c = 1;
    for (int j = 1; j <= kd; ++j) c = c * (nd - kd + j) / j;
    r = int((long(r) * (c % p)) % p);
    n /= p;
    k /= p;
  }
  return r;
}

}  // namespace

uint8_t chen_delta(i64 s, i64 t, i64 i, const FqCtx& F) {
  require(s >= 1 && t >= 1, ErrKind::Domain,
          "chen_delta: exponents must be positive");
  if (i <= 0 || i >= s + t) return 0;
  if (i % (F.q() - 1) != 0) return 0;
  const int p = F.p();
  auto half = [&](i64 a) {
    uint8_t e = F.from_int(binom_mod_p(i - 1, a - 1, p));
    return ((a - 1) & 1) ? F.neg(e) : e;
  };
  return F.add(half(s), half(t));
}

namespace {

using StKey = std::tuple<int, int, Array, Array>;
thread_local std::map<StKey, FormalSum> g_strict;

const FqCtx& product_field(const Array& a, const Array& b) {
  const FqCtx& F = a.field();
  check_internal(&F == &b.field(), "stuffle: mixed coefficient fields");
  return F;
}

}  // namespace

FormalSum diag_product(const Array& a, const Array& b, Family fam) {
  const FqCtx& F = product_field(a, b);
  FormalSum out;
  if (a.empty() || b.empty()) {
    fs_add_term(out, a.empty() ? b : a, RatFunc::one(F));
    return out;
  }
  const uint8_t mu = F.mul(a.chr(0), b.chr(0));
  const int u = a.entry(0) + b.entry(0);
  const FormalSum tails = strict_product(a.tail(), b.tail(), fam);
  for (const auto& [v, h] : tails) fs_add_term(out, v.prepend(mu, u), h);
  if (fam == Family::S) {
    for (int i = 1; i < u; ++i) {
      const uint8_t dl = chen_delta(a.entry(0), b.entry(0), i, F);
      if (dl == 0) continue;
      const RatFunc dc = RatFunc::constant(F, dl);
      const Array inner = Array::singleton(F, F.one(), i);
      for (const auto& [v, h] : tails) {
        const FormalSum g = strict_product(inner, v, fam);
        for (const auto& [w, gc] : g)
          fs_add_term(out, w.prepend(mu, u - i), h * gc * dc);
      }
    }
  }
  return out;
}

FormalSum mixed_product(const Array& a, const Array& b, Family fam) {
  require(!a.empty(), ErrKind::Domain,
          "mixed_product: left factor must be nonempty");
  product_field(a, b);
  const FormalSum g = strict_product(a.tail(), b, fam);
  FormalSum out;
  for (const auto& [v, c] : g)
    fs_add_term(out, v.prepend(a.chr(0), a.entry(0)), c);
  return out;
}

FormalSum strict_product(const Array& a, const Array& b, Family fam) {
  const FqCtx& F = product_field(a, b);
  if (a.empty() || b.empty()) {
    FormalSum out;
    fs_add_term(out, a.empty() ? b : a, RatFunc::one(F));
    return out;
  }
  // The expansion is symmetric in (a, b); cache under a canonical order.
  const bool swap = b < a;
  const Array& x = swap ? b : a;
  const Array& y = swap ? a : b;
  StKey key{F.q(), int(fam), x, y};
  if (auto it = g_strict.find(key); it != g_strict.end()) return it->second;
  FormalSum out = diag_product(x, y, fam);
  fs_add(out, mixed_product(x, y, fam));
  fs_add(out, mixed_product(y, x, fam));
  g_strict.emplace(std::move(key), out);
  return out;
}

FormalSum value_product(const Array& a, const Array& b, Family fam) {
  // Summing the strict identity over all degrees: the value of an array is
  // the limit of its strict power sums, so the expansions coincide.
  return strict_product(a, b, fam);
}

void stuffle_cache_clear() { g_strict.clear(); }

}  // namespace czl
