#include "czl/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace czl {

LaurentInf LaurentInf::zero(const FqCtx& F) {
  LaurentInf r;
  r.F_ = &F;
  return r;
}

LaurentInf LaurentInf::zero_to(const FqCtx& F, i64 known_to) {
  LaurentInf r;
  r.F_ = &F;
  r.known_to_ = known_to;
  return r;
}

LaurentInf LaurentInf::exact_poly(const Fpoly& f) {
  LaurentInf r;
  r.F_ = &f.field();
  if (!f.is_zero()) {
    r.lead_ = -f.deg();
    r.c_.assign(f.deg() + 1, 0);
    for (int i = 0; i <= f.deg(); ++i) r.c_[f.deg() - i] = f.coeff(i);
  }
  r.normalize();
  return r;
}

LaurentInf LaurentInf::from_ratfunc(const RatFunc& r, i64 n) {
  const FqCtx& F = r.field();
  require(n >= 1, ErrKind::Domain, "laurent_expand needs n >= 1");
  if (r.is_zero()) return zero(F);
  if (r.is_poly()) return exact_poly(r.num());
  // Write num/den = z^v * num*(z)/den*(z) with z = 1/theta, where p*(z) =
  // z^deg(p) p(1/z) has den*(0) = lc(den) != 0, and divide power series.
  const Fpoly& num = r.num();
  const Fpoly& den = r.den();
  int dn = num.deg(), dd = den.deg();
  i64 v = i64(dd) - i64(dn);
  std::vector<uint8_t> ns(size_t(dn) + 1), ds(size_t(dd) + 1);
  for (int i = 0; i <= dn; ++i) ns[i] = num.coeff(dn - i);
  for (int i = 0; i <= dd; ++i) ds[i] = den.coeff(dd - i);
  std::vector<uint8_t> out(size_t(n), 0);
  uint8_t d0inv = F.inv(ds[0]);
  for (i64 m = 0; m < n; ++m) {
    uint8_t acc = (m < i64(ns.size())) ? ns[size_t(m)] : 0;
    i64 jmax = std::min<i64>(m, i64(ds.size()) - 1);
    for (i64 j = 1; j <= jmax; ++j) {
      uint8_t dj = ds[size_t(j)];
      if (dj == 0 || out[size_t(m - j)] == 0) continue;
      acc = F.sub(acc, F.mul(dj, out[size_t(m - j)]));
    }
    out[size_t(m)] = F.mul(acc, d0inv);
  }
  LaurentInf res;
  res.F_ = &F;
  res.lead_ = v;
  res.c_ = std::move(out);
  res.known_to_ = v + n - 1;
  res.normalize();
  return res;
}

const FqCtx& LaurentInf::field() const {
  check_internal(F_ != nullptr, "series without field context");
  return *F_;
}

void LaurentInf::normalize() {
  // Drop stored coefficients beyond known_to.
  if (known_to_ != KNOWN_INF && !c_.empty()) {
    i64 last = lead_ + i64(c_.size()) - 1;
    if (last > known_to_) {
      i64 keep = known_to_ - lead_ + 1;
      if (keep <= 0) c_.clear();
      else c_.resize(size_t(keep));
    }
  }
  size_t front = 0;
  while (front < c_.size() && c_[front] == 0) ++front;
  if (front > 0) {
    c_.erase(c_.begin(), c_.begin() + front);
    lead_ += i64(front);
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  if (c_.empty()) lead_ = 0;
}

i64 LaurentInf::support_end() const {
  require(!c_.empty(), ErrKind::Domain, "series has no nonzero coefficient");
  return lead_ + i64(c_.size()) - 1;
}

uint8_t LaurentInf::coeff_at(i64 idx) const {
  require(idx <= known_to_, ErrKind::Precision,
          "coefficient index beyond known precision");
  if (c_.empty() || idx < lead_ || idx >= lead_ + i64(c_.size())) return 0;
  return c_[size_t(idx - lead_)];
}

i64 LaurentInf::valuation_lower_bound() const {
  if (!c_.empty()) return lead_;
  return exact() ? KNOWN_INF : known_to_ + 1;
}

LaurentInf LaurentInf::operator+(const LaurentInf& o) const {
  const FqCtx& F = field();
  check_internal(&F == &o.field(), "field mismatch");
  LaurentInf r;
  r.F_ = &F;
  r.known_to_ = std::min(known_to_, o.known_to_);
  if (c_.empty() && o.c_.empty()) {
    r.normalize();
    return r;
  }
  i64 lo = c_.empty() ? o.lead_ : (o.c_.empty() ? lead_ : std::min(lead_, o.lead_));
  i64 hi_a = c_.empty() ? lo - 1 : lead_ + i64(c_.size()) - 1;
  i64 hi_b = o.c_.empty() ? lo - 1 : o.lead_ + i64(o.c_.size()) - 1;
  i64 hi = std::min(std::max(hi_a, hi_b), r.known_to_);
  if (hi < lo) {
    r.normalize();
    return r;
  }
  r.lead_ = lo;
  r.c_.assign(size_t(hi - lo + 1), 0);
  for (i64 j = lo; j <= hi; ++j) {
    uint8_t a = (j >= lead_ && j < lead_ + i64(c_.size())) ? c_[size_t(j - lead_)] : 0;
    uint8_t b = (j >= o.lead_ && j < o.lead_ + i64(o.c_.size())) ? o.c_[size_t(j - o.lead_)] : 0;
    r.c_[size_t(j - lo)] = F.add(a, b);
  }
  r.normalize();
  return r;
}

LaurentInf LaurentInf::operator-() const {
  const FqCtx& F = field();
  LaurentInf r = *this;
  for (auto& v : r.c_) v = F.neg(v);
  return r;
}

LaurentInf LaurentInf::operator-(const LaurentInf& o) const {
  return *this + (-o);
}

LaurentInf LaurentInf::scaled(uint8_t c) const {
  const FqCtx& F = field();
  if (c == 0) {
    LaurentInf r;
    r.F_ = &F;
    r.known_to_ = known_to_;  // scaling by zero keeps (in fact improves) precision
    if (exact()) r.known_to_ = KNOWN_INF;
    return r;
  }
  LaurentInf r = *this;
  for (auto& v : r.c_) v = F.mul(v, c);
  return r;
}

LaurentInf LaurentInf::operator*(const LaurentInf& o) const {
  const FqCtx& F = field();
  check_internal(&F == &o.field(), "field mismatch");
  LaurentInf r;
  r.F_ = &F;
  if (c_.empty() || o.c_.empty()) {
    // A zero-to-precision factor: product coefficients are known through
    // (unknown tail of one) + (valuation bound of the other).
    if (exact() && o.exact()) {
      r.known_to_ = KNOWN_INF;
    } else {
      r.known_to_ = std::min(sat_add(known_to_, o.valuation_lower_bound()),
                             sat_add(o.known_to_, valuation_lower_bound()));
    }
    return r;
  }
  r.known_to_ = std::min(sat_add(known_to_, o.lead_), sat_add(o.known_to_, lead_));
  i64 lo = lead_ + o.lead_;
  i64 hi = std::min(lo + i64(c_.size()) + i64(o.c_.size()) - 2, r.known_to_);
  if (hi < lo) {
    r.normalize();
    return r;
  }
  r.lead_ = lo;
  r.c_.assign(size_t(hi - lo + 1), 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    uint8_t a = c_[i];
    if (a == 0) continue;
    i64 base = lead_ + i64(i) + o.lead_;
    if (base > hi) break;
    size_t jmax = std::min(o.c_.size(), size_t(hi - base + 1));
    for (size_t j = 0; j < jmax; ++j) {
      uint8_t b = o.c_[j];
      if (b == 0) continue;
      size_t k = size_t(base - lo) + j;
      r.c_[k] = F.add(r.c_[k], F.mul(a, b));
    }
  }
  r.normalize();
  return r;
}

LaurentInf LaurentInf::operator/(const LaurentInf& o) const {
  const FqCtx& F = field();
  check_internal(&F == &o.field(), "field mismatch");
  require(o.has_definite_valuation() && !o.c_.empty(), ErrKind::Precision,
          "division by a series with no known nonzero coefficient");
  // Reciprocal of o as a power series in z at offset -v(o); known through
  // known_to(o) - 2 v(o) by first-order perturbation.
  i64 vo = o.lead_;
  i64 terms = o.exact() ? (known_to_ == KNOWN_INF ? i64(c_.size()) + 64
                                                  : known_to_ - lead_ + 1) +
                              i64(o.c_.size())
                        : o.known_to_ - vo + 1;
  terms = std::max<i64>(terms, 1);
  std::vector<uint8_t> inv(size_t(terms), 0);
  uint8_t d0inv = F.inv(o.c_[0]);
  for (i64 m = 0; m < terms; ++m) {
    uint8_t acc = (m == 0) ? F.one() : F.zero();
    i64 jmax = std::min<i64>(m, i64(o.c_.size()) - 1);
    for (i64 j = 1; j <= jmax; ++j) {
      uint8_t dj = o.c_[size_t(j)];
      if (dj == 0 || inv[size_t(m - j)] == 0) continue;
      acc = F.sub(acc, F.mul(dj, inv[size_t(m - j)]));
    }
    inv[size_t(m)] = F.mul(acc, d0inv);
  }
  LaurentInf rec;
  rec.F_ = &F;
  rec.lead_ = -vo;
  rec.c_ = std::move(inv);
  rec.known_to_ = o.exact() ? -vo + terms - 1
                            : sat_add(o.known_to_, -2 * vo);
  rec.normalize();
  return *this * rec;
}

LaurentInf LaurentInf::mul_exact(const RatFunc& r) const {
  const FqCtx& F = field();
  if (r.is_zero()) {
    LaurentInf z;
    z.F_ = &F;
    z.known_to_ = KNOWN_INF;
    return z;
  }
  if (exact()) {
    i64 span = c_.empty() ? 1 : i64(c_.size());
    return *this * from_ratfunc(r, span + 64);
  }
  // Need r's coefficients through index known_to_ - v(this) + v(r), i.e.
  // (known_to_ - v_lower) + 1 terms from its valuation.
  i64 vlow = valuation_lower_bound();
  i64 terms = known_to_ - std::min(vlow, known_to_) + 1;
  terms = std::max<i64>(terms, 1);
  return *this * from_ratfunc(r, terms);
}

LaurentInf LaurentInf::pow(i64 e) const {
  check_internal(e >= 0, "negative series power");
  LaurentInf acc = exact_poly(Fpoly::one(field()));
  LaurentInf base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

LaurentInf LaurentInf::truncated(i64 k) const {
  LaurentInf r = *this;
  if (k < r.known_to_) {
    r.known_to_ = k;
    r.normalize();
  }
  return r;
}

std::string LaurentInf::to_string(int max_terms) const {
  std::ostringstream os;
  int shown = 0;
  bool any = false;
  for (size_t i = 0; i < c_.size() && shown < max_terms; ++i) {
    if (c_[i] == 0) continue;
    if (any) os << "+";
    i64 e = -(lead_ + i64(i));
    os << field().to_string(c_[i]);
    if (e != 0) os << "*theta^" << e;
    any = true;
    ++shown;
  }
  if (!any) os << "0";
  if (!exact()) os << " + O(theta^" << -(known_to_ + 1) << ")";
  return os.str();
}

}  // namespace czl
