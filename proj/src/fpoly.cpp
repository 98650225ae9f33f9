#include "czl/fpoly.hpp"

#include <algorithm>
#include <sstream>

namespace czl {

Fpoly::Fpoly(const FqCtx& F, std::vector<uint8_t> coeffs)
    : F_(&F), c_(std::move(coeffs)) {
  for (uint8_t v : c_)
    check_internal(v < F.q(), "coefficient out of field range");
  trim();
}

Fpoly Fpoly::constant(const FqCtx& F, uint8_t c) {
  Fpoly r(F);
  if (c != 0) r.c_ = {c};
  return r;
}

Fpoly Fpoly::monomial(const FqCtx& F, uint8_t c, int e) {
  Fpoly r(F);
  if (c != 0) {
    r.c_.assign(e + 1, 0);
    r.c_[e] = c;
  }
  return r;
}

const FqCtx& Fpoly::field() const {
  check_internal(F_ != nullptr, "polynomial without field context");
  return *F_;
}

void Fpoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Fpoly Fpoly::operator+(const Fpoly& o) const {
  const FqCtx& F = field();
  check_internal(&F == &o.field(), "field mismatch");
  Fpoly r(F);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.c_.size(); ++i)
    r.c_[i] = F.add(coeff(int(i)), o.coeff(int(i)));
  r.trim();
  return r;
}

Fpoly Fpoly::operator-(const Fpoly& o) const { return *this + (-o); }

Fpoly Fpoly::operator-() const {
  const FqCtx& F = field();
  Fpoly r = *this;
  for (auto& v : r.c_) v = F.neg(v);
  return r;
}

Fpoly Fpoly::scaled(uint8_t c) const {
  const FqCtx& F = field();
  if (c == 0) return Fpoly(F);
  Fpoly r = *this;
  for (auto& v : r.c_) v = F.mul(v, c);
  r.trim();
  return r;
}

Fpoly Fpoly::shifted(int e) const {
  check_internal(e >= 0, "negative shift");
  if (is_zero()) return *this;
  Fpoly r(field());
  r.c_.assign(c_.size() + e, 0);
  std::copy(c_.begin(), c_.end(), r.c_.begin() + e);
  return r;
}

Fpoly Fpoly::operator*(const Fpoly& o) const {
  const FqCtx& F = field();
  check_internal(&F == &o.field(), "field mismatch");
  if (is_zero() || o.is_zero()) return Fpoly(F);
  Fpoly r(F);
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    uint8_t a = c_[i];
    if (a == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      uint8_t b = o.c_[j];
      if (b == 0) continue;
      r.c_[i + j] = F.add(r.c_[i + j], F.mul(a, b));
    }
  }
  r.trim();
  return r;
}

Fpoly Fpoly::pow(i64 e) const {
  check_internal(e >= 0, "negative polynomial power");
  Fpoly acc = Fpoly::one(field());
  Fpoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Fpoly Fpoly::dilate(i64 m) const {
  check_internal(m >= 1, "dilation factor must be positive");
  if (is_zero()) return *this;
  Fpoly r(field());
  r.c_.assign(size_t((i64(c_.size()) - 1) * m + 1), 0);
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) r.c_[size_t(i64(i) * m)] = c_[i];
  return r;
}

void Fpoly::divrem(const Fpoly& a, const Fpoly& b, Fpoly* quo, Fpoly* rem) {
  const FqCtx& F = a.field();
  require(!b.is_zero(), ErrKind::Domain, "polynomial division by zero");
  Fpoly q(F), r = a;
  if (r.deg() >= b.deg()) {
    q.c_.assign(r.deg() - b.deg() + 1, 0);
    uint8_t blc_inv = F.inv(b.lc());
    for (int d = r.deg(); d >= b.deg();) {
      uint8_t f = F.mul(r.c_[d], blc_inv);
      q.c_[d - b.deg()] = f;
      // r -= f * x^(d - deg b) * b
      int off = d - b.deg();
      for (int i = 0; i <= b.deg(); ++i)
        r.c_[off + i] = F.sub(r.c_[off + i], F.mul(f, b.c_[i]));
      r.trim();
      d = r.deg();
      if (d < b.deg()) break;
    }
  }
  q.trim();
  if (quo) *quo = q;
  if (rem) *rem = r;
}

Fpoly Fpoly::operator/(const Fpoly& o) const {
  Fpoly q;
  divrem(*this, o, &q, nullptr);
  return q;
}

Fpoly Fpoly::operator%(const Fpoly& o) const {
  Fpoly r;
  divrem(*this, o, nullptr, &r);
  return r;
}

Fpoly Fpoly::gcd(const Fpoly& a, const Fpoly& b) {
  Fpoly x = a, y = b;
  while (!y.is_zero()) {
    Fpoly r = x % y;
    x = y;
    y = r;
  }
  return x.is_zero() ? x : x.monic();
}

Fpoly Fpoly::monic() const {
  if (is_zero()) return *this;
  return scaled(field().inv(lc()));
}

uint8_t Fpoly::eval(uint8_t point) const {
  const FqCtx& F = field();
  uint8_t acc = 0;
  for (int i = deg(); i >= 0; --i) acc = F.add(F.mul(acc, point), c_[i]);
  return acc;
}

Fpoly Fpoly::compose(const Fpoly& g) const {
  const FqCtx& F = field();
  Fpoly acc(F);
  for (int i = deg(); i >= 0; --i)
    acc = acc * g + Fpoly::constant(F, c_[i]);
  return acc;
}

int Fpoly::x_order() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return int(i);
  return -1;
}

bool Fpoly::operator<(const Fpoly& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  return std::lexicographical_compare(c_.rbegin(), c_.rend(), o.c_.rbegin(),
                                      o.c_.rend());
}

std::string Fpoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  const FqCtx& F = field();
  std::ostringstream os;
  bool first = true;
  for (int i = deg(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    bool unit_coeff = (c_[i] == 1) && i > 0;
    if (!unit_coeff) os << F.to_string(c_[i]);
    if (i > 0) {
      if (!unit_coeff) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Fpoly Fpoly::parse(const FqCtx& F, const std::string& s,
                   const std::string& var) {
  // Terms separated by '+' / '-' at top level: "2*theta^3+theta+1".
  Fpoly acc(F);
  size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && isspace((unsigned char)s[i])) ++i; };
  skip_ws();
  require(i < s.size(), ErrKind::Malformed, "empty polynomial");
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') { neg = s[i] == '-'; ++i; }
  while (true) {
    skip_ws();
    // term: [coeff][*][var[^exp]]
    std::string coeff_tok;
    if (i < s.size() && s[i] == '[') {
      size_t j = s.find(']', i);
      require(j != std::string::npos, ErrKind::Malformed, "unclosed '['");
      coeff_tok = s.substr(i, j - i + 1);
      i = j + 1;
    } else {
      while (i < s.size() && isdigit((unsigned char)s[i])) coeff_tok += s[i++];
    }
    skip_ws();
    if (i < s.size() && s[i] == '*') { ++i; skip_ws(); }
    int exp = 0;
    bool has_var = false;
    if (i + var.size() <= s.size() && s.compare(i, var.size(), var) == 0) {
      has_var = true;
      i += var.size();
      exp = 1;
      skip_ws();
      if (i < s.size() && s[i] == '^') {
        ++i;
        skip_ws();
        std::string e;
        while (i < s.size() && isdigit((unsigned char)s[i])) e += s[i++];
        require(!e.empty(), ErrKind::Malformed, "missing exponent");
        exp = std::stoi(e);
      }
    }
    require(has_var || !coeff_tok.empty(), ErrKind::Malformed,
            "bad polynomial term in '" + s + "'");
    uint8_t c = coeff_tok.empty() ? F.one() : F.parse(coeff_tok);
    if (neg) c = F.neg(c);
    acc = acc + Fpoly::monomial(F, c, exp);
    skip_ws();
    if (i >= s.size()) break;
    require(s[i] == '+' || s[i] == '-', ErrKind::Malformed,
            "unexpected character in polynomial: '" + s + "'");
    neg = s[i] == '-';
    ++i;
  }
  return acc;
}

}  // namespace czl
