#include "czl/ratfunc.hpp"

namespace czl {

RatFunc::RatFunc(Fpoly num) : num_(std::move(num)) {
  den_ = Fpoly::one(num_.field());
}

RatFunc::RatFunc(Fpoly num, Fpoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  require(!den_.is_zero(), ErrKind::Domain, "zero denominator");
  reduce();
}

void RatFunc::reduce() {
  const FqCtx& F = num_.field();
  if (num_.is_zero()) {
    den_ = Fpoly::one(F);
    return;
  }
  Fpoly g = Fpoly::gcd(num_, den_);
  if (g.deg() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  uint8_t lc = den_.lc();
  if (lc != 1) {
    uint8_t ic = F.inv(lc);
    num_ = num_.scaled(ic);
    den_ = den_.scaled(ic);
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  // Cross-reduce before multiplying to keep intermediate degrees down.
  Fpoly g1 = Fpoly::gcd(num_, o.den_);
  Fpoly g2 = Fpoly::gcd(o.num_, den_);
  Fpoly n1 = g1.deg() > 0 ? num_ / g1 : num_;
  Fpoly d2 = g1.deg() > 0 ? o.den_ / g1 : o.den_;
  Fpoly n2 = g2.deg() > 0 ? o.num_ / g2 : o.num_;
  Fpoly d1 = g2.deg() > 0 ? den_ / g2 : den_;
  return RatFunc(n1 * n2, d1 * d2);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inv(); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inv() const {
  require(!is_zero(), ErrKind::Domain, "inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(i64 e) const {
  if (e < 0) return inv().pow(-e);
  RatFunc acc = RatFunc::one(field());
  RatFunc base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

RatFunc RatFunc::scaled(uint8_t c) const {
  RatFunc r = *this;
  r.num_ = r.num_.scaled(c);
  if (r.num_.is_zero()) r.den_ = Fpoly::one(field());
  return r;
}

i64 RatFunc::v_inf() const {
  if (is_zero()) return sat_add(std::numeric_limits<i64>::max() / 8, 0);
  return i64(den_.deg()) - i64(num_.deg());
}

RatFunc RatFunc::dilate(i64 m) const {
  return RatFunc(num_.dilate(m), den_.dilate(m));
}

RatFunc RatFunc::compose(const Fpoly& g) const {
  return RatFunc(num_.compose(g), den_.compose(g));
}

std::string RatFunc::to_string(const std::string& var) const {
  if (is_poly()) return num_.to_string(var);
  std::string n = num_.to_string(var);
  std::string d = den_.to_string(var);
  if (num_.deg() > 0) n = "(" + n + ")";
  if (den_.deg() > 0) d = "(" + d + ")";
  return n + "/" + d;
}

RatFunc RatFunc::parse(const FqCtx& F, const std::string& s,
                       const std::string& var) {
  // Either "num" or "num/den" with optional parentheses around each side.
  auto strip = [](std::string t) {
    while (!t.empty() && isspace((unsigned char)t.front())) t.erase(t.begin());
    while (!t.empty() && isspace((unsigned char)t.back())) t.pop_back();
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')') {
      int depth = 0;
      bool wraps = true;
      for (size_t i = 0; i < t.size(); ++i) {
        if (t[i] == '(') ++depth;
        if (t[i] == ')') { --depth; if (depth == 0 && i + 1 != t.size()) wraps = false; }
      }
      if (wraps) t = t.substr(1, t.size() - 2);
    }
    return t;
  };
  // Find top-level '/'.
  int depth = 0;
  size_t slash = std::string::npos;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (s[i] == '/' && depth == 0) {
      require(slash == std::string::npos, ErrKind::Malformed,
              "multiple '/' in rational function");
      slash = i;
    }
  }
  if (slash == std::string::npos)
    return RatFunc(Fpoly::parse(F, strip(s), var));
  Fpoly n = Fpoly::parse(F, strip(s.substr(0, slash)), var);
  Fpoly d = Fpoly::parse(F, strip(s.substr(slash + 1)), var);
  return RatFunc(n, d);
}

}  // namespace czl
