#include "czl/tpoly.hpp"

#include <sstream>

namespace czl {

TPoly::TPoly(const FqCtx& F, std::vector<RatFunc> coeffs)
    : F_(&F), c_(std::move(coeffs)) {
  trim();
}

TPoly TPoly::one(const FqCtx& F) { return constant(RatFunc::one(F)); }

TPoly TPoly::t(const FqCtx& F) { return monomial(RatFunc::one(F), 1); }

TPoly TPoly::constant(RatFunc c) {
  TPoly r(c.field());
  if (!c.is_zero()) r.c_ = {std::move(c)};
  return r;
}

TPoly TPoly::monomial(RatFunc c, int e) {
  TPoly r(c.field());
  if (!c.is_zero()) {
    r.c_.assign(e + 1, RatFunc::zero(c.field()));
    r.c_[e] = std::move(c);
  }
  return r;
}

TPoly TPoly::from_tpolynomial(const Fpoly& f) {
  const FqCtx& F = f.field();
  TPoly r(F);
  for (int i = 0; i <= f.deg(); ++i)
    r.c_.push_back(RatFunc::constant(F, f.coeff(i)));
  r.trim();
  return r;
}

const FqCtx& TPoly::field() const {
  check_internal(F_ != nullptr, "t-polynomial without field context");
  return *F_;
}

RatFunc TPoly::coeff(int i) const {
  if (i < 0 || i >= int(c_.size())) return RatFunc::zero(field());
  return c_[size_t(i)];
}

void TPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TPoly TPoly::operator+(const TPoly& o) const {
  const FqCtx& F = field();
  TPoly r(F);
  size_t n = std::max(c_.size(), o.c_.size());
  r.c_.reserve(n);
  for (size_t i = 0; i < n; ++i) r.c_.push_back(coeff(int(i)) + o.coeff(int(i)));
  r.trim();
  return r;
}

TPoly TPoly::operator-(const TPoly& o) const { return *this + (-o); }

TPoly TPoly::operator-() const {
  TPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

TPoly TPoly::operator*(const TPoly& o) const {
  const FqCtx& F = field();
  if (is_zero() || o.is_zero()) return TPoly(F);
  TPoly r(F);
  r.c_.assign(c_.size() + o.c_.size() - 1, RatFunc::zero(F));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
  }
  r.trim();
  return r;
}

TPoly TPoly::scaled(const RatFunc& c) const {
  const FqCtx& F = field();
  if (c.is_zero()) return TPoly(F);
  TPoly r = *this;
  for (auto& v : r.c_) v = v * c;
  return r;
}

TPoly TPoly::pow(i64 e) const {
  check_internal(e >= 0, "negative t-polynomial power");
  TPoly acc = TPoly::one(field());
  TPoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

TPoly TPoly::twist(int i) const {
  check_internal(i >= 0, "negative twist");
  if (i == 0) return *this;
  i64 m = 1;
  for (int j = 0; j < i; ++j) m *= field().q();
  TPoly r = *this;
  for (auto& v : r.c_) v = v.dilate(m);
  return r;
}

RatFunc TPoly::eval_t(const RatFunc& value) const {
  RatFunc acc = RatFunc::zero(field());
  for (int i = deg_t(); i >= 0; --i) acc = acc * value + c_[size_t(i)];
  return acc;
}

bool TPoly::has_polynomial_coeffs() const {
  for (const auto& v : c_)
    if (!v.is_poly()) return false;
  return true;
}

int TPoly::deg_theta() const {
  check_internal(has_polynomial_coeffs(), "deg_theta of rational coefficients");
  int d = -1;
  for (const auto& v : c_) d = std::max(d, v.num().deg());
  return d;
}

TPoly TPoly::swap_vars() const {
  const FqCtx& F = field();
  check_internal(has_polynomial_coeffs(), "variable swap needs polynomial coefficients");
  int dt = deg_t(), dth = deg_theta();
  if (dt < 0) return TPoly(F);
  TPoly r(F);
  r.c_.assign(size_t(dth) + 1, RatFunc::zero(F));
  for (int newt = 0; newt <= dth; ++newt) {
    std::vector<uint8_t> row(size_t(dt) + 1, 0);
    for (int j = 0; j <= dt; ++j) row[size_t(j)] = c_[size_t(j)].num().coeff(newt);
    r.c_[size_t(newt)] = RatFunc(Fpoly(F, std::move(row)));
  }
  r.trim();
  return r;
}

std::string TPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg_t(); i >= 0; --i) {
    if (c_[size_t(i)].is_zero()) continue;
    if (!first) os << "+";
    first = false;
    os << "(" << c_[size_t(i)].to_string("theta") << ")";
    if (i > 0) {
      os << "*t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace czl
