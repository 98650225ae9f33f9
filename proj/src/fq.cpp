#include "czl/fq.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace czl {
namespace {

struct FieldDef {
  int p, k;
  // Reduction rule x^k = sum_i red[i] * x^i (coefficients mod p), empty for
  // k = 1.  The classical defining polynomials for these small fields.
  std::vector<int> red;
  int prim_root;  // primitive root for k = 1, unused otherwise
};

bool field_def(int q, FieldDef* out) {
  switch (q) {
    case 2: *out = {2, 1, {}, 1}; return true;
    case 3: *out = {3, 1, {}, 2}; return true;
    case 5: *out = {5, 1, {}, 2}; return true;
    case 7: *out = {7, 1, {}, 3}; return true;
    case 4: *out = {2, 2, {1, 1}, 0}; return true;
    case 8: *out = {2, 3, {1, 1, 0}, 0}; return true;
    case 9: *out = {3, 2, {1, 1}, 0}; return true;
    default: return false;
  }
}

std::vector<int> digits_of(int v, int p, int k) {
  std::vector<int> d(k, 0);
  for (int i = 0; i < k; ++i) { d[i] = v % p; v /= p; }
  return d;
}

int value_of(const std::vector<int>& d, int p) {
  int v = 0;
  for (int i = int(d.size()) - 1; i >= 0; --i) v = v * p + d[i];
  return v;
}

// Multiply digit vectors modulo the defining polynomial.
int mul_digits(int a, int b, const FieldDef& def) {
  int k = def.k, p = def.p;
  std::vector<int> da = digits_of(a, p, k), db = digits_of(b, p, k);
  std::vector<int> prod(2 * k - 1, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  for (int e = 2 * k - 2; e >= k; --e) {
    int c = prod[e];
    if (c == 0) continue;
    prod[e] = 0;
    for (int i = 0; i < k; ++i)
      prod[e - k + i] = (prod[e - k + i] + c * def.red[i]) % p;
  }
  prod.resize(k);
  return value_of(prod, p);
}

}  // namespace

FqCtx::FqCtx(int q) {
  FieldDef def;
  require(field_def(q, &def), ErrKind::Domain,
          "unsupported coefficient field size q=" + std::to_string(q));
  q_ = q; p_ = def.p; k_ = def.k;
  add_.resize(q * q); mul_.resize(q * q);
  neg_.resize(q); inv_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (k_ == 1) {
        add_[a * q + b] = uint8_t((a + b) % p_);
        mul_[a * q + b] = uint8_t((a * b) % p_);
      } else {
        std::vector<int> da = digits_of(a, p_, k_), db = digits_of(b, p_, k_);
        std::vector<int> ds(k_);
        for (int i = 0; i < k_; ++i) ds[i] = (da[i] + db[i]) % p_;
        add_[a * q + b] = uint8_t(value_of(ds, p_));
        mul_[a * q + b] = uint8_t(mul_digits(a, b, def));
      }
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (add_[a * q + b] == 0) neg_[a] = uint8_t(b);
      if (a != 0 && mul_[a * q + b] == 1) inv_[a] = uint8_t(b);
    }
  }
  gen_ = (k_ == 1) ? uint8_t(def.prim_root) : uint8_t(p_);  // class of x
  exp_.resize(q - 1);
  log_.assign(q, -1);
  uint8_t cur = 1;
  for (int e = 0; e < q - 1; ++e) {
    exp_[e] = cur;
    check_internal(log_[cur] == -1, "generator is not primitive");
    log_[cur] = e;
    cur = mul(cur, gen_);
  }
  check_internal(cur == 1, "generator order mismatch");
}

const FqCtx& FqCtx::get(int q) {
  static std::mutex mu;
  static std::map<int, const FqCtx*> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, new FqCtx(q)).first;
  return *it->second;
}

bool FqCtx::supported(int q) {
  FieldDef def;
  return field_def(q, &def);
}

uint8_t FqCtx::inv(uint8_t a) const {
  require(a != 0, ErrKind::Domain, "division by zero in F_q");
  return inv_[a];
}

uint8_t FqCtx::pow(uint8_t a, i64 e) const {
  if (a == 0) {
    require(e >= 0, ErrKind::Domain, "0^negative in F_q");
    return e == 0 ? one() : zero();
  }
  i64 ord = q_ - 1;
  i64 r = e % ord;
  if (r < 0) r += ord;
  uint8_t acc = 1, base = a;
  while (r > 0) {
    if (r & 1) acc = mul(acc, base);
    base = mul(base, base);
    r >>= 1;
  }
  return acc;
}

uint8_t FqCtx::gen_pow(i64 e) const {
  i64 ord = q_ - 1;
  i64 r = e % ord;
  if (r < 0) r += ord;
  return exp_[r];
}

int FqCtx::unit_log(uint8_t u) const {
  require(u != 0 && u < q_, ErrKind::Domain, "unit_log of non-unit");
  return log_[u];
}

uint8_t FqCtx::from_int(i64 n) const {
  i64 r = n % p_;
  if (r < 0) r += p_;
  return uint8_t(r);
}

std::string FqCtx::to_string(uint8_t a) const {
  if (k_ == 1) return std::to_string(int(a));
  std::ostringstream os;
  os << '[';
  int v = a;
  for (int i = 0; i < k_; ++i) {
    if (i) os << ',';
    os << v % p_;
    v /= p_;
  }
  os << ']';
  return os.str();
}

uint8_t FqCtx::parse(const std::string& s) const {
  require(!s.empty(), ErrKind::Malformed, "empty field element");
  if (s[0] != '[') {
    size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(s, &pos);
    } catch (...) {
      fail(ErrKind::Malformed, "bad field element '" + s + "'");
    }
    require(pos == s.size() && v >= 0, ErrKind::Malformed,
            "bad field element '" + s + "'");
    if (k_ == 1) {
      require(v < q_, ErrKind::Malformed, "field element out of range: " + s);
      return uint8_t(v);
    }
    require(v < p_, ErrKind::Malformed,
            "non-prime field element needs digit-vector form: " + s);
    return uint8_t(v);
  }
  require(s.back() == ']', ErrKind::Malformed, "bad digit vector '" + s + "'");
  std::vector<int> d;
  std::string body = s.substr(1, s.size() - 2);
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    size_t pos = 0;
    long v = std::stol(tok, &pos);
    require(pos == tok.size() && v >= 0 && v < p_, ErrKind::Malformed,
            "bad digit in '" + s + "'");
    d.push_back(int(v));
  }
  require(int(d.size()) == k_, ErrKind::Malformed,
          "digit vector length must be " + std::to_string(k_));
  return uint8_t(value_of(d, p_));
}

}  // namespace czl
