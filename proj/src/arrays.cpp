#include "czl/arrays.hpp"

#include <algorithm>
#include <sstream>

namespace czl {

i64 tuple_weight(const Tuple& s) {
  i64 w = 0;
  for (int v : s) w += v;
  return w;
}

std::string tuple_to_text(const Tuple& s) {
  std::ostringstream os;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) os << ",";
    os << s[i];
  }
  return os.str();
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

i64 parse_int(const std::string& tok) {
  require(!tok.empty(), ErrKind::Malformed, "empty integer token");
  size_t pos = 0;
  i64 v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    fail(ErrKind::Malformed, "bad integer token '" + tok + "'");
  }
  require(pos == tok.size(), ErrKind::Malformed,
          "bad integer token '" + tok + "'");
  return v;
}

}  // namespace

Tuple tuple_parse(const std::string& text) {
  std::string trimmed;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
  if (trimmed.empty()) return {};
  Tuple s;
  for (const std::string& tok : split(trimmed, ',')) {
    i64 v = parse_int(tok);
    require(v >= 1 && v <= 1000000, ErrKind::Malformed,
            "tuple entries must be positive integers");
    s.push_back(int(v));
  }
  return s;
}

Tuple tuple_repeat(int val, int m) {
  check_internal(m >= 0, "negative repeat count");
  return Tuple(size_t(m), val);
}

Tuple initial_tuple(const Tuple& s, int q) {
  Tuple r;
  for (int v : s) {
    if (v > q) break;
    r.push_back(v);
  }
  return r;
}

Tuple t_transform(const Tuple& s, int i) {
  require(i >= 1, ErrKind::Domain, "t_transform index must be >= 1");
  Tuple r;
  i64 head = 0;
  for (int j = 0; j < i && j < int(s.size()); ++j) head += s[j];
  r.push_back(int(head));
  for (int j = i; j < int(s.size()); ++j) r.push_back(s[j]);
  return r;
}

bool is_k_admissible(const Tuple& s, int k, int q) {
  require(k >= 1, ErrKind::Domain, "admissibility index must be >= 1");
  for (int j = 0; j < k && j < int(s.size()); ++j)
    if (s[j] > q) return false;
  // Excluded shape: the whole tuple has depth r <= k, entries <= q, and its
  // last entry equals q.  (The prefix bound is already established above
  // when r <= k.)
  if (!s.empty() && int(s.size()) <= k && s.back() == q) return false;
  return true;
}

bool in_J(const Tuple& s, int q) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] > q) return false;
    if (i + 1 == s.size() && s[i] == q) return false;
  }
  return true;
}

bool in_Jprime(const Tuple& s, int q) {
  for (int v : s)
    if (v % q == 0) return false;
  return true;
}

namespace {

constexpr int kEnumWeightCap = 14;

void enum_compositions(int w, int maxpart, bool skip_q_multiples, int q,
                       Tuple& cur, std::vector<Tuple>& out) {
  if (w == 0) {
    out.push_back(cur);
    return;
  }
  for (int first = 1; first <= std::min(w, maxpart); ++first) {
    if (skip_q_multiples && first % q == 0) continue;
    cur.push_back(first);
    enum_compositions(w - first, maxpart, skip_q_multiples, q, cur, out);
    cur.pop_back();
  }
}

void check_enum_args(int w, int q) {
  require(FqCtx::supported(q), ErrKind::Domain, "unsupported field size");
  require(w >= 1, ErrKind::Domain, "enumeration weight must be >= 1");
  require(w <= kEnumWeightCap, ErrKind::Resource,
          "enumeration weight cap exceeded");
}

}  // namespace

std::vector<Tuple> enum_J(int w, int q) {
  check_enum_args(w, q);
  std::vector<Tuple> all, out;
  Tuple cur;
  enum_compositions(w, q, false, q, cur, all);
  for (auto& s : all)
    if (s.back() < q) out.push_back(std::move(s));
  return out;
}

std::vector<Tuple> enum_Jprime(int w, int q) {
  check_enum_args(w, q);
  std::vector<Tuple> out;
  Tuple cur;
  enum_compositions(w, w, true, q, cur, out);
  return out;
}

Tuple iota(const Tuple& s, int q) {
  Tuple r;
  for (int v : s) {
    require(v % q != 0, ErrKind::Domain,
            "run-splitting needs entries not divisible by q");
    int h = v / q;
    for (int j = 0; j < h; ++j) r.push_back(q);
    r.push_back(v % q);
  }
  return r;
}

Tuple iota_inv(const Tuple& s, int q) {
  require(in_J(s, q), ErrKind::Domain, "run-merging needs a tuple in J");
  Tuple r;
  int h = 0;
  for (int v : s) {
    if (v == q) {
      ++h;
    } else {
      r.push_back(h * q + v);
      h = 0;
    }
  }
  check_internal(h == 0, "trailing run of q entries");
  return r;
}

Array::Array(const FqCtx& F, std::vector<uint8_t> chars, Tuple s)
    : F_(&F), eps_(std::move(chars)), s_(std::move(s)) {
  require(eps_.size() == s_.size(), ErrKind::Malformed,
          "array needs one character per entry");
  for (int v : s_)
    require(v >= 1, ErrKind::Malformed, "array entries must be positive");
  for (uint8_t e : eps_)
    require(e != 0 && e < F.q(), ErrKind::Malformed,
            "array characters must be nonzero field elements");
}

Array Array::trivial(const FqCtx& F, Tuple s) {
  std::vector<uint8_t> chars(s.size(), F.one());
  return Array(F, std::move(chars), std::move(s));
}

Array Array::singleton(const FqCtx& F, uint8_t chr, int entry) {
  return Array(F, {chr}, {entry});
}

const FqCtx& Array::field() const {
  check_internal(F_ != nullptr, "array without field context");
  return *F_;
}

int Array::entry(int i) const {
  check_internal(i >= 0 && i < depth(), "array entry index out of range");
  return s_[size_t(i)];
}

uint8_t Array::chr(int i) const {
  check_internal(i >= 0 && i < depth(), "array character index out of range");
  return eps_[size_t(i)];
}

uint8_t Array::chi() const {
  const FqCtx& F = field();
  uint8_t r = F.one();
  for (uint8_t e : eps_) r = F.mul(r, e);
  return r;
}

bool Array::trivial_chars() const {
  for (uint8_t e : eps_)
    if (e != field().one()) return false;
  return true;
}

Array Array::prepend(uint8_t chr, int entry) const {
  Array r(field());
  r.eps_.reserve(eps_.size() + 1);
  r.s_.reserve(s_.size() + 1);
  r.eps_.push_back(chr);
  r.s_.push_back(entry);
  r.eps_.insert(r.eps_.end(), eps_.begin(), eps_.end());
  r.s_.insert(r.s_.end(), s_.begin(), s_.end());
  require(chr != 0 && chr < field().q() && entry >= 1, ErrKind::Malformed,
          "bad prepended array entry");
  return r;
}

Array Array::append(uint8_t chr, int entry) const {
  Array r = *this;
  require(chr != 0 && chr < field().q() && entry >= 1, ErrKind::Malformed,
          "bad appended array entry");
  r.eps_.push_back(chr);
  r.s_.push_back(entry);
  return r;
}

Array Array::tail(int i) const {
  check_internal(i >= 0 && i <= depth(), "tail index out of range");
  Array r(field());
  r.eps_.assign(eps_.begin() + i, eps_.end());
  r.s_.assign(s_.begin() + i, s_.end());
  return r;
}

Array Array::prefix(int i) const {
  check_internal(i >= 0 && i <= depth(), "prefix index out of range");
  Array r(field());
  r.eps_.assign(eps_.begin(), eps_.begin() + i);
  r.s_.assign(s_.begin(), s_.begin() + i);
  return r;
}

Array Array::concat(const Array& o) const {
  check_internal(&field() == &o.field(), "field mismatch");
  Array r = *this;
  r.eps_.insert(r.eps_.end(), o.eps_.begin(), o.eps_.end());
  r.s_.insert(r.s_.end(), o.s_.begin(), o.s_.end());
  return r;
}

std::string Array::to_text() const {
  std::ostringstream os;
  os << tuple_to_text(s_) << ";";
  const FqCtx& F = field();
  for (size_t i = 0; i < eps_.size(); ++i) {
    if (i) os << ",";
    os << F.unit_log(eps_[i]);
  }
  return os.str();
}

Array Array::parse(const FqCtx& F, const std::string& text) {
  std::string trimmed;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
  size_t semi = trimmed.find(';');
  Tuple s = tuple_parse(trimmed.substr(0, semi));
  std::vector<uint8_t> chars;
  if (semi == std::string::npos) {
    chars.assign(s.size(), F.one());
  } else {
    std::string block = trimmed.substr(semi + 1);
    if (block.empty()) {
      require(s.empty(), ErrKind::Malformed,
              "array text is missing character exponents");
    } else {
      for (const std::string& tok : split(block, ',')) {
        i64 e = parse_int(tok);
        require(e >= 0, ErrKind::Malformed,
                "character exponents must be non-negative");
        chars.push_back(F.gen_pow(e));
      }
    }
  }
  return Array(F, std::move(chars), std::move(s));
}

bool Array::operator==(const Array& o) const {
  return s_ == o.s_ && eps_ == o.eps_;
}

bool Array::operator<(const Array& o) const {
  if (s_ != o.s_)
    return std::lexicographical_compare(s_.begin(), s_.end(), o.s_.begin(),
                                        o.s_.end());
  const FqCtx& F = field();
  for (size_t i = 0; i < eps_.size(); ++i) {
    i64 ea = F.unit_log(eps_[i]), eb = F.unit_log(o.eps_[i]);
    if (ea != eb) return ea < eb;
  }
  return false;
}

Array array_add(const Array& a, const Array& b) {
  const FqCtx& F = a.field();
  check_internal(&F == &b.field(), "field mismatch");
  int d = std::max(a.depth(), b.depth());
  std::vector<uint8_t> chars;
  Tuple s;
  for (int i = 0; i < d; ++i) {
    uint8_t ca = i < a.depth() ? a.chr(i) : F.one();
    uint8_t cb = i < b.depth() ? b.chr(i) : F.one();
    int sa = i < a.depth() ? a.entry(i) : 0;
    int sb = i < b.depth() ? b.entry(i) : 0;
    chars.push_back(F.mul(ca, cb));
    s.push_back(sa + sb);
  }
  return Array(F, std::move(chars), std::move(s));
}

bool array_leq(const Array& a, const Array& b) {
  const FqCtx& F = a.field();
  check_internal(&F == &b.field(), "field mismatch");
  if (a.chi() != b.chi()) return false;
  if (a.weight() != b.weight()) return false;
  int d = std::max(a.depth(), b.depth());
  i64 pa = 0, pb = 0;
  for (int i = 0; i < d; ++i) {
    pa += i < a.depth() ? a.entry(i) : 0;
    pb += i < b.depth() ? b.entry(i) : 0;
    if (pa > pb) return false;
  }
  return true;
}

namespace {

// All arrays over the given tuples, characters free except where freeze
// returns true (those positions carry the trivial character).  Tuples are
// consumed in order; character exponent vectors run in lexicographic order.
template <typename Freeze>
std::vector<Array> arrays_over(const std::vector<Tuple>& tuples,
                               const FqCtx& F, Freeze freeze) {
  std::vector<Array> out;
  for (const Tuple& s : tuples) {
    int n = int(s.size());
    std::vector<int> exps(size_t(n), 0);
    std::vector<bool> frozen(size_t(n), false);
    for (int i = 0; i < n; ++i) frozen[size_t(i)] = freeze(s[size_t(i)]);
    while (true) {
      auto chars = std::vector<uint8_t>(size_t(n), 0);
      for (int i = 0; i < n; ++i) chars[size_t(i)] = F.gen_pow(exps[size_t(i)]);
      out.push_back(Array(F, std::move(chars), s));
      int i = n - 1;
      while (i >= 0 && (frozen[size_t(i)] || exps[size_t(i)] == F.q() - 2))
        --i;
      if (i < 0) break;
      ++exps[size_t(i)];
      for (int j = i + 1; j < n; ++j)
        if (!frozen[size_t(j)]) exps[size_t(j)] = 0;
    }
  }
  return out;
}

}  // namespace

std::vector<Array> enum_AT(int w, const FqCtx& F) {
  return arrays_over(enum_J(w, F.q()), F, [](int) { return false; });
}

std::vector<Array> enum_AS(int w, const FqCtx& F) {
  return arrays_over(enum_Jprime(w, F.q()), F, [](int) { return false; });
}

std::vector<Array> enum_AJ(int w, const FqCtx& F) { return enum_AS(w, F); }

std::vector<Array> enum_S(int w, const FqCtx& F) {
  return arrays_over(enum_Jprime(w, F.q()), F, [](int) { return true; });
}

std::vector<Array> enum_AJ1(int w, const FqCtx& F) {
  int q = F.q();
  return arrays_over(enum_J(w, q), F, [q](int v) { return v == q; });
}

bool in_AT(const Array& a) { return in_J(a.tuple(), a.field().q()); }

bool in_AS(const Array& a) { return in_Jprime(a.tuple(), a.field().q()); }

bool in_AJ1(const Array& a) {
  const FqCtx& F = a.field();
  if (!in_J(a.tuple(), F.q())) return false;
  for (int i = 0; i < a.depth(); ++i)
    if (a.entry(i) == F.q() && a.chr(i) != F.one()) return false;
  return true;
}

Array phi(const Array& a) {
  const FqCtx& F = a.field();
  require(in_AS(a), ErrKind::Domain,
          "run-splitting needs entries not divisible by q");
  int q = F.q();
  std::vector<uint8_t> chars;
  Tuple s;
  for (int i = 0; i < a.depth(); ++i) {
    int h = a.entry(i) / q;
    for (int j = 0; j < h; ++j) {
      chars.push_back(F.one());
      s.push_back(q);
    }
    chars.push_back(a.chr(i));
    s.push_back(a.entry(i) % q);
  }
  return Array(F, std::move(chars), std::move(s));
}

Array phi_inv(const Array& a) {
  const FqCtx& F = a.field();
  require(in_AJ1(a), ErrKind::Domain,
          "run-merging needs a tuple in J with trivial characters on q");
  int q = F.q();
  std::vector<uint8_t> chars;
  Tuple s;
  int h = 0;
  for (int i = 0; i < a.depth(); ++i) {
    if (a.entry(i) == q) {
      ++h;
    } else {
      chars.push_back(a.chr(i));
      s.push_back(h * q + a.entry(i));
      h = 0;
    }
  }
  check_internal(h == 0, "trailing run of q entries");
  return Array(F, std::move(chars), std::move(s));
}

}  // namespace czl
