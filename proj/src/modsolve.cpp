#include "czl/modsolve.hpp"

#include <map>
#include <utility>

namespace czl {

namespace {

constexpr int kBaseDegree = 8;
constexpr int kMaxModuli = 48;
constexpr int kSingularEvidence = 6;

// x^(q^e) mod f via iterated Frobenius powering.
Fpoly frob_iter(const Fpoly& start, int e, const Fpoly& f) {
  const FqCtx& F = f.field();
  const int q = F.q();
  Fpoly r = start % f;
  for (int i = 0; i < e; ++i) {
    // r -> r^q mod f by square-and-multiply on the exponent q.
    Fpoly acc = Fpoly::one(F);
    Fpoly base = r;
    int exp = q;
    while (exp > 0) {
      if (exp & 1) acc = (acc * base) % f;
      base = (base * base) % f;
      exp >>= 1;
    }
    r = acc;
  }
  return r;
}

}  // namespace

void fpoly_xgcd(const Fpoly& a, const Fpoly& b, Fpoly* g, Fpoly* s,
                Fpoly* t) {
  const FqCtx& F = a.field();
  Fpoly r0 = a, r1 = b;
  Fpoly s0 = Fpoly::one(F), s1 = Fpoly::zero(F);
  Fpoly t0 = Fpoly::zero(F), t1 = Fpoly::one(F);
  while (!r1.is_zero()) {
    Fpoly quo, rem;
    Fpoly::divrem(r0, r1, &quo, &rem);
    Fpoly s2 = s0 - quo * s1;
    Fpoly t2 = t0 - quo * t1;
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (!r0.is_zero()) {
    uint8_t c = F.inv(r0.lc());
    r0 = r0.scaled(c);
    s0 = s0.scaled(c);
    t0 = t0.scaled(c);
  }
  *g = r0;
  *s = s0;
  *t = t0;
}

bool fpoly_irreducible(const Fpoly& f) {
  const FqCtx& F = f.field();
  const int d = f.deg();
  require(d >= 1, ErrKind::Domain, "irreducibility needs degree >= 1");
  const Fpoly x = Fpoly::x(F);
  // Rabin: x^(q^d) = x mod f, and for every prime p | d the map
  // x -> x^(q^(d/p)) fixes no proper factor.
  if (frob_iter(x, d, f) != x % f) return false;
  int rest = d;
  for (int p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    Fpoly h = frob_iter(x, d / p, f) - x;
    if (!Fpoly::gcd(h, f).is_one()) return false;
  }
  if (rest > 1) {
    Fpoly h = frob_iter(x, d / rest, f) - x;
    if (!Fpoly::gcd(h, f).is_one()) return false;
  }
  return true;
}

Fpoly solver_modulus(const FqCtx& F, int index) {
  require(index >= 0 && index < kMaxModuli, ErrKind::Domain,
          "modulus index out of range");
  thread_local std::map<std::pair<int, int>, Fpoly> cache;
  auto key = std::make_pair(F.q(), index);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const int q = F.q();
  const int d = kBaseDegree + index;
  std::vector<uint8_t> coeffs(size_t(d) + 1, 0);
  coeffs[size_t(d)] = 1;
  for (i64 n = 0;; ++n) {
    check_internal(n < (i64(1) << 40), "no irreducible found (impossible)");
    i64 rest = n;
    for (int i = 0; i < d; ++i) {
      coeffs[size_t(i)] = uint8_t(rest % q);
      rest /= q;
    }
    if (rest != 0) {
      // counter exhausted all degree-d monics; cannot happen before an
      // irreducible shows up
      check_internal(false, "modulus counter overflow");
    }
    Fpoly f(F, coeffs);
    if (fpoly_irreducible(f)) {
      cache.emplace(key, f);
      return f;
    }
  }
}

namespace {

// Arithmetic in F_q[x]/(m) with m irreducible.
struct ModArith {
  Fpoly m;

  Fpoly red(const Fpoly& p) const { return p % m; }
  Fpoly mul(const Fpoly& a, const Fpoly& b) const { return (a * b) % m; }
  Fpoly inv(const Fpoly& a) const {
    Fpoly g, s, t;
    fpoly_xgcd(a % m, m, &g, &s, &t);
    check_internal(g.is_one(), "non-invertible residue mod irreducible");
    return s % m;
  }
  // Residue of a fraction; false when the denominator vanishes mod m.
  bool rat(const RatFunc& r, Fpoly* out) const {
    Fpoly dn = red(r.den());
    if (dn.is_zero()) return false;
    *out = mul(red(r.num()), inv(dn));
    return true;
  }
};

// Row-permuted LU factorization of one matrix modulo one modulus.
struct ModLU {
  ModArith arith;
  std::vector<std::vector<Fpoly>> lu;  // L below diagonal, U on and above
  std::vector<int> perm;
  bool singular = false;

  bool factor(const RatMat& a) {
    const int n = int(a.size());
    lu.assign(size_t(n), {});
    for (int i = 0; i < n; ++i) {
      lu[size_t(i)].resize(size_t(n));
      for (int j = 0; j < n; ++j)
        if (!arith.rat(a[size_t(i)][size_t(j)], &lu[size_t(i)][size_t(j)]))
          return false;  // bad modulus for this matrix
    }
    perm.resize(size_t(n));
    for (int i = 0; i < n; ++i) perm[size_t(i)] = i;
    for (int k = 0; k < n; ++k) {
      int piv = -1;
      for (int r = k; r < n; ++r)
        if (!lu[size_t(r)][size_t(k)].is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) {
        singular = true;
        return true;  // usable as singularity evidence
      }
      std::swap(lu[size_t(k)], lu[size_t(piv)]);
      std::swap(perm[size_t(k)], perm[size_t(piv)]);
      Fpoly pivinv = arith.inv(lu[size_t(k)][size_t(k)]);
      for (int i = k + 1; i < n; ++i) {
        if (lu[size_t(i)][size_t(k)].is_zero()) continue;
        Fpoly f = arith.mul(lu[size_t(i)][size_t(k)], pivinv);
        lu[size_t(i)][size_t(k)] = f;
        for (int j = k + 1; j < n; ++j)
          lu[size_t(i)][size_t(j)] =
              lu[size_t(i)][size_t(j)] - arith.mul(f, lu[size_t(k)][size_t(j)]);
      }
    }
    return true;
  }

  // Solve with an already-reduced right-hand side.
  std::vector<Fpoly> solve(const std::vector<Fpoly>& b) const {
    const int n = int(lu.size());
    std::vector<Fpoly> y(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      Fpoly acc = b[size_t(perm[size_t(i)])];
      for (int j = 0; j < i; ++j)
        acc = acc - arith.mul(lu[size_t(i)][size_t(j)], y[size_t(j)]);
      y[size_t(i)] = arith.red(acc);
    }
    std::vector<Fpoly> x(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
      Fpoly acc = y[size_t(i)];
      for (int j = i + 1; j < n; ++j)
        acc = acc - arith.mul(lu[size_t(i)][size_t(j)], x[size_t(j)]);
      x[size_t(i)] = arith.mul(acc, arith.inv(lu[size_t(i)][size_t(i)]));
    }
    return x;
  }
};

// Balanced rational reconstruction modulo M: num/den with den monic and
// deg num + deg den < deg M.  Returns false when no candidate fits.
bool rat_reconstruct(const Fpoly& c, const Fpoly& M, RatFunc* out) {
  const FqCtx& F = M.field();
  const int nb = (M.deg() - 1) / 2;
  Fpoly r0 = M, r1 = c % M;
  if (r1.is_zero()) {
    *out = RatFunc::zero(F);
    return true;
  }
  Fpoly t0 = Fpoly::zero(F), t1 = Fpoly::one(F);
  while (r0.deg() > nb) {
    if (r1.is_zero()) return false;
    Fpoly quo, rem;
    Fpoly::divrem(r0, r1, &quo, &rem);
    Fpoly t2 = t0 - quo * t1;
    r0 = r1;
    r1 = rem;
    t0 = t1;
    t1 = t2;
  }
  if (t0.is_zero()) return false;
  if (r0.deg() + t0.deg() >= M.deg()) return false;
  *out = RatFunc(r0, t0);
  return true;
}

}  // namespace

struct ExactSolver::Impl {
  RatMat a;
  int n = 0;
  int next_index = 0;       // next tower index to try
  int singular_seen = 0;    // good moduli where the matrix was singular
  std::vector<ModLU> lus;   // factored good moduli

  const FqCtx& field() const { return a[0][0].field(); }

  void grow(int want) {
    while (int(lus.size()) < want) {
      require(next_index < kMaxModuli, ErrKind::Precision,
              "modulus tower exhausted during exact solve");
      ModLU lu;
      lu.arith.m = solver_modulus(field(), next_index++);
      if (!lu.factor(a)) continue;  // denominator hit; skip modulus
      if (lu.singular) {
        ++singular_seen;
        require(singular_seen < kSingularEvidence, ErrKind::Theorem,
                "matrix is singular (evidence modulo several independent "
                "irreducibles)");
        continue;
      }
      lus.push_back(std::move(lu));
    }
  }
};

ExactSolver::ExactSolver(RatMat a) : impl_(new Impl) {
  const int n = int(a.size());
  require(n >= 1, ErrKind::Domain, "empty linear system");
  for (const auto& row : a)
    require(int(row.size()) == n, ErrKind::Domain,
            "linear system matrix must be square");
  impl_->a = std::move(a);
  impl_->n = n;
  impl_->grow(2);
}

ExactSolver::~ExactSolver() = default;
ExactSolver::ExactSolver(ExactSolver&&) noexcept = default;
ExactSolver& ExactSolver::operator=(ExactSolver&&) noexcept = default;

int ExactSolver::size() const { return impl_->n; }

RatVec ExactSolver::solve(const RatVec& b) {
  Impl& im = *impl_;
  const int n = im.n;
  require(int(b.size()) == n, ErrKind::Domain,
          "right-hand side has wrong length");
  const FqCtx& F = im.field();

  for (int want = int(im.lus.size());; want += (want + 1) / 2 + 1) {
    im.grow(want);

    // Per-modulus solutions, skipping moduli that clash with b.
    std::vector<const ModLU*> active;
    std::vector<std::vector<Fpoly>> sols;
    for (const ModLU& lu : im.lus) {
      std::vector<Fpoly> rb(static_cast<size_t>(n));
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        ok = lu.arith.rat(b[size_t(i)], &rb[size_t(i)]);
      if (!ok) continue;
      active.push_back(&lu);
      sols.push_back(lu.solve(rb));
    }
    if (int(active.size()) < want / 2 + 1) continue;  // too many clashes

    // Coordinate-wise CRT and reconstruction.
    RatVec x(size_t(n), RatFunc::zero(F));
    bool lifted = true;
    for (int i = 0; i < n && lifted; ++i) {
      Fpoly X = sols[0][size_t(i)];
      Fpoly M = active[0]->arith.m;
      for (size_t j = 1; j < active.size(); ++j) {
        const Fpoly& mj = active[j]->arith.m;
        Fpoly g, s, t;
        fpoly_xgcd(M % mj, mj, &g, &s, &t);
        check_internal(g.is_one(), "tower moduli must be coprime");
        Fpoly delta = ((sols[j][size_t(i)] - X % mj) * (s % mj)) % mj;
        X = X + M * delta;
        M = M * mj;
      }
      lifted = rat_reconstruct(X, M, &x[size_t(i)]);
    }
    if (!lifted) continue;

    // Exact certification.
    bool good = true;
    for (int i = 0; i < n && good; ++i) {
      RatFunc acc = RatFunc::zero(F);
      for (int j = 0; j < n; ++j)
        acc = acc + im.a[size_t(i)][size_t(j)] * x[size_t(j)];
      good = (acc == b[size_t(i)]);
    }
    if (good) return x;
  }
}

RatVec solve_linear(const RatMat& a, const RatVec& b) {
  ExactSolver solver(a);
  return solver.solve(b);
}

}  // namespace czl
