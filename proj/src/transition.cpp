#include "czl/transition.hpp"

#include <map>
#include <memory>
#include <tuple>
#include <utility>

#include "czl/carlitz.hpp"
#include "czl/laurent.hpp"
#include "czl/series.hpp"

namespace czl {

namespace {

// Merge every maximal run of q-entries of an admissible array into the
// entry that closes the run; characters multiply along the run.  The
// image has no entry divisible by q.
Array merge_runs(const Array& c) {
  const FqCtx& F = c.field();
  const int q = F.q();
  const int n = c.depth();
  std::vector<uint8_t> chars;
  Tuple s;
  int i = 0;
  while (i < n) {
    int h = 0;
    uint8_t prod = F.one();
    while (i < n && c.entry(i) == q) {
      prod = F.mul(prod, c.chr(i));
      ++h;
      ++i;
    }
    check_internal(i < n, "q-run without a closing entry");
    prod = F.mul(prod, c.chr(i));
    s.push_back(h * q + c.entry(i));
    chars.push_back(prod);
    ++i;
  }
  return Array(F, std::move(chars), std::move(s));
}

// Expansion of value(src) over admissible arrays, steered through the
// admissible array c: each merged entry is split back off with the
// character c carries at that position, so the principal chain of the
// rewriting lands exactly on c.  Side terms fall to the free-character
// reducer.  `memo` caches those side reductions per family.
FormalSum steered_row(const Array& c, Family fam,
                      std::map<Array, FormalSum>& memo) {
  const FqCtx& F = c.field();
  const int q = F.q();

  std::vector<uint8_t> choices;
  for (int p = 0; p < c.depth(); ++p)
    if (c.entry(p) == q) choices.push_back(c.chr(p));

  Array cur = merge_runs(c);
  RatFunc path = RatFunc::one(F);
  std::vector<std::pair<Array, RatFunc>> sides;

  for (uint8_t chi : choices) {
    int k = 0;
    while (k < cur.depth() && cur.entry(k) <= q) ++k;
    check_internal(k < cur.depth(), "steered chain ran out of large entries");
    const Array split = cur.prefix(k)
                            .append(chi, q)
                            .append(F.mul(F.inv(chi), cur.chr(k)),
                                    cur.entry(k) - q)
                            .concat(cur.tail(k + 1));
    FormalSum e = decompose_step(cur, chi, fam);
    auto it = e.find(split);
    check_internal(it != e.end(), "steered chain lost its split term");
    for (const auto& [v, cf] : e)
      if (v != split) sides.emplace_back(v, path * cf);
    path = path * it->second;
    cur = split;
  }
  check_internal(cur == c, "steered chain missed its target");

  FormalSum row;
  fs_add_term(row, c, path);
  for (const auto& [v, cf] : sides) {
    auto mit = memo.find(v);
    if (mit == memo.end())
      mit = memo.emplace(v, reduce_to_AT_symbolic(v, fam)).first;
    fs_add_scaled(row, mit->second, cf);
  }
  return row;
}

struct CacheEntry {
  TransitionMatrix tm;
  std::map<Array, int> at_index;
  std::unique_ptr<ExactSolver> solver;  // factors mat^T
};

CacheEntry build_transition(const FqCtx& F, int w, Family fam) {
  CacheEntry entry;
  TransitionMatrix& tm = entry.tm;
  tm.w = w;
  tm.family = fam;
  tm.at = enum_AT(w, F);
  tm.as = enum_AS(w, F);
  const int n = int(tm.at.size());
  check_internal(n >= 1, "empty admissible family");

  std::map<Array, int> as_index;
  for (int i = 0; i < int(tm.as.size()); ++i) as_index.emplace(tm.as[size_t(i)], i);
  for (int i = 0; i < n; ++i) entry.at_index.emplace(tm.at[size_t(i)], i);

  tm.mat.assign(size_t(n), RatVec(size_t(n), RatFunc::zero(F)));
  tm.row_source.resize(size_t(n));
  tm.diag_sign.resize(size_t(n));

  std::map<Array, FormalSum> memo;
  for (int r = 0; r < n; ++r) {
    const Array& c = tm.at[size_t(r)];
    const Array src = merge_runs(c);
    auto sit = as_index.find(src);
    check_internal(sit != as_index.end(), "merged row source is not a source array");
    tm.row_source[size_t(r)] = sit->second;
    const int merged = c.depth() - src.depth();
    tm.diag_sign[size_t(r)] = (merged % 2 == 0) ? 1 : -1;

    FormalSum row = steered_row(c, fam, memo);
    for (const auto& [u, cf] : row) {
      check_internal(u.weight() == w && in_AT(u),
                     "row support left the admissible family");
      auto uit = entry.at_index.find(u);
      check_internal(uit != entry.at_index.end(), "row support misses the column index");
      tm.mat[size_t(r)][size_t(uit->second)] = cf;
    }
  }

  // Structure modulo D_1: polynomial entries, diagonal congruent to the
  // recorded sign, everything else congruent to zero.
  const Fpoly d1 = carlitz_bracket(F, 1);
  bool structured = true;
  for (int r = 0; r < n && structured; ++r) {
    for (int cidx = 0; cidx < n && structured; ++cidx) {
      const RatFunc& e = tm.mat[size_t(r)][size_t(cidx)];
      if (!e.is_poly()) {
        structured = false;
        break;
      }
      Fpoly rem = e.num() % d1;
      if (r == cidx) {
        const uint8_t sign =
            tm.diag_sign[size_t(r)] == 1 ? F.one() : F.neg(F.one());
        structured = rem == Fpoly::constant(F, sign);
      } else {
        structured = rem.is_zero();
      }
    }
  }
  tm.signed_perm_mod_d1 = structured;
  if (fam == Family::Si)
    check_internal(structured,
                   "transition matrix lost its signed-permutation shape");

  // Transposed matrix: the solves below are all against mat^T.  Building
  // the solver now also certifies invertibility (a singular matrix is
  // rejected with a theorem-grade error).
  RatMat mt(size_t(n), RatVec(size_t(n), RatFunc::zero(F)));
  for (int r = 0; r < n; ++r)
    for (int cidx = 0; cidx < n; ++cidx)
      mt[size_t(cidx)][size_t(r)] = tm.mat[size_t(r)][size_t(cidx)];
  entry.solver = std::make_unique<ExactSolver>(std::move(mt));
  return entry;
}

CacheEntry& cached_transition(const FqCtx& F, int w, Family fam) {
  require(w >= 1, ErrKind::Domain, "weight must be >= 1");
  thread_local std::map<std::tuple<int, int, int>, std::unique_ptr<CacheEntry>>
      cache;
  auto key = std::make_tuple(F.q(), w, int(fam));
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto built = std::make_unique<CacheEntry>(build_transition(F, w, fam));
    it = cache.emplace(key, std::move(built)).first;
  }
  return *it->second;
}

// Value cache for the numeric certificate checks: the basis values are
// shared across every reduction of the same weight.
const LaurentInf& cached_value(const Array& a, i64 N) {
  // q leads the key so arrays over different fields are never compared.
  thread_local std::map<std::tuple<int, Array, i64>, LaurentInf> cache;
  auto key = std::make_tuple(a.field().q(), a, N);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, acmpl(a, N)).first;
  return it->second;
}

}  // namespace

const TransitionMatrix& transition_AT_to_AS(const FqCtx& F, int w,
                                            Family fam) {
  return cached_transition(F, w, fam).tm;
}

RatVec transition_solve(const FqCtx& F, int w, Family fam,
                        const RatVec& r) {
  return cached_transition(F, w, fam).solver->solve(r);
}

DecompCertificate reduce_to_AS(const Array& a, Family fam, i64 N) {
  require(N >= 1, ErrKind::Domain, "precision target must be >= 1");
  require(a.depth() >= 1, ErrKind::Domain, "empty array has no reduction");
  const FqCtx& F = a.field();
  const int w = int(a.weight());

  DecompCertificate cert;
  cert.input = a;
  cert.family = fam;
  cert.basis = "AS";
  cert.precision = N;

  if (fam == Family::Si && in_AS(a)) {
    // Already a source array; the expansion is the identity.
    fs_add_term(cert.coefficients, a, RatFunc::one(F));
    cert.residual_valuation =
        (cached_value(a, N) - cached_value(a, N)).valuation_lower_bound();
    return cert;
  }

  FormalSum r = reduce_to_AT_symbolic(a, fam, &cert.step_log);

  // The basis change always runs through the Si-family matrix: its rows
  // are identities among the admissible-array values, which both families
  // share, so family-S expansions transport across it unchanged.
  CacheEntry& entry = cached_transition(F, w, Family::Si);
  const TransitionMatrix& tm = entry.tm;
  const int n = int(tm.at.size());

  RatVec rvec(size_t(n), RatFunc::zero(F));
  for (const auto& [u, cf] : r) {
    auto it = entry.at_index.find(u);
    check_internal(it != entry.at_index.end(),
                   "reduction support misses the transition index");
    rvec[size_t(it->second)] = cf;
  }
  RatVec y = entry.solver->solve(rvec);
  cert.step_log.push_back(
      "change basis onto the source family: solve the " + std::to_string(n) +
      "x" + std::to_string(n) + " transition system");

  for (int row = 0; row < n; ++row) {
    if (y[size_t(row)] == RatFunc::zero(F)) continue;
    fs_add_term(cert.coefficients, tm.as[size_t(tm.row_source[size_t(row)])],
                y[size_t(row)]);
  }

  // Numeric check.  Family Si compares the input value directly; family S
  // compares its admissible-array expansion (the two sides then differ by
  // the transition identities, which is exactly what gets checked).
  LaurentInf lhs = LaurentInf::zero_to(F, N);
  if (fam == Family::Si) {
    lhs = cached_value(a, N);
  } else {
    for (const auto& [u, cf] : r) lhs = lhs + cached_value(u, N).mul_exact(cf);
  }
  LaurentInf rhs = LaurentInf::zero_to(F, N);
  for (const auto& [b, cf] : cert.coefficients)
    rhs = rhs + cached_value(b, N).mul_exact(cf);
  cert.residual_valuation = (lhs - rhs).valuation_lower_bound();
  return cert;
}

}  // namespace czl
