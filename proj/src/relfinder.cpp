#include "czl/relfinder.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "czl/evaluator.hpp"
#include "czl/ratfunc.hpp"
#include "czl/series.hpp"
#include "czl/stuffle.hpp"
#include "czl/transition.hpp"

namespace czl {

namespace {

struct Window {
  i64 lo = 0;   // first exponent row
  i64 hi = 0;   // last exponent row (inclusive)
  bool empty() const { return hi < lo; }
};

// Row range on which every coefficient of every theta^j * v_i
// (0 <= j <= B) is known, and below which all of them vanish.
Window usable_window(const std::vector<LaurentInf>& values, i64 B) {
  i64 known = LaurentInf::KNOWN_INF;
  i64 low = LaurentInf::KNOWN_INF;
  i64 high_support = 0;
  for (const LaurentInf& v : values) {
    known = std::min(known, v.known_to());
    low = std::min(low, v.valuation_lower_bound());
    if (!v.is_zero_to_precision())
      high_support = std::max(high_support, v.support_end());
  }
  Window w;
  w.lo = (low == LaurentInf::KNOWN_INF) ? 0 : low - B;
  // With every value exact, rows past the stored supports are zero.
  w.hi = (known == LaurentInf::KNOWN_INF) ? high_support + B : known - B;
  if (w.hi < w.lo) w.hi = w.lo - 1;
  return w;
}

std::vector<std::vector<uint8_t>> kernel_basis_fq(
    const FqCtx& F, std::vector<std::vector<uint8_t>>& M) {
  const size_t rows = M.size();
  const size_t cols = rows ? M[0].size() : 0;
  std::vector<size_t> pivot_col;
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rows;
    for (size_t r = rank; r < rows; ++r)
      if (M[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv == rows) continue;
    std::swap(M[rank], M[piv]);
    const uint8_t inv = F.inv(M[rank][col]);
    for (size_t c = col; c < cols; ++c) M[rank][c] = F.mul(M[rank][c], inv);
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || M[r][col] == 0) continue;
      const uint8_t f = M[r][col];
      for (size_t c = col; c < cols; ++c)
        M[r][c] = F.add(M[r][c], F.neg(F.mul(f, M[rank][c])));
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<uint8_t>> basis;
  for (size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<uint8_t> vec(cols, 0);
    vec[fc] = 1;
    for (size_t r = 0; r < rank; ++r) vec[pivot_col[r]] = F.neg(M[r][fc]);
    basis.push_back(std::move(vec));
  }
  return basis;
}

i64 rational_rank(std::vector<std::vector<RatFunc>> m) {
  const size_t rows = m.size();
  if (rows == 0) return 0;
  const size_t cols = m[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rows;
    for (size_t r = rank; r < rows; ++r)
      if (!m[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    const RatFunc inv = RatFunc::one(m[rank][col].field()) / m[rank][col];
    for (size_t c = col; c < cols; ++c) m[rank][c] = m[rank][c] * inv;
    for (size_t r = rank + 1; r < rows; ++r) {
      if (m[r][col].is_zero()) continue;
      const RatFunc f = m[r][col];
      for (size_t c = col; c < cols; ++c)
        m[r][c] = m[r][c] - f * m[rank][c];
    }
    ++rank;
  }
  return i64(rank);
}

}  // namespace

std::vector<std::vector<Fpoly>> find_A_relations(
    const std::vector<LaurentInf>& values, i64 B) {
  require(!values.empty(), ErrKind::Domain, "no values to relate");
  require(B >= 0, ErrKind::Domain, "degree bound must be nonnegative");
  const FqCtx& F = values.front().field();
  for (const LaurentInf& v : values)
    require(&v.field() == &F, ErrKind::Domain,
            "values live over different fields");

  const size_t k = values.size();
  const size_t cols = k * static_cast<size_t>(B + 1);
  const Window win = usable_window(values, B);
  const i64 rows_available = win.empty() ? 0 : win.hi - win.lo + 1;
  require(rows_available >= i64(cols), ErrKind::Precision,
          "not enough known coefficients for the requested degree bound");

  std::vector<std::vector<uint8_t>> M(
      static_cast<size_t>(rows_available), std::vector<uint8_t>(cols, 0));
  for (i64 m = win.lo; m <= win.hi; ++m) {
    auto& row = M[static_cast<size_t>(m - win.lo)];
    for (size_t i = 0; i < k; ++i)
      for (i64 j = 0; j <= B; ++j)
        row[i * static_cast<size_t>(B + 1) + static_cast<size_t>(j)] =
            values[i].coeff_at(m + j);
  }

  std::vector<std::vector<Fpoly>> out;
  for (const auto& vec : kernel_basis_fq(F, M)) {
    std::vector<Fpoly> polys;
    polys.reserve(k);
    for (size_t i = 0; i < k; ++i) {
      std::vector<uint8_t> coeffs(
          vec.begin() + i64(i) * (B + 1),
          vec.begin() + i64(i + 1) * (B + 1));
      polys.emplace_back(F, std::move(coeffs));
    }
    out.push_back(std::move(polys));
  }
  return out;
}

i64 relation_residual(const std::vector<LaurentInf>& values,
                      const std::vector<Fpoly>& coeffs) {
  require(!values.empty() && values.size() == coeffs.size(), ErrKind::Domain,
          "coefficient count must match the value count");
  const FqCtx& F = values.front().field();
  i64 known = LaurentInf::KNOWN_INF;
  for (const LaurentInf& v : values) known = std::min(known, v.known_to());
  LaurentInf acc = LaurentInf::zero_to(F, known);
  for (size_t i = 0; i < values.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    acc = acc + values[i].mul_exact(RatFunc(coeffs[i]));
  }
  return acc.valuation_lower_bound();
}

i64 truncation_rank(const std::vector<LaurentInf>& values, i64 B) {
  if (values.empty()) return 0;
  require(B >= 0, ErrKind::Domain, "degree bound must be nonnegative");
  const i64 k = i64(values.size());
  const Window win = usable_window(values, 0);
  const i64 rows = win.empty() ? 0 : win.hi - win.lo + 1;
  // Keep at least half the rows beyond the unknown count: a candidate
  // combination must then vanish well past the degrees of freedom it
  // has, which screens out deep-but-finite truncation coincidences.
  i64 fit = rows / (2 * k) - 1;
  if (fit < 0) fit = rows / k - 1;  // degenerate data: feasibility only
  const i64 beff = std::min(B, fit);
  if (beff < 0) return 0;  // no usable equations: trivial lower bound
  const auto kernel = find_A_relations(values, beff);
  std::vector<std::vector<RatFunc>> rat;
  rat.reserve(kernel.size());
  for (const auto& vec : kernel) {
    std::vector<RatFunc> row;
    row.reserve(vec.size());
    for (const Fpoly& p : vec) row.emplace_back(p);
    rat.push_back(std::move(row));
  }
  return k - rational_rank(std::move(rat));
}

namespace {

void enum_compositions(int w, Tuple& cur, std::vector<Tuple>& out) {
  if (w == 0) {
    out.push_back(cur);
    return;
  }
  for (int first = 1; first <= w; ++first) {
    cur.push_back(first);
    enum_compositions(w - first, cur, out);
    cur.pop_back();
  }
}

void enum_char_vectors(const FqCtx& F, size_t depth,
                       std::vector<uint8_t>& cur,
                       std::vector<std::vector<uint8_t>>& out) {
  if (cur.size() == depth) {
    out.push_back(cur);
    return;
  }
  for (int e = 1; e < F.q(); ++e) {
    cur.push_back(uint8_t(e));
    enum_char_vectors(F, depth, cur, out);
    cur.pop_back();
  }
}

}  // namespace

DimensionCertificate dimension_certificate(i64 w, int q,
                                           const std::string& family, i64 N,
                                           i64 B) {
  require(family == "amzv" || family == "mzv", ErrKind::Domain,
          "dimension certificates cover the amzv and mzv families");
  require(w >= 1 && w <= 14, ErrKind::Domain, "weight outside limits");
  require(N >= 1 && B >= 0, ErrKind::Domain,
          "precision and degree bound must be positive");
  const FqCtx& F = FqCtx::get(q);
  const bool classical = (family == "mzv");
  require(!classical || q == 2, ErrKind::Domain,
          "classical-family certificates are computed at q = 2, where the "
          "decorated and classical spaces coincide");

  DimensionCertificate cert;
  cert.q = q;
  cert.w = w;
  cert.family = family;
  cert.precision = N;
  cert.degree_bound = B;
  cert.target = classical ? count_d(int(w), q) : count_s(int(w), q);

  // Exhaustive generators: every composition of w, every character
  // vector (only the trivial one at q = 2).
  std::vector<Tuple> tuples;
  Tuple cur;
  enum_compositions(int(w), cur, tuples);
  std::vector<Array> gens;
  for (const Tuple& t : tuples) {
    std::vector<std::vector<uint8_t>> chars;
    std::vector<uint8_t> c;
    enum_char_vectors(F, t.size(), c, chars);
    for (auto& cv : chars) gens.emplace_back(F, cv, t);
  }
  cert.generator_count = i64(gens.size());

  const std::vector<Array> basis = enum_AS(int(w), F);
  cert.basis_size = i64(basis.size());
  std::set<Array> basis_set(basis.begin(), basis.end());

  // Upper bound by exact decomposition of every generator.
  bool sweep_ok = true;
  i64 min_residual = LaurentInf::KNOWN_INF;
  for (const Array& a : gens) {
    try {
      const DecompCertificate dc = reduce_to_AS(a, Family::S, N);
      min_residual = std::min(min_residual, dc.residual_valuation);
      for (const auto& [u, ccoef] : dc.coefficients)
        if (!basis_set.count(u)) {
          sweep_ok = false;
          cert.diagnostics.push_back("decomposition of " + a.to_text() +
                                     " left the expected basis");
        }
    } catch (const CzlError& e) {
      sweep_ok = false;
      cert.diagnostics.push_back("decomposition of " + a.to_text() +
                                 " failed: " + e.what());
    }
  }
  cert.sweep_residual_min = min_residual;
  cert.upper_bound = sweep_ok ? cert.basis_size : cert.generator_count;
  if (!sweep_ok)
    cert.diagnostics.push_back(
        "upper bound falls back to the raw generator count");

  // Lower bound: truncation rank of the claimed basis values.
  std::vector<LaurentInf> basis_values;
  basis_values.reserve(basis.size());
  for (const Array& a : basis) basis_values.push_back(acmpl(a, N));
  cert.lower_bound = truncation_rank(basis_values, B);

  cert.verdict = (cert.lower_bound == cert.target &&
                  cert.upper_bound == cert.target)
                     ? "confirmed"
                     : "inconclusive";
  return cert;
}

}  // namespace czl
