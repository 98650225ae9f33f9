#include "czl/sigma.hpp"

#include <algorithm>
#include <utility>

#include "czl/carlitz.hpp"
#include "czl/laurent.hpp"
#include "czl/modsolve.hpp"
#include "czl/relations.hpp"
#include "czl/series.hpp"
#include "czl/stuffle.hpp"
#include "czl/transition.hpp"

namespace czl {

std::vector<int> sigma_children(int m, int q) {
  require(m >= 1, ErrKind::Domain, "node parameter must be positive");
  require(q >= 2, ErrKind::Domain, "field size must be at least 2");
  std::vector<int> out;
  for (int k = 0; k < m; ++k)
    if (k % q != m % q) out.push_back(k);
  return out;
}

i64 y_valuation(const RatFunc& r) {
  check_internal(!r.is_zero(), "order of vanishing of the zero function");
  return i64(r.num().x_order()) - i64(r.den().x_order());
}

namespace {

// Binomial coefficient C(n, k) reduced into the prime subfield.
uint8_t binom_mod(const FqCtx& F, int n, int k) {
  if (k < 0 || k > n) return 0;
  const i64 p = F.p();
  std::vector<i64> row(static_cast<size_t>(n) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j >= 1; --j)
      row[static_cast<size_t>(j)] =
          (row[static_cast<size_t>(j)] + row[static_cast<size_t>(j) - 1]) % p;
  return F.from_int(row[static_cast<size_t>(k)]);
}

// Substitute y -> x - x^q into a rational function of y.
RatFunc substitute_frobenius_difference(const RatFunc& r) {
  const FqCtx& F = r.field();
  std::vector<uint8_t> tc(static_cast<size_t>(F.q()) + 1, 0);
  tc[1] = 1;
  tc[static_cast<size_t>(F.q())] = F.neg(1);
  const Fpoly big_t(F, tc);
  return RatFunc(r.num().compose(big_t), r.den().compose(big_t));
}

}  // namespace

const NodeSolution& solve_node(const FqCtx& F, int m) {
  require(m >= 1, ErrKind::Domain, "node parameter must be positive");
  thread_local std::map<std::pair<int, int>, NodeSolution> cache;
  const auto key = std::make_pair(F.q(), m);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const int q = F.q();
  const std::vector<int> kids = sigma_children(m, q);
  for (int k : kids)
    if (k >= 1) solve_node(F, k);

  // One equation per power X^j, j = 0..m-1, in the unknowns f_0..f_{m-1}
  // (f_m is normalized to 1 and moved to the right-hand side).  Child
  // parameters enter through their own shape coefficients; the remaining
  // unknowns are this node's shape coefficients, whose columns pick up
  // binomial terms from expanding (T + X)^(m-iq).
  const Fpoly y = Fpoly::x(F);
  RatMat M(static_cast<size_t>(m),
           RatVec(static_cast<size_t>(m), RatFunc::zero(F)));
  RatVec b(static_cast<size_t>(m), RatFunc::zero(F));
  for (int j = 0; j < m; ++j) {
    b[static_cast<size_t>(j)] =
        RatFunc(y.pow(m - j).scaled(binom_mod(F, m, j)));
    for (int k = 0; k < m; ++k) {
      RatFunc v = RatFunc::zero(F);
      if (k % q != m % q) {
        if (j == k) v = v + RatFunc::one(F);
        if (j < k) v = v + solve_node(F, k).P[static_cast<size_t>(j)];
      } else {
        const int i = (m - k) / q;
        if (j == m - i) v = v + RatFunc::one(F);
        if (k >= j) v = v - RatFunc(y.pow(k - j).scaled(binom_mod(F, k, j)));
      }
      M[static_cast<size_t>(j)][static_cast<size_t>(k)] = v;
    }
  }

  const RatVec x = solve_linear(M, b);
  NodeSolution sol;
  sol.m = m;
  sol.P.assign(static_cast<size_t>(m), RatFunc::zero(F));
  for (int i = 1; m - i * q >= 0; ++i)
    sol.P[static_cast<size_t>(m - i)] = x[static_cast<size_t>(m - i * q)];
  for (int k : kids) sol.edge_P[k] = x[static_cast<size_t>(k)];
  for (const RatFunc& e : x)
    if (!e.is_zero())
      check_internal(y_valuation(e) >= 1,
                     "node solution does not vanish at the origin");
  return cache.emplace(key, std::move(sol)).first->second;
}

namespace {

void collect_leaves(const FqCtx& F, int n, Tuple& prefix, const RatFunc& acc,
                    std::map<Tuple, RatFunc>& out) {
  const int q = F.q();
  const NodeSolution& node = solve_node(F, n);
  for (const auto& [k, mult] : node.edge_P) {
    const RatFunc next = acc * mult;
    if (next.is_zero()) continue;  // dead subtree
    prefix.push_back((n - k) * (q - 1));
    if (k == 0) {
      out.emplace(prefix, substitute_frobenius_difference(next));
    } else {
      collect_leaves(F, k, prefix, next, out);
    }
    prefix.pop_back();
  }
}

}  // namespace

std::map<Tuple, RatFunc> sigma_leaf_vector(const FqCtx& F, int m) {
  require(m >= 1, ErrKind::Domain, "node parameter must be positive");
  std::map<Tuple, RatFunc> out;
  Tuple prefix;
  collect_leaves(F, m, prefix, RatFunc::one(F), out);
  check_internal(!out.empty(), "relation tree has no surviving leaf");
  return out;
}

namespace {

// Rewrite an arbitrary trivial-character array as a combination of the
// weight-w source basis, entirely by exact symbolic operations.
FormalSum expand_over_source_basis(const FqCtx& F, const Array& u,
                                   const RatFunc& scale) {
  FormalSum out;
  if (in_AS(u)) {
    fs_add_term(out, u, scale);
    return out;
  }
  const int w = int(u.weight());
  const FormalSum r = reduce_to_AT_symbolic(u, Family::Si);
  const TransitionMatrix& tm = transition_AT_to_AS(F, w, Family::Si);
  std::map<Array, size_t> index;
  for (size_t i = 0; i < tm.at.size(); ++i) index.emplace(tm.at[i], i);
  RatVec rhs(tm.at.size(), RatFunc::zero(F));
  for (const auto& [v, cv] : r) {
    const auto it = index.find(v);
    check_internal(it != index.end(), "rewrite left the expected index set");
    rhs[it->second] = cv;
  }
  const RatVec sol = transition_solve(F, w, Family::Si, rhs);
  for (size_t row = 0; row < sol.size(); ++row)
    if (!sol[row].is_zero())
      fs_add_term(out, tm.as[static_cast<size_t>(tm.row_source[row])],
                  sol[row] * scale);
  return out;
}

}  // namespace

SigmaOutcome solve_sigma_system(i64 w, int q, uint8_t eps) {
  const FqCtx& F = FqCtx::get(q);
  require(w >= 1, ErrKind::Domain, "weight must be positive");
  require(eps >= 1 && eps < q, ErrKind::Domain,
          "character must be a nonzero field element");

  SigmaOutcome out;
  out.q = q;
  out.w = w;
  out.character = 1;
  out.pi_coefficient = RatFunc::one(F);
  out.clearing_factor = Fpoly::one(F);
  if (eps != 1 || w % (q - 1) != 0) {
    out.kind = SigmaKind::NoRelation;
    return out;
  }
  const int m = int(w / (q - 1));

  // Tree side: solve the node systems and accumulate root-to-leaf
  // coefficients.
  const std::map<Tuple, RatFunc> leaf = sigma_leaf_vector(F, m);

  // Witness side: expand Li(q-1)^m over the weight-w source basis by
  // repeated stuffle products followed by basis reduction.  Since
  // pi~^(q-1) = -D_1 * Li(q-1), this expansion yields the relation
  // directly and pins its overall scalar.
  const Array base = Array::trivial(F, Tuple{q - 1});
  FormalSum expanded;
  fs_add_term(expanded, base, RatFunc::one(F));
  for (int step = 1; step < m; ++step) {
    FormalSum next;
    for (const auto& [u, c] : expanded)
      fs_add_scaled(next, value_product(u, base, Family::Si), c);
    expanded = std::move(next);
  }
  FormalSum combo;
  for (const auto& [u, c] : expanded)
    fs_add_scaled(combo, expand_over_source_basis(F, u, RatFunc::one(F)), c);

  // pi~^w = (-D_1)^m Li(q-1)^m, so the relation is
  //   pi~^w - (-D_1)^m * combo = 0.
  const Fpoly d1 = carlitz_bracket(F, 1);
  RatFunc minus_pow = RatFunc::constant(F, F.from_int(-1));  // -(-D_1)^m
  for (int i = 0; i < m; ++i) minus_pow = minus_pow * RatFunc(-d1);
  for (const auto& [u, c] : combo) {
    check_internal(u.trivial_chars(),
                   "relation term carries a nontrivial character");
    const RatFunc term = minus_pow * c;
    if (!term.is_zero()) out.terms.emplace(u.tuple(), term);
  }

  // Cross-check: the witness coefficients must be proportional to the
  // tree's leaf coefficients.
  check_internal(out.terms.size() == leaf.size(),
                 "tree and witness supports differ in size");
  for (const auto& [tpl, a] : leaf)
    check_internal(out.terms.count(tpl) == 1,
                   "tree and witness supports differ");
  const RatFunc lambda =
      out.terms.begin()->second / leaf.begin()->second;
  check_internal(!lambda.is_zero(), "degenerate witness scalar");
  for (const auto& [tpl, a] : leaf)
    check_internal(a * lambda == out.terms.at(tpl),
                   "tree and witness coefficients are not proportional");

  out.kind = SigmaKind::UniqueRelation;
  return out;
}

SigmaOutcome relation_coefficients(i64 w, int q) {
  SigmaOutcome out = solve_sigma_system(w, q, 1);
  require(out.kind == SigmaKind::UniqueRelation, ErrKind::Domain,
          "no relation exists at this weight");
  const FqCtx& F = FqCtx::get(q);
  Fpoly clearing = Fpoly::one(F);
  for (const auto& [tpl, c] : out.terms) {
    const Fpoly g = Fpoly::gcd(clearing, c.den());
    clearing = (clearing * c.den() / g).monic();
  }
  out.clearing_factor = clearing;
  for (const auto& [tpl, c] : out.terms) {
    const RatFunc cleared = c * RatFunc(clearing);
    check_internal(cleared.is_poly(), "clearing factor failed to clear");
    out.cleared_terms.emplace(tpl, cleared.num());
  }
  return out;
}

i64 verify_unique_relation(i64 w, int q, i64 N) {
  require(N >= 1, ErrKind::Domain, "precision must be positive");
  const SigmaOutcome rel = relation_coefficients(w, q);
  const FqCtx& F = FqCtx::get(q);
  LaurentInf acc = carlitz_pi_power(F, w, N);
  for (const auto& [tpl, c] : rel.terms) {
    const i64 drop =
        std::max<i64>(0, i64(c.num().deg()) - i64(c.den().deg()));
    const Array u = Array::trivial(F, tpl);
    acc = acc + acmpl(u, N + drop).mul_exact(c);
  }
  return acc.valuation_lower_bound();
}

}  // namespace czl
