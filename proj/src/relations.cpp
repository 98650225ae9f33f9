#include "czl/relations.hpp"

#include <utility>

#include "czl/carlitz.hpp"
#include "czl/series.hpp"

namespace czl {

namespace {

const FqCtx& rel_field(const BinaryRelation& rel) {
  if (!rel.part_d.empty()) return rel.part_d.begin()->first.field();
  require(!rel.part_d1.empty(), ErrKind::Domain,
          "relation has no arrays to operate on");
  return rel.part_d1.begin()->first.field();
}

// Rewriting steps never need more rounds than the number of distinct
// initial-tuple stages times the number of arrays sharing one weight;
// this generous cap only exists to turn a logic bug into a loud error.
constexpr i64 kRewriteGuard = 200000;

}  // namespace

BinaryRelation fundamental_relation(const FqCtx& F, uint8_t eps,
                                    Family fam) {
  require(eps != 0 && eps < F.q(), ErrKind::Domain,
          "character out of range");
  const int q = F.q();
  BinaryRelation rel;
  rel.family = fam;
  fs_add_term(rel.part_d, Array::singleton(F, eps, q), RatFunc::one(F));
  Array pair(F, {eps, F.one()}, {1, q - 1});
  RatFunc d1(carlitz_bracket(F, 1));
  fs_add_term(rel.part_d1, pair, d1.scaled(F.inv(eps)));
  return rel;
}

BinaryRelation apply_B_star(const BinaryRelation& rel, uint8_t sigma,
                            int v) {
  BinaryRelation out;
  out.family = rel.family;
  for (const auto& [u, c] : rel.part_d) {
    require(!u.empty(), ErrKind::Domain,
            "left extension needs nonempty arrays");
    fs_add_term(out.part_d, u.prepend(sigma, v), c);
  }
  for (const auto& [vp, b] : rel.part_d1) {
    require(vp.depth() >= 2, ErrKind::Domain,
            "left extension needs depth >= 2 in the d+1 part");
    fs_add_term(out.part_d, vp.prepend(sigma, v), b);
    const Array head = Array::singleton(vp.field(), sigma, v);
    fs_add_scaled(out.part_d, diag_product(head, vp, rel.family), b);
  }
  return out;
}

BinaryRelation apply_B_star_seq(const BinaryRelation& rel,
                                const Array& sv) {
  BinaryRelation out = rel;
  for (int i = sv.depth() - 1; i >= 0; --i)
    out = apply_B_star(out, sv.chr(i), sv.entry(i));
  return out;
}

BinaryRelation apply_C(const BinaryRelation& rel, const Array& sv) {
  require(!sv.empty(), ErrKind::Domain,
          "multiplication needs a nonempty array");
  BinaryRelation out;
  out.family = rel.family;
  for (const auto& [u, c] : rel.part_d) {
    fs_add_scaled(out.part_d, diag_product(u, sv, rel.family), c);
    fs_add_scaled(out.part_d, mixed_product(u, sv, rel.family), c);
  }
  for (const auto& [vp, b] : rel.part_d1)
    fs_add_scaled(out.part_d1, mixed_product(vp, sv, rel.family), b);
  return out;
}

BinaryRelation apply_BC(const BinaryRelation& rel, uint8_t eps) {
  const FqCtx& F = rel_field(rel);
  BinaryRelation out = apply_B_star(rel, eps, F.q());
  for (const auto& [vp, b] : rel.part_d1) {
    BinaryRelation c =
        apply_C(fundamental_relation(F, eps, rel.family), vp);
    fs_add_scaled(out.part_d, c.part_d, -b);
    fs_add_scaled(out.part_d1, c.part_d1, -b);
  }
  return out;
}

bool verify_binary_relation(const BinaryRelation& rel, int d_lo, int d_hi) {
  require(d_lo >= 0 && d_hi >= d_lo, ErrKind::Domain,
          "bad degree range");
  if (rel.part_d.empty() && rel.part_d1.empty()) return true;
  const FqCtx& F = rel_field(rel);
  for (int d = d_lo; d <= d_hi; ++d) {
    RatFunc acc = RatFunc::zero(F);
    for (const auto& [u, c] : rel.part_d)
      acc = acc + c * power_sum(d, u, false, rel.family);
    for (const auto& [v, b] : rel.part_d1)
      acc = acc + b * power_sum(d + 1, v, false, rel.family);
    if (!acc.is_zero()) return false;
  }
  return true;
}

FormalSum decompose_step(const Array& a, uint8_t eps, Family fam) {
  const FqCtx& F = a.field();
  require(!a.empty(), ErrKind::Domain, "cannot decompose the empty array");
  require(eps != 0 && eps < F.q(), ErrKind::Domain,
          "character out of range");
  const int q = F.q();
  const int n = a.depth();

  // Locate the active position k (1-based): the first entry above q, or
  // the terminal entry when it equals q and everything is at most q.
  const Tuple init = initial_tuple(a.tuple(), q);
  const bool split_needed = int(init.size()) < n;
  const int k = split_needed ? int(init.size()) + 1 : n;
  if (!split_needed)
    require(a.entry(n - 1) == q, ErrKind::Domain,
            "array is already admissible; nothing to decompose");

  // j: the last position before k whose entry is below q (0 if none).
  // Positions j+1 .. k-1 all carry the entry q.
  int j = 0;
  for (int i = k - 1; i >= 1; --i)
    if (a.entry(i - 1) < q) {
      j = i;
      break;
    }

  BinaryRelation rel;
  if (split_needed) {
    rel = fundamental_relation(F, eps, fam);
    // Multiply by the strict sum on ((eps^{-1} eps_k, eps_{k+1}, ...);
    // (s_k - q, s_{k+1}, ...)): the merged term restores a's suffix and
    // the mixed term starts the split replacement of s_k by (q, s_k - q).
    Array sv = a.tail(k).prepend(F.mul(F.inv(eps), a.chr(k - 1)),
                                 a.entry(k - 1) - q);
    rel = apply_C(rel, sv);
  } else {
    rel = fundamental_relation(F, a.chr(k - 1), fam);
  }
  for (int i = k - 1; i >= j + 1; --i) rel = apply_BC(rel, a.chr(i - 1));
  if (j >= 1) rel = apply_B_star_seq(rel, a.prefix(j));

  // Sum the relation over all degrees.  Depth >= 2 throughout part_d1
  // makes the degree-0 boundary vanish, so the value combination is just
  // both parts added together.
  FormalSum total = rel.part_d;
  for (const auto& [v, b] : rel.part_d1) {
    check_internal(v.depth() >= 2, "boundary term survived the pipeline");
    fs_add_term(total, v, b);
  }

  auto it = total.find(a);
  check_internal(it != total.end(), "pipeline lost its principal term");
  const RatFunc c0 = it->second;
  check_internal(c0 == RatFunc::one(F),
                 "principal term has unexpected coefficient");
  total.erase(it);
  return fs_scaled(total, -(c0.inv()));
}

FormalSum reduce_to_AT_symbolic(const Array& a, Family fam,
                                std::vector<std::string>* step_log) {
  require(!a.empty(), ErrKind::Domain, "cannot reduce the empty array");
  const FqCtx& F = a.field();
  FormalSum cur;
  fs_add_term(cur, a, RatFunc::one(F));
  for (i64 iter = 0;; ++iter) {
    check_internal(iter < kRewriteGuard, "rewriting guard exceeded");
    const Array* pick = nullptr;
    for (const auto& [u, c] : cur)
      if (!in_AT(u)) {
        pick = &u;
        break;
      }
    if (pick == nullptr) break;
    const Array u = *pick;
    const RatFunc cu = cur.at(u);
    cur.erase(u);
    FormalSum e = decompose_step(u, F.one(), fam);
    if (step_log != nullptr)
      step_log->push_back("rewrite {" + u.to_text() + "} into " +
                          std::to_string(e.size()) + " terms");
    fs_add_scaled(cur, e, cu);
  }
  return cur;
}

DecompCertificate reduce_to_AT(const Array& a, Family fam, i64 N) {
  require(N >= 1, ErrKind::Domain, "precision target must be >= 1");
  const FqCtx& F = a.field();
  DecompCertificate cert;
  cert.input = a;
  cert.family = fam;
  cert.basis = "AT";
  cert.coefficients = reduce_to_AT_symbolic(a, fam, &cert.step_log);

  // Family S inputs with large entries can only be summed directly up to
  // the degree cap; check at the precision actually reachable.
  const i64 M = (fam == Family::S) ? amzv_direct_precision(a, N) : N;
  cert.precision = M;
  auto value_at = [&](const Array& u, i64 prec) {
    return fam == Family::S ? amzv(u, prec) : acmpl(u, prec);
  };
  LaurentInf lhs = value_at(a, M);
  LaurentInf rhs = LaurentInf::zero_to(F, M);
  for (const auto& [u, c] : cert.coefficients)
    rhs = rhs + value_at(u, M).mul_exact(c);
  cert.residual_valuation = (lhs - rhs).valuation_lower_bound();
  return cert;
}

}  // namespace czl
