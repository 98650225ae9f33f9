#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "czl/carlitz.hpp"
#include "czl/sigma.hpp"
#include "czl/tpoly.hpp"

using namespace czl;

namespace {

template <typename Fn>
ErrKind thrown_kind(Fn&& fn) {
  try {
    fn();
  } catch (const CzlError& e) {
    return e.kind;
  }
  FAIL("expected an error");
  return ErrKind::Internal;
}

RatFunc ypoly(const FqCtx& F, std::vector<uint8_t> coeffs) {
  return RatFunc(Fpoly(F, std::move(coeffs)));
}

std::set<Tuple> support_of(const std::map<Tuple, RatFunc>& m) {
  std::set<Tuple> s;
  for (const auto& [t, c] : m) s.insert(t);
  return s;
}

}  // namespace

TEST_CASE("child parameters skip the congruent residue") {
  CHECK(sigma_children(1, 2) == std::vector<int>{0});
  CHECK(sigma_children(1, 3) == std::vector<int>{0});
  CHECK(sigma_children(5, 3) == std::vector<int>({0, 1, 3, 4}));
  CHECK(sigma_children(3, 3) == std::vector<int>({1, 2}));
  CHECK(sigma_children(4, 3) == std::vector<int>({0, 2, 3}));
  for (int q : {2, 3, 4, 5}) {
    std::vector<int> kids;
    for (int k = 1; k < q; ++k) kids.push_back(k);
    CHECK(sigma_children(q, q) == kids);
  }
  CHECK(thrown_kind([] { sigma_children(0, 3); }) == ErrKind::Domain);
}

TEST_CASE("node solutions match the hand-solved systems") {
  // m = 1 over any field: the single equation reads f_0 = C(1,0) y.
  for (int q : {2, 3, 4, 5}) {
    const FqCtx& F = FqCtx::get(q);
    const NodeSolution& n = solve_node(F, 1);
    REQUIRE(n.P.size() == 1);
    CHECK(n.P[0].is_zero());
    REQUIRE(n.edge_P.size() == 1);
    CHECK(n.edge_P.at(0) == ypoly(F, {0, 1}));
  }
  {
    const FqCtx& F = FqCtx::get(2);
    const NodeSolution& n = solve_node(F, 2);
    CHECK(n.P[0].is_zero());
    CHECK(n.P[1] == ypoly(F, {0, 0, 1}));  // y^2
    REQUIRE(n.edge_P.size() == 1);
    CHECK(n.edge_P.at(1) == ypoly(F, {0, 0, 1}));
  }
  {
    const FqCtx& F = FqCtx::get(3);
    const NodeSolution& n = solve_node(F, 2);
    CHECK(n.P[0].is_zero());
    CHECK(n.P[1].is_zero());
    REQUIRE(n.edge_P.size() == 2);
    CHECK(n.edge_P.at(0) == ypoly(F, {0, 0, 1}));   // y^2
    CHECK(n.edge_P.at(1) == ypoly(F, {0, 2}));      // -y
  }
  {
    // Characteristic 3 kills the middle binomials of (T + X)^3, so the
    // child at parameter 1 receives a zero multiplier.
    const FqCtx& F = FqCtx::get(3);
    const NodeSolution& n = solve_node(F, 3);
    CHECK(n.P[0].is_zero());
    CHECK(n.P[1].is_zero());
    CHECK(n.P[2] == ypoly(F, {0, 0, 0, 2}));  // -y^3
    REQUIRE(n.edge_P.size() == 2);
    CHECK(n.edge_P.at(1).is_zero());
    CHECK(n.edge_P.at(2) == ypoly(F, {0, 0, 0, 1}));
  }
  {
    // q = 2, m = 3: the solution leaves the polynomial ring.
    const FqCtx& F = FqCtx::get(2);
    const NodeSolution& n = solve_node(F, 3);
    const Fpoly y1(F, {1, 1});  // y + 1
    CHECK(n.P[2] == RatFunc(Fpoly(F, {0, 0, 1}), y1));
    REQUIRE(n.edge_P.size() == 2);
    CHECK(n.edge_P.at(0) == RatFunc(Fpoly(F, {0, 0, 0, 0, 1}), y1));
    CHECK(n.edge_P.at(2) == RatFunc(Fpoly(F, {0, 1}), y1));
  }
}

TEST_CASE("node solutions exist and vanish at the origin") {
  for (int q : {2, 3, 4, 5}) {
    const FqCtx& F = FqCtx::get(q);
    for (int m = 1; m <= 8; ++m) {
      const NodeSolution& n = solve_node(F, m);
      CHECK(n.m == m);
      CHECK(n.P.size() == size_t(m));
      CHECK(n.edge_P.size() == sigma_children(m, q).size());
      for (const RatFunc& s : n.P)
        if (!s.is_zero()) CHECK(y_valuation(s) >= 1);
      for (const auto& [k, e] : n.edge_P)
        if (!e.is_zero()) CHECK(y_valuation(e) >= 1);
      // Shape entries away from the q-ladder positions vanish.
      std::set<int> ladder;
      for (int i = 1; m - i * q >= 0; ++i) ladder.insert(m - i);
      for (int i = 0; i < m; ++i)
        if (!ladder.count(i)) CHECK(n.P[size_t(i)].is_zero());
    }
  }
}

TEST_CASE("leaf vectors reproduce the small closed forms") {
  {
    const FqCtx& F = FqCtx::get(3);
    const RatFunc d1(carlitz_bracket(F, 1));
    auto lv1 = sigma_leaf_vector(F, 1);
    REQUIRE(lv1.size() == 1);
    CHECK(lv1.at({2}) == -d1);

    auto lv2 = sigma_leaf_vector(F, 2);
    REQUIRE(lv2.size() == 2);
    CHECK(lv2.at({4}) == d1 * d1);
    CHECK(lv2.at({2, 2}) == -(d1 * d1));

    auto lv3 = sigma_leaf_vector(F, 3);
    REQUIRE(lv3.size() == 2);
    const RatFunc d1p5 = RatFunc(carlitz_bracket(F, 1).pow(5));
    CHECK(lv3.at({2, 2, 2}) == d1p5);
    CHECK(lv3.at({2, 4}) == -d1p5);
    CHECK(lv3.count({4, 2}) == 0);  // dead subtree
  }
  {
    const FqCtx& F = FqCtx::get(2);
    const Fpoly d1 = carlitz_bracket(F, 1);
    auto lv2 = sigma_leaf_vector(F, 2);
    REQUIRE(lv2.size() == 1);
    CHECK(lv2.at({1, 1}) == RatFunc(d1.pow(3)));

    auto lv3 = sigma_leaf_vector(F, 3);
    REQUIRE(lv3.size() == 2);
    const RatFunc cf(d1.pow(4), d1 + Fpoly::one(F));
    CHECK(lv3.at({1, 1, 1}) == cf);
    CHECK(lv3.at({3}) == cf);
  }
}

TEST_CASE("leaf supports stay inside the admissible compositions") {
  const std::map<std::pair<int, int>, std::set<Tuple>> frozen = {
      {{2, 1}, {{1}}},
      {{2, 2}, {{1, 1}}},
      {{2, 3}, {{1, 1, 1}, {3}}},
      {{2, 4}, {{1, 1, 1, 1}, {1, 3}}},
      {{2, 5}, {{1, 1, 1, 1, 1}, {1, 1, 3}, {3, 1, 1}, {5}}},
      {{2, 6},
       {{1, 1, 1, 1, 1, 1}, {1, 1, 1, 3}, {1, 3, 1, 1}, {1, 5}, {3, 1, 1, 1},
        {3, 3}}},
      {{3, 1}, {{2}}},
      {{3, 2}, {{2, 2}, {4}}},
      {{3, 3}, {{2, 2, 2}, {2, 4}}},
      {{3, 4}, {{2, 2, 2, 2}, {2, 2, 4}, {4, 2, 2}, {4, 4}}},
      {{3, 5},
       {{2, 2, 2, 2, 2}, {2, 2, 2, 4}, {2, 4, 2, 2}, {2, 4, 4}, {4, 2, 2, 2},
        {4, 2, 4}, {8, 2}, {10}}},
      {{3, 6},
       {{2, 2, 2, 2, 2, 2}, {2, 2, 2, 2, 4}, {2, 2, 4, 2, 2}, {2, 2, 4, 4},
        {2, 4, 2, 2, 2}, {2, 4, 2, 4}, {2, 8, 2}, {2, 10}, {4, 2, 2, 2, 2},
        {4, 2, 2, 4}, {4, 4, 2, 2}, {4, 4, 4}}},
  };
  for (const auto& [key, expect] : frozen) {
    const auto [q, m] = key;
    const FqCtx& F = FqCtx::get(q);
    const auto lv = sigma_leaf_vector(F, m);
    CHECK(support_of(lv) == expect);
    for (const auto& [t, c] : lv) {
      CHECK(!c.is_zero());
      CHECK(tuple_weight(t) == i64(m) * (q - 1));
      for (int e : t) {
        CHECK(e % (q - 1) == 0);
        CHECK((e / (q - 1)) % q != 0);
      }
    }
  }
}

TEST_CASE("existence follows the divisibility and character criteria") {
  for (int q : {2, 3, 4}) {
    for (i64 w = 1; w <= 8; ++w) {
      for (int e = 1; e < q; ++e) {
        const bool expect = (e == 1) && (w % (q - 1) == 0);
        if (expect && q == 3 && w > 6) continue;  // large builds elsewhere
        const SigmaOutcome o = solve_sigma_system(w, q, uint8_t(e));
        CHECK((o.kind == SigmaKind::UniqueRelation) == expect);
        CHECK(o.character == 1);
        CHECK(o.q == q);
        CHECK(o.w == w);
        if (o.kind == SigmaKind::UniqueRelation) {
          CHECK(o.pi_coefficient == RatFunc::one(FqCtx::get(q)));
          CHECK(!o.terms.empty());
        } else {
          CHECK(o.terms.empty());
        }
      }
    }
  }
}

TEST_CASE("base-weight relation is bracket times the single value") {
  for (int q : {2, 3, 4, 5}) {
    const FqCtx& F = FqCtx::get(q);
    const SigmaOutcome o = relation_coefficients(q - 1, q);
    REQUIRE(o.kind == SigmaKind::UniqueRelation);
    REQUIRE(o.terms.size() == 1);
    CHECK(o.terms.at({q - 1}) == RatFunc(carlitz_bracket(F, 1)));
    CHECK(o.clearing_factor == Fpoly::one(F));
    CHECK(o.cleared_terms.at({q - 1}) == carlitz_bracket(F, 1));
  }
}

TEST_CASE("frozen relations at small weight") {
  {
    const FqCtx& F = FqCtx::get(3);
    const RatFunc d1(carlitz_bracket(F, 1));
    const SigmaOutcome o4 = solve_sigma_system(4, 3, 1);
    REQUIRE(o4.kind == SigmaKind::UniqueRelation);
    REQUIRE(o4.terms.size() == 2);
    CHECK(o4.terms.at({2, 2}) == d1 * d1);
    CHECK(o4.terms.at({4}) == -(d1 * d1));

    const SigmaOutcome o6 = solve_sigma_system(6, 3, 1);
    REQUIRE(o6.kind == SigmaKind::UniqueRelation);
    REQUIRE(o6.terms.size() == 2);
    const RatFunc d1p5 = RatFunc(carlitz_bracket(F, 1).pow(5));
    CHECK(o6.terms.at({2, 2, 2}) == -d1p5);
    CHECK(o6.terms.at({2, 4}) == d1p5);
  }
  {
    const FqCtx& F = FqCtx::get(2);
    const Fpoly d1 = carlitz_bracket(F, 1);
    const SigmaOutcome o2 = solve_sigma_system(2, 2, 1);
    REQUIRE(o2.terms.size() == 1);
    CHECK(o2.terms.at({1, 1}) == RatFunc(d1.pow(3)));

    const SigmaOutcome o3 = relation_coefficients(3, 2);
    REQUIRE(o3.terms.size() == 2);
    const RatFunc cf(d1.pow(4), d1 + Fpoly::one(F));
    CHECK(o3.terms.at({1, 1, 1}) == cf);
    CHECK(o3.terms.at({3}) == cf);
    CHECK(o3.clearing_factor == d1 + Fpoly::one(F));
    CHECK(o3.cleared_terms.at({1, 1, 1}) == d1.pow(4));
    CHECK(o3.cleared_terms.at({3}) == d1.pow(4));
  }
}

TEST_CASE("clearing factors divide out every denominator") {
  for (const auto& [w, q] : std::vector<std::pair<i64, int>>{
           {2, 3}, {4, 3}, {6, 3}, {1, 2}, {2, 2}, {3, 2}, {4, 2}, {3, 4}}) {
    const SigmaOutcome o = relation_coefficients(w, q);
    CHECK(o.clearing_factor == o.clearing_factor.monic());
    CHECK(!o.clearing_factor.is_zero());
    for (const auto& [t, c] : o.terms) {
      const RatFunc cleared = c * RatFunc(o.clearing_factor);
      CHECK(cleared.is_poly());
      CHECK(o.cleared_terms.at(t) == cleared.num());
    }
  }
}

TEST_CASE("relations verify numerically past the requested precision") {
  CHECK(verify_unique_relation(2, 3, 110) >= 110);
  CHECK(verify_unique_relation(4, 3, 110) >= 110);
  CHECK(verify_unique_relation(6, 3, 100) >= 100);
  CHECK(verify_unique_relation(1, 2, 110) >= 110);
  CHECK(verify_unique_relation(2, 2, 110) >= 110);
  CHECK(verify_unique_relation(3, 2, 110) >= 110);
  CHECK(verify_unique_relation(4, 2, 110) >= 110);
  CHECK(verify_unique_relation(3, 4, 100) >= 100);
  CHECK(verify_unique_relation(4, 5, 80) >= 80);
}

TEST_CASE("reconstructed node values obey the theta-degree bound") {
  // The node value is X^m + sum_i P[i](T) X^i with X = t^q - theta^q and
  // T = t - t^q; after clearing the t-denominators its theta-degree is
  // at most q*m.
  for (int q : {2, 3}) {
    const FqCtx& F = FqCtx::get(q);
    const Fpoly big_t = Fpoly::x(F) - Fpoly::x(F).pow(q);
    const TPoly x_big =
        TPoly::from_tpolynomial(Fpoly::x(F).pow(q)) -
        TPoly::constant(RatFunc(Fpoly::x(F).pow(q)));
    for (int m = 1; m <= 4; ++m) {
      const NodeSolution& n = solve_node(F, m);
      // Shape coefficients as rational functions of t.
      std::vector<RatFunc> st;
      Fpoly lam = Fpoly::one(F);
      for (const RatFunc& p : n.P) {
        RatFunc s = RatFunc(p.num().compose(big_t), p.den().compose(big_t));
        const Fpoly g = Fpoly::gcd(lam, s.den());
        lam = (lam * s.den() / g).monic();
        st.push_back(s);
      }
      TPoly delta = TPoly::from_tpolynomial(lam) * x_big.pow(m);
      for (int i = 0; i < m; ++i) {
        if (st[size_t(i)].is_zero()) continue;
        const RatFunc scaled = st[size_t(i)] * RatFunc(lam);
        REQUIRE(scaled.is_poly());
        delta = delta + TPoly::from_tpolynomial(scaled.num()) * x_big.pow(i);
      }
      REQUIRE(delta.has_polynomial_coeffs());
      CHECK(delta.deg_theta() <= q * m);
    }
  }
}

TEST_CASE("solver rejects invalid arguments") {
  const FqCtx& F = FqCtx::get(3);
  CHECK(thrown_kind([&] { solve_node(F, 0); }) == ErrKind::Domain);
  CHECK(thrown_kind([&] { sigma_leaf_vector(F, 0); }) == ErrKind::Domain);
  CHECK(thrown_kind([] { solve_sigma_system(0, 3, 1); }) == ErrKind::Domain);
  CHECK(thrown_kind([] { solve_sigma_system(2, 3, 0); }) == ErrKind::Domain);
  CHECK(thrown_kind([] { solve_sigma_system(2, 3, 3); }) == ErrKind::Domain);
  CHECK(thrown_kind([] { relation_coefficients(3, 3); }) == ErrKind::Domain);
  CHECK(thrown_kind([] { relation_coefficients(5, 3); }) == ErrKind::Domain);
  CHECK(thrown_kind([] { verify_unique_relation(3, 3, 100); }) ==
        ErrKind::Domain);
  CHECK(thrown_kind([] { verify_unique_relation(2, 3, 0); }) ==
        ErrKind::Domain);
  CHECK(y_valuation(RatFunc(Fpoly(F, {0, 1}))) == 1);
  CHECK(y_valuation(RatFunc(Fpoly::one(F), Fpoly(F, {0, 0, 1}))) == -2);
  CHECK(y_valuation(RatFunc(Fpoly(F, {1, 1}))) == 0);
}
