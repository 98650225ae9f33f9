#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "czl/arrays.hpp"

using namespace czl;

TEST_CASE("initial tuple") {
  CHECK(initial_tuple({1, 3, 4, 2}, 3) == Tuple{1, 3});
  CHECK(initial_tuple({4, 1}, 3) == Tuple{});       // first entry q+1
  CHECK(initial_tuple({1, 2}, 3) == Tuple{1, 2});
  CHECK(initial_tuple({}, 3) == Tuple{});
}

TEST_CASE("partial-sum transform") {
  CHECK(t_transform({1, 2, 3}, 2) == Tuple{3, 3});
  CHECK(t_transform({5}, 1) == Tuple{5});
  CHECK(t_transform({1, 2}, 5) == Tuple{3});  // padding zeros beyond depth
  // Summation preserves the entrywise order of partial sums.
  Tuple a = t_transform({1, 3}, 1), b = t_transform({2, 2}, 1);
  CHECK(a[0] <= b[0]);
}

TEST_CASE("k-admissibility") {
  int q = 3;
  CHECK_FALSE(is_k_admissible({q}, 1, q));
  CHECK(is_k_admissible({1, q - 1}, 2, q));
  CHECK_FALSE(is_k_admissible({q + 1}, 1, q));
  CHECK(is_k_admissible({1, 2}, 5, q));
  CHECK_FALSE(is_k_admissible({1, 3}, 2, q));   // depth 2 <= k, ends in q
  CHECK(is_k_admissible({1, 3}, 1, q));         // excluded shape needs r <= k
  CHECK(is_k_admissible({3, 1}, 2, q));
  CHECK_FALSE(is_k_admissible({3, 4}, 2, q));   // s_2 > q
}

TEST_CASE("index set enumerations") {
  // Compositions of 4 with no part divisible by 3, in lexicographic order.
  std::vector<Tuple> jp = enum_Jprime(4, 3);
  std::vector<Tuple> expect = {{1, 1, 1, 1}, {1, 1, 2}, {1, 2, 1},
                               {2, 1, 1},    {2, 2},    {4}};
  CHECK(jp == expect);
  // J and J' are in bijection, so sizes match for every weight.
  for (int q : {2, 3, 4}) {
    for (int w = 1; w <= 8; ++w) {
      std::vector<Tuple> J = enum_J(w, q), Jp = enum_Jprime(w, q);
      CHECK(J.size() == Jp.size());
      for (const Tuple& s : J) CHECK(in_J(s, q));
      for (const Tuple& s : Jp) CHECK(in_Jprime(s, q));
      CHECK(std::is_sorted(J.begin(), J.end()));
      CHECK(std::adjacent_find(J.begin(), J.end()) == J.end());
    }
  }
}

TEST_CASE("run splitting is a bijection between the index sets") {
  CHECK(iota({4, 1}, 3) == Tuple{3, 1, 1});
  CHECK(iota({2}, 3) == Tuple{2});
  for (int q : {2, 3}) {
    for (int w = 1; w <= 8; ++w) {
      std::vector<Tuple> Jp = enum_Jprime(w, q);
      std::set<Tuple> image;
      for (const Tuple& s : Jp) {
        Tuple t = iota(s, q);
        CHECK(in_J(t, q));
        CHECK(iota_inv(t, q) == s);
        image.insert(t);
      }
      std::vector<Tuple> J = enum_J(w, q);
      CHECK(image.size() == J.size());  // injective onto J
    }
  }
  CHECK_THROWS_AS((void)iota({3, 1}, 3), CzlError);
}

TEST_CASE("array construction and text round trip") {
  const FqCtx& F = FqCtx::get(3);
  Array a(F, {2, 1}, {1, 3});
  CHECK(a.depth() == 2);
  CHECK(a.weight() == 4);
  CHECK(a.chi() == 2);
  CHECK_FALSE(a.trivial_chars());
  CHECK(a.to_text() == "1,3;1,0");  // 2 = g^1 over F_3
  CHECK(Array::parse(F, a.to_text()) == a);
  CHECK(Array::parse(F, "1,3") == Array::trivial(F, {1, 3}));
  CHECK(Array::parse(F, " 1 , 3 ; 1 , 0 ") == a);
  CHECK_THROWS_AS((void)Array::parse(F, "1,0;0,0"), CzlError);
  CHECK_THROWS_AS((void)Array(F, {0}, {1}), CzlError);
  CHECK_THROWS_AS((void)Array(F, {1}, {1, 2}), CzlError);
}

TEST_CASE("array addition and order") {
  const FqCtx& F = FqCtx::get(3);
  Array a = Array::singleton(F, 2, 2);
  Array b = Array::singleton(F, 2, 3);
  Array sum = array_add(a, b);
  CHECK(sum == Array(F, {1}, {5}));  // 2*2 = 1 in F_3
  // Padded addition.
  Array c = array_add(Array(F, {2, 2}, {1, 1}), Array(F, {1}, {2}));
  CHECK(c == Array(F, {2, 2}, {3, 1}));

  CHECK(array_leq(Array(F, {1, 1}, {1, 3}), Array(F, {1, 1}, {2, 2})));
  CHECK_FALSE(array_leq(Array(F, {2, 1}, {1, 3}), Array(F, {1, 1}, {2, 2})));
  CHECK_FALSE(array_leq(Array(F, {1, 1}, {2, 2}), Array(F, {1, 1}, {1, 3})));
  // Equal chi with different character vectors still compares.
  CHECK(array_leq(Array(F, {2, 2}, {1, 3}), Array(F, {1, 1}, {2, 2})));
  // Transitivity over a full fixed-weight enumeration.
  std::vector<Array> all = enum_AT(4, F);
  for (const Array& x : all)
    for (const Array& y : all) {
      if (!array_leq(x, y)) continue;
      CHECK(array_leq(x, x));
      for (const Array& z : all)
        if (array_leq(y, z)) CHECK(array_leq(x, z));
    }
}

TEST_CASE("array enumerations match the counting sequences") {
  for (int q : {2, 3}) {
    const FqCtx& F = FqCtx::get(q);
    for (int w = 1; w <= 7; ++w) {
      CHECK(i64(enum_AT(w, F).size()) == count_t(w, q));
      CHECK(i64(enum_AS(w, F).size()) == count_s(w, q));
      CHECK(i64(enum_S(w, F).size()) == count_d(w, q));
      CHECK(i64(enum_AJ(w, F).size()) == count_s(w, q));
      CHECK(i64(enum_AJ1(w, F).size()) == count_s(w, q));
      std::vector<Array> at = enum_AT(w, F);
      CHECK(std::is_sorted(at.begin(), at.end()));
      for (const Array& a : at) CHECK(in_AT(a));
    }
  }
  const FqCtx& F3 = FqCtx::get(3);
  CHECK(enum_AS(2, F3).size() == 6);
}

TEST_CASE("counting sequences") {
  CHECK(count_d(0, 2) == 1);
  std::vector<i64> d2;
  for (int w = 1; w <= 5; ++w) d2.push_back(count_d(w, 2));
  CHECK(d2 == std::vector<i64>{1, 1, 2, 3, 5});
  std::vector<i64> s3;
  for (int w = 1; w <= 4; ++w) s3.push_back(count_s(w, 3));
  CHECK(s3 == std::vector<i64>{2, 6, 16, 46});
  CHECK(count_t(4, 3) == 48);
  CHECK(count_t(5, 3) == 140);
  CHECK(count_d(4, 3) == 6);
  CHECK(count_d(5, 3) == 11);
  // Over the two-element field every character is trivial.
  for (int w = 1; w <= 10; ++w) {
    CHECK(count_s(w, 2) == count_d(w, 2));
    CHECK(count_t(w, 2) == count_d(w, 2));
  }
}

TEST_CASE("array run splitting") {
  const FqCtx& F = FqCtx::get(3);
  Array a = Array::singleton(F, 2, 4);
  Array img = phi(a);
  CHECK(img == Array(F, {1, 2}, {3, 1}));
  CHECK(phi_inv(img) == a);
  for (int q : {2, 3}) {
    const FqCtx& Fq = FqCtx::get(q);
    for (int w = 1; w <= 6; ++w) {
      std::set<Array> image;
      for (const Array& x : enum_AJ(w, Fq)) {
        Array y = phi(x);
        CHECK(in_AJ1(y));
        CHECK(phi_inv(y) == x);
        image.insert(y);
      }
      CHECK(image.size() == enum_AJ1(w, Fq).size());
    }
  }
  CHECK_THROWS_AS((void)phi(Array::singleton(F, 1, 3)), CzlError);
  CHECK_THROWS_AS((void)phi_inv(Array(F, {2}, {3})), CzlError);
}
