#include <doctest.h>

#include "dbcell/weyl.hpp"

using namespace dbcell;

TEST_CASE("reduced words in A2") {
  WeylGroup w(CartanMatrix::from_label("A2"));
  CHECK(w.is_reduced({1, 2, 1}));
  CHECK_FALSE(w.is_reduced({1, 1}));
  CHECK(w.is_reduced({}));
  CHECK_THROWS_AS(w.is_reduced({3}), IndexOutOfRange);
}

TEST_CASE("G2 longest word") {
  WeylGroup w(CartanMatrix::from_label("G2"));
  CHECK(w.is_reduced({1, 2, 1, 2, 1, 2}));
  CHECK(w.positive_root_count() == 6);
  WeylWord w0 = w.longest_element();
  CHECK(w0.size() == 6);
  CHECK(w.equal(w0, {1, 2, 1, 2, 1, 2}));
  CHECK(w.equal(w0, {2, 1, 2, 1, 2, 1}));
}

TEST_CASE("longest elements by enumeration") {
  CHECK(WeylGroup(CartanMatrix::from_label("A1")).longest_element() == WeylWord{1});
  CHECK(WeylGroup(CartanMatrix::from_label("A2")).longest_element() == WeylWord{1, 2, 1});
  CHECK(WeylGroup(CartanMatrix::from_label("A3")).positive_root_count() == 6);
  CHECK(WeylGroup(CartanMatrix::from_label("B2")).positive_root_count() == 4);
}

TEST_CASE("star and c-map") {
  WeylGroup w(CartanMatrix::from_label("A2"));
  // w0 s1 w0 = s2
  CHECK(w.equal(w.star({1}), {2}));
  CHECK(w.equal(w.star({2}), {1}));
  // length preserved, star involutive
  for (const WeylWord& word : {WeylWord{1}, WeylWord{1, 2}, WeylWord{1, 2, 1}}) {
    CHECK(w.length(w.star(word)) == w.length(word));
    CHECK(w.equal(w.star(w.star(word)), word));
  }
  WeylGroup a1(CartanMatrix::from_label("A1"));
  CHECK(a1.equal(a1.star({1}), {1}));
  // w^c = w0 w^{-1}
  CHECK(w.equal(w.c_map({1, 2, 1}), {}));
  CHECK(w.equal(w.c_map({}), {1, 2, 1}));
}

TEST_CASE("braid invariance of is_reduced") {
  WeylGroup b2(CartanMatrix::from_label("B2"));
  CHECK(b2.is_reduced({1, 2, 1, 2}));
  CHECK(b2.is_reduced({2, 1, 2, 1}));
  CHECK(b2.equal({1, 2, 1, 2}, {2, 1, 2, 1}));
  CHECK_FALSE(b2.is_reduced({1, 2, 1, 2, 1}));
}

TEST_CASE("pair words") {
  CartanMatrix a2 = CartanMatrix::from_label("A2");
  PairWord p = validate_pair_word({-1, -2, 1, 2}, a2);
  CHECK(p.u_word() == WeylWord{1, 2});
  CHECK(p.v_word() == WeylWord{1, 2});
  CHECK(p.occurrences()[1] == 2);

  CartanMatrix a1 = CartanMatrix::from_label("A1");
  CHECK_NOTHROW(validate_pair_word({-1, 1}, a1));
  CHECK_THROWS_AS(validate_pair_word({1, 1, -2}, a2), NotReducedSubword);
  CHECK_THROWS_AS(validate_pair_word({0}, a2), IndexOutOfRange);
}

TEST_CASE("signed word parsing") {
  CHECK(parse_signed_word("-1 -2 1 2") == std::vector<int>({-1, -2, 1, 2}));
  CHECK(parse_signed_word("") == std::vector<int>{});
  CHECK_THROWS_AS(parse_signed_word("1 x"), ParseError);
}
