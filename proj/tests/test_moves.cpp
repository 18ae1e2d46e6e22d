#include <doctest.h>

#include "dbcell/moves.hpp"

using namespace dbcell;

TEST_CASE("move 1 with distinct levels changes nothing") {
  CartanMatrix a2 = CartanMatrix::from_label("A2");
  PairWord word = validate_pair_word({1, -2}, a2);
  MoveResult r = apply_move(word, Move::swap_at(0));
  CHECK(r.word.letters == std::vector<int>({-2, 1}));
  CHECK(r.steps.empty());
  CHECK(amalgamate(word).first == amalgamate(r.word).first);
}

TEST_CASE("move 1 on the same level is one mutation") {
  CartanMatrix a2 = CartanMatrix::from_label("A2");
  PairWord word = validate_pair_word({1, -1}, a2);
  MoveResult r = apply_move(word, Move::swap_at(0));
  REQUIRE(r.steps.size() == 1);
  CHECK(r.steps[0].kind == TransformStep::Kind::Mutation);
  CHECK(r.steps[0].vertex == VertexId{1, 1});
  CHECK_THROWS_AS(apply_move(word, Move::swap_at(5)), MoveNotApplicable);
  CHECK_THROWS_AS(apply_move(validate_pair_word({-1, -2}, a2), Move::swap_at(0)),
                  MoveNotApplicable);
}

TEST_CASE("braid move in A2 is one mutation plus a relabel") {
  CartanMatrix a2 = CartanMatrix::from_label("A2");
  PairWord word = validate_pair_word({1, 2, 1}, a2);
  MoveResult r = apply_move(word, Move::braid_at(0, 3));
  CHECK(r.word.letters == std::vector<int>({2, 1, 2}));
  REQUIRE(r.steps.size() == 2);
  CHECK(r.steps[0].kind == TransformStep::Kind::Mutation);
  CHECK(r.steps[0].vertex == VertexId{1, 1});
  CHECK(r.steps[1].kind == TransformStep::Kind::Isomorphism);
  // validated against the target amalgamation inside apply_move already
  CHECK(amalgamate(r.word).first.size() == 5);
}

TEST_CASE("braid move in B2 is three mutations") {
  CartanMatrix b2 = CartanMatrix::from_label("B2");
  PairWord word = validate_pair_word({1, 2, 1, 2}, b2);
  MoveResult r = apply_move(word, Move::braid_at(0, 4));
  CHECK(r.word.letters == std::vector<int>({2, 1, 2, 1}));
  CHECK(r.steps.size() == 3);
  // u-side block, same data
  PairWord uword = validate_pair_word({-1, -2, -1, -2}, b2);
  MoveResult ru = apply_move(uword, Move::braid_at(0, 4));
  CHECK(ru.steps.size() == 3);
}

TEST_CASE("braid move in G2 is ten mutations") {
  CartanMatrix g2 = CartanMatrix::from_label("G2");
  PairWord word = validate_pair_word({1, 2, 1, 2, 1, 2}, g2);
  MoveResult r = apply_move(word, Move::braid_at(0, 6));
  CHECK(r.word.letters == std::vector<int>({2, 1, 2, 1, 2, 1}));
  CHECK(r.steps.size() == 10);
  // the other orientation validates as well
  PairWord other = validate_pair_word({2, 1, 2, 1, 2, 1}, g2);
  MoveResult r2 = apply_move(other, Move::braid_at(0, 6));
  CHECK(r2.steps.size() == 10);
}

TEST_CASE("commuting exchange in A3") {
  CartanMatrix a3 = CartanMatrix::from_label("A3");
  PairWord word = validate_pair_word({1, 3}, a3);
  MoveResult r = apply_move(word, Move::braid_at(0, 2));
  CHECK(r.word.letters == std::vector<int>({3, 1}));
  CHECK(r.steps.empty());
}

TEST_CASE("word path basics") {
  CartanMatrix a2 = CartanMatrix::from_label("A2");
  PairWord w = validate_pair_word({-1, 1, -2, 2}, a2);
  CHECK(word_path(w, w).empty());

  // v-part braid: one Move2
  PairWord v1 = validate_pair_word({1, 2, 1}, a2);
  PairWord v2 = validate_pair_word({2, 1, 2}, a2);
  auto path = word_path(v1, v2);
  CHECK(path.size() == 1);
  CHECK(path[0].kind == Move::Kind::Braid);

  // pure interleaving change: swaps only
  PairWord s1 = validate_pair_word({-1, 1, -2, 2}, a2);
  PairWord s2 = validate_pair_word({-1, -2, 1, 2}, a2);
  auto swaps = word_path(s1, s2);
  CHECK(swaps.size() == 1);
  CHECK(swaps[0].kind == Move::Kind::Swap);

  PairWord different = validate_pair_word({-1, 1}, a2);
  CHECK_THROWS_AS(word_path(s1, different), DifferentPair);
}

TEST_CASE("word path through braids and swaps replays exactly") {
  CartanMatrix a2 = CartanMatrix::from_label("A2");
  PairWord from = validate_pair_word({1, -1, 2, -2, 1, -1}, a2);
  PairWord to = validate_pair_word({-2, 2, -1, 1, -2, 2}, a2);
  auto path = word_path(from, to);
  ClusterTransformation t = moves_to_transformation(from, path);
  CHECK(t.source_seed() == amalgamate(from).first);
  CHECK(t.target_seed() == amalgamate(to).first);
}
