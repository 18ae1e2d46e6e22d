#include <doctest.h>

#include "dbcell/crosscheck.hpp"

using namespace dbcell;

TEST_CASE("chi on the A1 interval word") {
  CartanMatrix a1 = CartanMatrix::from_label("A1");
  PairWord word = validate_pair_word({-1, 1}, a1);
  RationalFunction x = RationalFunction::variable("x");
  std::map<VertexId, RationalFunction> coords{
      {{1, 0}, RationalFunction(Rat(1))}, {{1, 1}, x}, {{1, 2}, RationalFunction(Rat(1))}};
  MatF m = chi_eval(word, coords, 2);
  // e_- X^{H^1} e_+ = [[X, X], [X, X+1]]
  CHECK(m(0, 0) == x);
  CHECK(m(0, 1) == x);
  CHECK(m(1, 0) == x);
  CHECK(m(1, 1) == x + RationalFunction(Rat(1)));

  CHECK_THROWS_AS(chi_eval(word, coords, 3), RankMismatch);
  coords[{1, 1}] = RationalFunction();
  CHECK_THROWS_AS(chi_eval(word, coords, 2), ZeroTorusValue);
}

TEST_CASE("frozen coordinates act by torus multiplication") {
  CartanMatrix a2 = CartanMatrix::from_label("A2");
  PairWord word = validate_pair_word({-1, -2, 1, 2}, a2);
  Seed seed = amalgamate(word).first;
  std::map<VertexId, Rat> base;
  for (const VertexId& v : seed.vertices()) base.emplace(v, Rat(1));
  base[{1, 1}] = Rat(2);
  base[{2, 1}] = Rat(3, 2);
  MatQ x0 = chi_eval(word, base, 3);
  auto frozen_changed = base;
  frozen_changed[{1, 0}] = Rat(5);
  frozen_changed[{2, 2}] = Rat(7, 3);
  MatQ x1 = chi_eval(word, frozen_changed, 3);
  CHECK(TorusCoset::of(x0).equals(TorusCoset::of(x1)));
  // the image lies in the (u, v) cell
  CHECK(in_double_cell(x0, word.u_word(), word.v_word()));
}

TEST_CASE("psi gluing holds on random cell elements") {
  CartanMatrix a2 = CartanMatrix::from_label("A2");
  for (auto letters : {std::vector<int>{-1, -2, 1, 2}, std::vector<int>{-1, -2, -1, 1, 2, 1}}) {
    PairWord word = validate_pair_word(letters, a2);
    Seed seed = amalgamate(word).first;
    for (int t = 0; t < 5; ++t) {
      MatQ x = random_cell_element(word, 555 + t);
      // psi_eval asserts the gluing internally (GluingMismatch on failure)
      std::map<VertexId, Rat> values = psi_eval(word, x);
      CHECK(values.size() == seed.vertices().size());
      // frozen string (alpha, 0) carries Delta_alpha(x vbar^{-1}) per the
      // first letter's psi table entry
      MatQ xv = x * lift(WeylGroup::inverse(word.v_word()), 3);
      CHECK(values.at({1, 0}) == minor(1, xv));
    }
  }
}

TEST_CASE("psi needs nonvanishing minors") {
  CartanMatrix a1 = CartanMatrix::from_label("A1");
  PairWord word = validate_pair_word({-1, 1}, a1);
  MatQ bad(2);
  bad(0, 1) = 1;
  bad(1, 0) = -1;  // sbar itself: Delta_1 = 0
  CHECK_THROWS_AS(psi_eval(word, bad), VanishingMinor);
}

TEST_CASE("twist equals the cluster route (SL2 and SL3)") {
  {
    CartanMatrix a1 = CartanMatrix::from_label("A1");
    PairWord word = validate_pair_word({-1, 1}, a1);
    for (int t = 0; t < 20; ++t) {
      MatQ x = random_cell_element(word, 900 + t);
      MatQ direct = twist(x, word.u_word(), word.v_word());
      MatQ cluster = twist_via_cluster(word, x);
      CHECK(TorusCoset::of(direct).equals(TorusCoset::of(cluster)));
    }
  }
  {
    CartanMatrix a2 = CartanMatrix::from_label("A2");
    PairWord word = validate_pair_word({-1, -2, -1, 1, 2, 1}, a2);
    for (int t = 0; t < 5; ++t) {
      MatQ x = random_cell_element(word, 1300 + t);
      MatQ direct = twist(x, word.u_word(), word.v_word());
      MatQ cluster = twist_via_cluster(word, x);
      CHECK(TorusCoset::of(direct).equals(TorusCoset::of(cluster)));
    }
  }
}

TEST_CASE("DT matrix route equals the cluster construction (A1)") {
  CartanMatrix a1 = CartanMatrix::from_label("A1");
  PairWord word = validate_pair_word({-1, 1}, a1);
  DtOracleComparison cmp = dt_oracle_compare(word);
  CHECK(cmp.equal);
  // DT*(X) = X^{-1}, i.e. T^{-2} on the SL_2 section X = T^2
  VarId x = chart_var(ChartKind::X, {1, 1});
  CHECK(cmp.matrix_route.at(x) == RationalFunction::variable("T1:1").pow(-2));
}
