#include <doctest.h>

#include "dbcell/chart.hpp"

using namespace dbcell;

namespace {

Seed a1_seed() {
  return amalgamate_seed({-1, 1}, CartanMatrix::from_label("A1"));
}

RationalFunction xvar(const VertexId& v) {
  return RationalFunction::variable(chart_var(ChartKind::X, v));
}
RationalFunction avar(const VertexId& v) {
  return RationalFunction::variable(chart_var(ChartKind::A, v));
}

}  // namespace

TEST_CASE("X mutation pullback formulas") {
  Seed s = a1_seed();
  VertexId c{1, 1};
  PullbackMap full = x_mutation_pullback(s, c, /*reduced=*/false);
  CHECK(full.at(chart_var(ChartKind::X, c)) == xvar(c).inv());
  // eps((1,0), (1,1)) = 1: X_a (1 + X_c^{-1})^{-1}
  VertexId a{1, 0};
  CHECK(full.at(chart_var(ChartKind::X, a)) ==
        xvar(a) * (RationalFunction(Rat(1)) + xvar(c).inv()).pow(-1));
  PullbackMap reduced = x_mutation_pullback(s, c);
  CHECK(reduced.images.size() == 1);
  CHECK_THROWS_AS(x_mutation_pullback(s, a), FrozenVertex);
}

TEST_CASE("X mutation is involutive as a map") {
  Seed s = a1_seed();
  VertexId c{1, 1};
  PullbackMap first = x_mutation_pullback(s, c, false);
  PullbackMap second = x_mutation_pullback(s.mutate(c), c, false);
  // pullback of mu . mu = first* . second* applied source-first
  PullbackMap round = PullbackMap::compose(second, first);
  CHECK(round.is_identity());
}

TEST_CASE("A mutation pullback formulas") {
  Seed s = a1_seed();
  VertexId c{1, 1};
  PullbackMap pb = a_mutation_pullback(s, c);
  // A_c -> (prod_{eps>0} + prod_{eps<0})/A_c; eps(c, (1,0)) = eps(c, (1,2)) = -1
  RationalFunction expect =
      (RationalFunction(Rat(1)) + avar({1, 0}) * avar({1, 2})) / avar(c);
  CHECK(pb.at(chart_var(ChartKind::A, c)) == expect);
  PullbackMap second = a_mutation_pullback(s.mutate(c), c);
  CHECK(PullbackMap::compose(second, pb).is_identity());

  // isolated vertex: empty products on both sides give 2/A_c
  Seed isolated({{9, 0}}, {false}, {{Rat(0)}}, {1});
  PullbackMap iso = a_mutation_pullback(isolated, {9, 0});
  CHECK(iso.at(chart_var(ChartKind::A, {9, 0})) ==
        RationalFunction(Rat(2)) / avar({9, 0}));
}

TEST_CASE("p pullback") {
  Seed s = a1_seed();
  PullbackMap p = p_pullback(s);
  // p*(X_{(1,1)}) = A_{(1,0)}^{-1} A_{(1,2)}^{-1}
  CHECK(p.at(chart_var(ChartKind::X, {1, 1})) == (avar({1, 0}) * avar({1, 2})).inv());

  // zero row gives the constant 1
  Seed zero({{5, 0}, {5, 1}}, {false, true}, {{Rat(0), Rat(0)}, {Rat(0), Rat(0)}}, {1, 1});
  CHECK(p_pullback(zero).at(chart_var(ChartKind::X, {5, 0})) == RationalFunction(Rat(1)));
}

TEST_CASE("p map commutes with mutation on small amalgamations") {
  for (const char* label : {"A1", "A2", "B2"}) {
    CartanMatrix cartan = CartanMatrix::from_label(label);
    std::vector<std::vector<int>> words;
    if (std::string(label) == "A1")
      words = {{-1, 1}};
    else
      words = {{-1, -2, 1, 2}, {-1, -2, -1, 1, 2, 1}};
    for (const auto& letters : words) {
      PairWord word = validate_pair_word(letters, cartan);
      Seed seed = amalgamate(word).first;
      for (const VertexId& c : seed.unfrozen_vertices()) {
        // x-mutation pullback of X' composed with p equals p' composed with
        // a-mutation: both send functions on X_{i'} to functions on A_i
        PullbackMap x_then_p = PullbackMap::compose(x_mutation_pullback(seed, c), p_pullback(seed));
        PullbackMap p_then_a =
            PullbackMap::compose(p_pullback(seed.mutate(c)), a_mutation_pullback(seed, c));
        CHECK(x_then_p == p_then_a);
      }
    }
  }
}

TEST_CASE("compose: empty, involution, relabel") {
  Seed s = a1_seed().reduced();
  VertexId c{1, 1};
  ClusterTransformation empty(s, {});
  CHECK(empty.pullback(ChartKind::X).is_identity());

  ClusterTransformation twice(s, {TransformStep::mutation(c), TransformStep::mutation(c)});
  CHECK(twice.pullback(ChartKind::X).is_identity());
  CHECK(twice.target_seed() == s);

  // single mutation followed by the flip relabel: X -> X^{-1} on the chart
  std::map<VertexId, VertexId> flip{{c, c}};
  ClusterTransformation t(s, {TransformStep::mutation(c), TransformStep::isomorphism(flip)});
  CHECK(t.pullback(ChartKind::X).at(chart_var(ChartKind::X, c)) == xvar(c).inv());
}

TEST_CASE("transformation inverse and replay") {
  Seed s = amalgamate_seed({-1, -2, 1, 2}, CartanMatrix::from_label("A2"));
  ClusterTransformation t(s, {TransformStep::mutation({1, 1}), TransformStep::mutation({2, 1})});
  ClusterTransformation inv = t.inverse();
  CHECK(inv.source_seed() == t.target_seed());
  CHECK(inv.target_seed() == s);
  ClusterTransformation round = t.then(inv);
  CHECK(round.pullback(ChartKind::X).is_identity());
  CHECK_THROWS_AS(ClusterTransformation::replay(s, t.steps(), &s), ReplayMismatch);
}

TEST_CASE("unfrozen images never touch frozen variables") {
  Seed seed = amalgamate_seed({-1, -2, -1, 1, 2, 1}, CartanMatrix::from_label("A2"));
  for (const VertexId& c : seed.unfrozen_vertices()) {
    PullbackMap full = x_mutation_pullback(seed, c, /*reduced=*/false);
    for (const VertexId& a : seed.unfrozen_vertices()) {
      const RationalFunction& image = full.at(chart_var(ChartKind::X, a));
      for (VarId v : image.variables()) {
        // every variable in an unfrozen image is an unfrozen coordinate
        bool is_unfrozen_coord = false;
        for (const VertexId& b : seed.unfrozen_vertices())
          if (chart_var(ChartKind::X, b) == v) is_unfrozen_coord = true;
        CHECK(is_unfrozen_coord);
      }
    }
  }
}

TEST_CASE("poisson bracket") {
  Seed s = a1_seed();
  VertexId a{1, 1}, b{1, 0};
  // eps_hat(a, b) = eps(a,b) d(b) = -1
  CHECK(poisson_bracket(s, a, b) == RationalFunction(Rat(-1)) * xvar(a) * xvar(b));
  CHECK(poisson_bracket(s, a, a).is_zero());
  CHECK(poisson_bracket(s, a, b) == -poisson_bracket(s, b, a));
  Seed zero({{5, 0}, {5, 1}}, {false, false}, {{Rat(0), Rat(0)}, {Rat(0), Rat(0)}}, {1, 1});
  CHECK(poisson_bracket(zero, {5, 0}, {5, 1}).is_zero());
}
