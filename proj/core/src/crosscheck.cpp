#include "dbcell/crosscheck.hpp"

#include "dbcell/dtransform.hpp"

#include <random>

namespace dbcell {

MatQ twist_via_cluster(const PairWord& word, const MatQ& x) {
  Seed seed = amalgamate(word).first;
  std::map<VertexId, Rat> a_values = psi_eval(word, x);
  std::map<VertexId, Rat> x_values = p_on_values(seed, a_values);
  for (const VertexId& v : seed.vertices())
    if (seed.frozen(v)) x_values.emplace(v, Rat(1));
  return chi_eval(word, x_values, x.size());
}

MatQ random_cell_element(const PairWord& word, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(1, 9), den(1, 9);
  int n = word.cartan.rank() + 1;
  MatQ x = MatQ::identity(n);
  for (int level = 1; level < n; ++level) {
    Rat a(num(rng), den(rng));
    a.canonicalize();
    x = x * gen(GenKind::Coroot, level, a, n);
  }
  for (int letter : word.letters) {
    Rat t(num(rng), den(rng));
    t.canonicalize();
    x = x * gen(letter < 0 ? GenKind::EMinus : GenKind::EPlus, std::abs(letter), t, n);
  }
  return x;
}

namespace {

// X^{H^gamma} on the SL_n section with X = T^n: diagonal entries T^{n-gamma}
// on the first gamma slots and T^{-gamma} on the rest (determinant one).
MatF true_coweight(int gamma, const RationalFunction& t, int n) {
  MatF m = MatF::identity(n);
  for (int i = 0; i < n; ++i)
    m(i, i) = i < gamma ? t.pow(n - gamma) : t.pow(-gamma);
  return m;
}

}  // namespace

DtOracleComparison dt_oracle_compare(const PairWord& word) {
  Seed seed = amalgamate(word).first;
  int n = word.cartan.rank() + 1;
  auto t_of = [](const VertexId& v) { return var("T" + v.str()); };
  auto coord = [&](const VertexId& v) {
    return seed.frozen(v) ? RationalFunction(Rat(1)) : RationalFunction::variable(t_of(v));
  };

  MatF x = MatF::identity(n);
  for (int level = 1; level <= word.cartan.rank(); ++level)
    x = x * true_coweight(level, coord({level, 0}), n);
  std::vector<long> seen(word.cartan.rank() + 1, 0);
  for (int letter : word.letters) {
    int level = std::abs(letter);
    long i = ++seen[level];
    MatF e = MatF::identity(n);
    if (letter > 0)
      e(level - 1, level) = RationalFunction(Rat(1));
    else
      e(level, level - 1) = RationalFunction(Rat(1));
    x = x * e * true_coweight(level, coord({level, static_cast<int>(i)}), n);
  }

  std::map<VertexId, RationalFunction> a_values = psi_eval(word, x);
  std::map<VertexId, RationalFunction> x_values = p_on_values(seed, a_values);

  DtOracleComparison out;
  for (const auto& [v, f] : x_values)
    out.matrix_route.images.emplace(chart_var(ChartKind::X, v), f);

  PullbackMap cluster = build_dt(word).pullback(ChartKind::X);
  std::map<VarId, RationalFunction> to_t;
  for (const VertexId& v : seed.vertices()) {
    if (seed.frozen(v)) continue;
    to_t.emplace(chart_var(ChartKind::X, v),
                 RationalFunction::variable(t_of(v)).pow(n));
  }
  for (const auto& [xv, f] : cluster.images)
    out.cluster_route.images.emplace(xv, f.substitute(to_t));
  out.equal = out.matrix_route == out.cluster_route;
  return out;
}

}  // namespace dbcell
