#include "dbcell/identities.hpp"

#include <random>

#include "dbcell/chart.hpp"
#include "dbcell/chipsi.hpp"
#include "dbcell/group.hpp"
#include "dbcell/moves.hpp"

namespace dbcell {

namespace {

Rat rand_rat(std::mt19937_64& rng, bool nonzero = true, bool positive = false) {
  std::uniform_int_distribution<long> num(positive ? 1 : -9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  while (true) {
    Rat q(num(rng), den(rng));
    q.canonicalize();
    if (!nonzero || q != 0) return q;
  }
}

MatQ rand_sl(int n, std::mt19937_64& rng) {
  while (true) {
    MatQ m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = rand_rat(rng, false);
    Rat d = m.det();
    if (d == 0) continue;
    for (int j = 0; j < n; ++j) m(0, j) = m(0, j) / d;  // det scaled to 1
    return m;
  }
}

std::string mat_str(const MatQ& m) {
  std::string s = "[";
  for (int i = 0; i < m.size(); ++i) {
    s += i ? "; " : "";
    for (int j = 0; j < m.size(); ++j) s += (j ? "," : "") + rat_str(m(i, j));
  }
  return s + "]";
}

template <class T>
bool proportional(const Mat<T>& a, const Mat<T>& b) {
  int n = a.size();
  int ri = -1, rj = -1;
  for (int i = 0; i < n && ri < 0; ++i)
    for (int j = 0; j < n; ++j)
      if (!entry_is_zero(a(i, j))) {
        ri = i;
        rj = j;
        break;
      }
  if (ri < 0) return false;
  if (entry_is_zero(b(ri, rj))) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(a(i, j) * b(ri, rj) == b(i, j) * a(ri, rj))) return false;
  return true;
}

IdentityReport check_e_plus_e_minus(std::mt19937_64& rng, int trials) {
  IdentityReport r{"e_+e_-", trials, true, ""};
  for (int t = 0; t < trials; ++t) {
    Rat p = rand_rat(rng), q = rand_rat(rng);
    if (1 + p * q == 0) {
      --t;
      continue;
    }
    Rat s = 1 + p * q;
    MatQ lhs = gen(GenKind::EPlus, 1, p, 2) * gen(GenKind::EMinus, 1, q, 2);
    MatQ rhs = gen(GenKind::EMinus, 1, Rat(q / s), 2) * gen(GenKind::Coroot, 1, s, 2) *
               gen(GenKind::EPlus, 1, Rat(p / s), 2);
    if (!(lhs == rhs)) {
      r.pass = false;
      r.counterexample = "p=" + rat_str(p) + " q=" + rat_str(q);
      return r;
    }
  }
  return r;
}

IdentityReport check_e_plus_s(std::mt19937_64& rng, int trials) {
  IdentityReport r{"e_+s", trials, true, ""};
  for (int t = 0; t < trials; ++t) {
    Rat tt = rand_rat(rng);
    MatQ lhs = gen(GenKind::EPlus, 1, tt, 2) * sbar(1, 2);
    Rat inv = 1 / tt;
    MatQ rhs = gen(GenKind::EMinus, 1, inv, 2) * gen(GenKind::Coroot, 1, tt, 2) *
               gen(GenKind::EPlus, 1, Rat(-inv), 2);
    if (!(lhs == rhs)) {
      r.pass = false;
      r.counterexample = "t=" + rat_str(tt);
      return r;
    }
  }
  return r;
}

IdentityReport check_s_e_minus(std::mt19937_64& rng, int trials) {
  IdentityReport r{"se_-", trials, true, ""};
  for (int t = 0; t < trials; ++t) {
    Rat tt = rand_rat(rng);
    MatQ lhs = sbar_inverse(1, 2) * gen(GenKind::EMinus, 1, tt, 2);
    Rat inv = 1 / tt;
    MatQ rhs = gen(GenKind::EMinus, 1, Rat(-inv), 2) * gen(GenKind::Coroot, 1, tt, 2) *
               gen(GenKind::EPlus, 1, inv, 2);
    if (!(lhs == rhs)) {
      r.pass = false;
      r.counterexample = "t=" + rat_str(tt);
      return r;
    }
  }
  return r;
}

IdentityReport check_braid_lift() {
  IdentityReport r{"braid lift SL3", 1, true, ""};
  if (!(lift({1, 2, 1}, 3) == lift({2, 1, 2}, 3))) {
    r.pass = false;
    r.counterexample = "lift(121) != lift(212)";
  }
  return r;
}

IdentityReport check_minor_invariance(std::mt19937_64& rng, int trials) {
  IdentityReport r{"minor invariances", trials, true, ""};
  for (int t = 0; t < trials; ++t) {
    MatQ x = rand_sl(3, rng);
    for (int alpha = 1; alpha <= 2; ++alpha) {
      if (!(minor(alpha, x) == minor(alpha, x.transpose()))) {
        r.pass = false;
        r.counterexample = "transpose, x=" + mat_str(x);
        return r;
      }
      int beta = 3 - alpha;
      if (!(minor(alpha, MatQ(sbar_inverse(beta, 3) * x)) == minor(alpha, x)) ||
          !(minor(alpha, MatQ(x * sbar(beta, 3))) == minor(alpha, x))) {
        r.pass = false;
        r.counterexample = "sbar translate, x=" + mat_str(x);
        return r;
      }
    }
  }
  return r;
}

// Delta_a(sbar^{-1} x sbar) Delta_a(x) =
//   Delta_a(sbar^{-1} x) Delta_a(x sbar) + prod_{b != a} Delta_b(x)^{-C_ba}
IdentityReport check_row1(std::mt19937_64& rng, int trials) {
  IdentityReport r{"move table row 1 (A side)", trials, true, ""};
  // symbolic SL2: x = [[a, b], [c, (1+bc)/a]]
  {
    RationalFunction a = RationalFunction::variable("a");
    RationalFunction b = RationalFunction::variable("b");
    RationalFunction c = RationalFunction::variable("c");
    MatF x(2);
    x(0, 0) = a;
    x(0, 1) = b;
    x(1, 0) = c;
    x(1, 1) = (RationalFunction(Rat(1)) + b * c) / a;
    auto sb = sbar(1, 2);
    auto sbi = sbar_inverse(1, 2);
    auto lift_f = [](const MatQ& q) {
      MatF m(q.size());
      for (int i = 0; i < q.size(); ++i)
        for (int j = 0; j < q.size(); ++j) m(i, j) = RationalFunction(q(i, j));
      return m;
    };
    MatF sxs = lift_f(sbi) * x * lift_f(sb);
    MatF sx = lift_f(sbi) * x;
    MatF xs = x * lift_f(sb);
    RationalFunction lhs = minor(1, sxs) * minor(1, x);
    RationalFunction rhs = minor(1, sx) * minor(1, xs) + RationalFunction(Rat(1));
    if (!(lhs == rhs)) {
      r.pass = false;
      r.counterexample = "symbolic SL2";
      return r;
    }
  }
  for (int t = 0; t < trials; ++t) {
    MatQ x = rand_sl(3, rng);
    for (int alpha = 1; alpha <= 2; ++alpha) {
      int beta = 3 - alpha;
      Rat lhs = minor(alpha, MatQ(sbar_inverse(alpha, 3) * x * sbar(alpha, 3))) * minor(alpha, x);
      Rat rhs = minor(alpha, MatQ(sbar_inverse(alpha, 3) * x)) *
                    minor(alpha, MatQ(x * sbar(alpha, 3))) +
                minor(beta, x);  // -C_{beta alpha} = 1 in type A2
      if (lhs != rhs) {
        r.pass = false;
        r.counterexample = "alpha=" + std::to_string(alpha) + " x=" + mat_str(x);
        return r;
      }
    }
  }
  return r;
}

// Delta_b(x sbar_b) Delta_a(x sbar_a) =
//   Delta_a(x) Delta_b(x sbar_a sbar_b) + Delta_a(x sbar_a sbar_b sbar_a) Delta_b(x)
IdentityReport check_row2_a_side(std::mt19937_64& rng, int trials) {
  IdentityReport r{"move table row 2 (A side)", trials, true, ""};
  for (int t = 0; t < trials; ++t) {
    MatQ x = rand_sl(3, rng);
    for (int alpha = 1; alpha <= 2; ++alpha) {
      int beta = 3 - alpha;
      MatQ sa = sbar(alpha, 3), sb = sbar(beta, 3);
      Rat lhs = minor(beta, MatQ(x * sb)) * minor(alpha, MatQ(x * sa));
      Rat rhs = minor(alpha, x) * minor(beta, MatQ(x * sa * sb)) +
                minor(alpha, MatQ(x * sa * sb * sa)) * minor(beta, x);
      if (lhs != rhs) {
        r.pass = false;
        r.counterexample = "alpha=" + std::to_string(alpha) + " x=" + mat_str(x);
        return r;
      }
    }
  }
  return r;
}

// e_a t^{H^a} e_b e_a = (1+t)^{H^a} (1+1/t)^{-H^b} e_b (1/t)^{H^b}
//                        e_a e_b (1+t)^{H^b} (1+1/t)^{-H^a}   in PGL3
IdentityReport check_row2_x_side() {
  IdentityReport r{"move table row 2 (X side, PGL3)", 2, true, ""};
  RationalFunction t = RationalFunction::variable("t");
  RationalFunction one(Rat(1));
  for (int alpha = 1; alpha <= 2; ++alpha) {
    int beta = 3 - alpha;
    auto cw = [&](int level, const RationalFunction& value) {
      return gen(GenKind::Coweight, level, value, 3);
    };
    auto e = [&](int level) { return gen(GenKind::EPlus, level, one, 3); };
    MatF lhs = e(alpha) * cw(alpha, t) * e(beta) * e(alpha);
    RationalFunction onep = one + t;
    RationalFunction ratio = t / onep;  // 1/(1+1/t)
    MatF rhs = cw(alpha, onep) * cw(beta, ratio) * e(beta) * cw(beta, t.inv()) * e(alpha) *
               e(beta) * cw(beta, onep) * cw(alpha, ratio);
    if (!proportional(lhs, rhs)) {
      r.pass = false;
      r.counterexample = "alpha=" + std::to_string(alpha);
      return r;
    }
  }
  return r;
}

// The C*C = 2 X-side identity: the 3-mutation pullback of the braid move on
// (alpha, beta, alpha, beta) with C_ab = -2, C_ba = -1 reproduces y_1..y_6.
IdentityReport check_y_table() {
  IdentityReport r{"move table row 3 (X side, y1..y6)", 6, true, ""};
  CartanMatrix cartan = CartanMatrix::validate({{2, -2}, {-1, 2}});
  PairWord word = validate_pair_word({1, 2, 1, 2}, cartan);
  auto moves = std::vector<Move>{Move::braid_at(0, 4)};
  ClusterTransformation t = moves_to_transformation(word, moves);
  PullbackMap pb = t.pullback(ChartKind::X, /*reduced_x=*/false);

  RationalFunction ta = RationalFunction::variable("t_alpha");
  RationalFunction tb = RationalFunction::variable("t_beta");
  std::map<VarId, RationalFunction> point;
  for (const VertexId& v : t.source_seed().vertices()) {
    RationalFunction value(Rat(1));
    if (v == VertexId{1, 1}) value = ta;
    if (v == VertexId{2, 1}) value = tb;
    point.emplace(chart_var(ChartKind::X, v), value);
  }
  auto image = [&](const VertexId& v) {
    return pb.at(chart_var(ChartKind::X, v)).substitute(point);
  };
  RationalFunction one(Rat(1));
  RationalFunction p = one + tb + ta * tb;            // 1 + t_b + t_a t_b
  RationalFunction q = p + ta * tb + ta * ta * tb;    // 1 + t_b + 2 t_a t_b + t_a^2 t_b
  struct Expect {
    VertexId v;
    RationalFunction value;
  };
  std::vector<Expect> expected = {
      {{1, 0}, q / p},
      {{2, 0}, ta * ta * tb / q},
      {{1, 1}, ta / q},
      {{2, 1}, p * p / (ta * ta * tb)},
      {{1, 2}, p},
      {{2, 2}, tb * q / (p * p)},
  };
  for (const auto& [v, want] : expected) {
    if (!(image(v) == want)) {
      r.pass = false;
      r.counterexample = "X'_" + v.str() + " = " + image(v).str();
      return r;
    }
  }
  return r;
}

}  // namespace

IdentitySuiteReport identity_suite(std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  IdentitySuiteReport report;
  report.items.push_back(check_e_plus_e_minus(rng, trials));
  report.items.push_back(check_e_plus_s(rng, trials));
  report.items.push_back(check_s_e_minus(rng, trials));
  report.items.push_back(check_braid_lift());
  report.items.push_back(check_minor_invariance(rng, 100));
  report.items.push_back(check_row1(rng, trials));
  report.items.push_back(check_row2_a_side(rng, trials));
  report.items.push_back(check_row2_x_side());
  report.items.push_back(check_y_table());
  return report;
}

}  // namespace dbcell
