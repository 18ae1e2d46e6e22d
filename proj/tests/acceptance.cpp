// Acceptance suite: one line per criterion, exact arithmetic throughout.
// Exit code 0 iff everything passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "dbcell/crosscheck.hpp"
#include "dbcell/dtransform.hpp"
#include "dbcell/identities.hpp"
#include "dbcell/jsonio.hpp"
#include "dbcell/moves.hpp"
#include "dbcell/tropical.hpp"

using namespace dbcell;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::printf("criterion %2d [%s]: %s (%lld ms)%s%s\n", number, name.c_str(),
              ok ? "PASS" : "FAIL", static_cast<long long>(ms), error.empty() ? "" : " error: ",
              error.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

PairWord word_of(const std::string& label, const std::vector<int>& letters) {
  return validate_pair_word(letters, CartanMatrix::from_label(label));
}

// --- 1: mutation involutivity on random seeds ------------------------------

Seed random_seed_data(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n_dist(2, 12), d_dist(1, 4), half(-3, 3), fz(0, 3);
  int n = n_dist(rng);
  std::vector<VertexId> verts;
  std::vector<bool> frozen;
  std::vector<long> d;
  for (int i = 0; i < n; ++i) {
    verts.push_back({1 + i / 6, i % 6});
    frozen.push_back(fz(rng) == 0);
    d.push_back(d_dist(rng));
  }
  frozen[0] = false;  // keep at least one mutable vertex
  std::vector<std::vector<Rat>> eps(n, std::vector<Rat>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int attempt = 0; attempt < 64; ++attempt) {
        Rat eij(half(rng), (frozen[i] && frozen[j]) ? 2 : 1);
        eij.canonicalize();
        Rat eji = -eij * d[j] / d[i];
        bool ok = (is_integer(eij) || (frozen[i] && frozen[j])) && eij.get_den() <= 2 &&
                  (is_integer(eji) || (frozen[j] && frozen[i])) && eji.get_den() <= 2;
        if (ok) {
          eps[i][j] = eij;
          eps[j][i] = eji;
          break;
        }
      }
    }
  }
  return Seed(verts, frozen, eps, d);
}

bool criterion1() {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    Seed seed = random_seed_data(rng);
    for (const VertexId& c : seed.unfrozen_vertices())
      if (!(seed.mutate(c).mutate(c) == seed)) return false;
  }
  return true;
}

// --- 2: stored move-2 sequences replay onto the target amalgamation --------

bool criterion2() {
  struct Case {
    const char* label;
    std::vector<int> from;
    int len;
    std::size_t mutations;
  };
  for (const Case& c : {Case{"G2", {1, 2, 1, 2, 1, 2}, 6, 10},
                        Case{"B2", {1, 2, 1, 2}, 4, 3},
                        Case{"A2", {1, 2, 1}, 3, 1}}) {
    PairWord from = word_of(c.label, c.from);
    MoveResult r = apply_move(from, Move::braid_at(0, c.len));
    std::size_t mutation_count = 0;
    for (const auto& s : r.steps)
      if (s.kind == TransformStep::Kind::Mutation) ++mutation_count;
    if (mutation_count != c.mutations) return false;
    // exact epsilon equality under the structural relabeling
    Seed replayed = ClusterTransformation::replay(amalgamate(from).first, r.steps);
    if (!(replayed == amalgamate(r.word).first)) return false;
  }
  return true;
}

// --- 3: p-map commutation over the word corpus ------------------------------

bool criterion3() {
  std::vector<std::pair<const char*, std::vector<int>>> corpus = {
      {"A1", {-1, 1}},
      {"A1", {1, -1}},
      {"A2", {-1, -2, 1, 2}},
      {"A2", {-1, 2, -2, 1}},
      {"A2", {-1, -2, -1, 1, 2, 1}},
      {"A2", {1, -1, 2, -2, 1, -1}},
      {"A3", {-1, -2, -3, 1, 2, 3}},
      {"A3", {-2, -1, -3, -2, 2, 3}},
      {"A3", {1, 2, 1, 3, 2, 1}},
      {"B2", {-1, -2, 1, 2}},
      {"B2", {-1, -2, -1, -2, 1, 2, 1, 2}},
      {"B2", {1, 2, 1, 2}},
      {"G2", {-1, -2, 1, 2}},
      {"G2", {1, 2, 1, 2, 1, 2}},
      {"G2", {-1, -2, -1, -2, 1, 2}},
  };
  for (const auto& [label, letters] : corpus) {
    PairWord word = word_of(label, letters);
    Seed seed = amalgamate(word).first;
    for (const VertexId& c : seed.unfrozen_vertices()) {
      PullbackMap x_then_p =
          PullbackMap::compose(x_mutation_pullback(seed, c), p_pullback(seed));
      PullbackMap p_then_a =
          PullbackMap::compose(p_pullback(seed.mutate(c)), a_mutation_pullback(seed, c));
      if (!(x_then_p == p_then_a)) return false;
    }
  }
  return true;
}

// --- 4: DT degree criterion -------------------------------------------------

bool criterion4() {
  std::vector<std::pair<const char*, std::vector<int>>> cases = {
      {"A1", {-1, 1}},
      {"A2", {-1, -2, 1, 2}},
      {"A2", {-1, -2, -1, 1, 2, 1}},
      {"B2", {-1, -2, -1, -2, 1, 2, 1, 2}},
      {"G2", {-1, -2, -1, -2, -1, -2, 1, 2, 1, 2, 1, 2}},
  };
  for (const auto& [label, letters] : cases) {
    PairWord word = word_of(label, letters);
    DtCheckReport report = check_dt(build_dt(word));
    if (!report.verdict) {
      std::cerr << label << ": " << report.str();
      return false;
    }
  }
  return true;
}

// --- 5: twist matrix cross-check --------------------------------------------

bool criterion5() {
  for (const auto& [label, letters] :
       std::vector<std::pair<const char*, std::vector<int>>>{
           {"A1", {-1, 1}}, {"A2", {-1, -2, -1, 1, 2, 1}}}) {
    PairWord word = word_of(label, letters);
    for (int t = 0; t < 20; ++t) {
      MatQ x = random_cell_element(word, 7000 + t);
      MatQ direct = twist(x, word.u_word(), word.v_word());
      MatQ cluster = twist_via_cluster(word, x);
      if (!TorusCoset::of(direct).equals(TorusCoset::of(cluster))) return false;
    }
  }
  return true;
}

// --- 6: DT oracle equality ---------------------------------------------------

bool criterion6() {
  for (const auto& [label, letters] :
       std::vector<std::pair<const char*, std::vector<int>>>{
           {"A1", {-1, 1}}, {"A2", {-1, -2, 1, 2}}}) {
    PairWord word = word_of(label, letters);
    if (!dt_oracle_compare(word).equal) return false;
  }
  return true;
}

// --- 7: identity suite --------------------------------------------------------

bool criterion7() {
  IdentitySuiteReport report = identity_suite(20240501, 50);
  for (const auto& item : report.items)
    if (!item.pass)
      std::cerr << "identity failed: " << item.identity << " " << item.counterexample << "\n";
  return report.all_pass();
}

// --- 8: involution instances ---------------------------------------------------

bool criterion8() {
  for (const auto& [label, letters] :
       std::vector<std::pair<const char*, std::vector<int>>>{
           {"A1", {-1, 1}}, {"A2", {-1, -2, 1, 2}}}) {
    PairWord word = word_of(label, letters);
    std::vector<int> rev(letters.rbegin(), letters.rend());
    PairWord reversed = validate_pair_word(rev, word.cartan);
    PullbackMap d1 = d_x_pullback(word);
    PullbackMap d2 = d_x_pullback(reversed);
    if (!PullbackMap::compose(d2, d1).is_identity()) return false;
  }
  return true;
}

// --- 9: conjugation covariance -------------------------------------------------

bool criterion9() {
  PairWord w1 = word_of("A2", {-1, -2, 1, 2});
  for (const std::vector<int>& other : {std::vector<int>{-1, 1, -2, 2},
                                        std::vector<int>{1, -1, -2, 2},
                                        std::vector<int>{-1, 1, 2, -2}}) {
    PairWord w2 = validate_pair_word(other, w1.cartan);
    ClusterTransformation tau =
        moves_to_transformation(w1, word_path(w1, w2)).restrict_to_unfrozen();
    ClusterTransformation dt1 = build_dt(w1);
    ClusterTransformation dt2 = build_dt(w2);
    ClusterTransformation conjugated = tau.inverse().then(dt1).then(tau);
    if (!(conjugated.pullback(ChartKind::X) == dt2.pullback(ChartKind::X))) return false;
  }
  return true;
}

// --- 10: leading exponents vs symbolic minors -----------------------------------

bool criterion10() {
  PairWord word = word_of("A2", {-1, -2, -1, 1, 2, 1});
  Seed seed = amalgamate(word).first;
  const int n = 3;
  std::map<VertexId, RationalFunction> coords;
  for (const VertexId& v : seed.vertices())
    coords.emplace(v, RationalFunction::variable(chart_var(ChartKind::X, v)));
  MatF chi = chi_eval(word, coords, n);

  std::vector<int> u_levels, v_levels;
  for (int letter : word.letters)
    (letter < 0 ? u_levels : v_levels).push_back(std::abs(letter));

  for (int v_suffix = 0; v_suffix <= static_cast<int>(v_levels.size()); ++v_suffix) {
    for (int u_prefix = 0; u_prefix <= static_cast<int>(u_levels.size()); ++u_prefix) {
      MatQ lift_left = MatQ::identity(n), lift_right = MatQ::identity(n);
      for (int k = 0; k < u_prefix; ++k) lift_left = sbar_inverse(u_levels[k], n) * lift_left;
      for (int k = 0; k < v_suffix; ++k)
        lift_right = lift_right * sbar(v_levels[v_levels.size() - 1 - k], n);
      MatF l(n), r(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          l(i, j) = RationalFunction(lift_left(i, j));
          r(i, j) = RationalFunction(lift_right(i, j));
        }
      MatF translated = l * chi * r;

      LeadingExponentState st(word);
      for (int k = 0; k < v_suffix; ++k) st.right_mult_sbar();
      for (int k = 0; k < u_prefix; ++k) st.left_mult_sbar_inv();
      for (int alpha = 1; alpha <= 2; ++alpha) {
        RationalFunction m = minor(alpha, translated);
        for (const VertexId& x : seed.vertices()) {
          long want = m.variable_degree(chart_var(ChartKind::X, x));
          if (st.minor_exponent_type_a(alpha, x) != want) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "mutation involutivity", criterion1);
  criterion(2, "stored braid sequences replay", criterion2);
  criterion(3, "p-map commutation", criterion3);
  criterion(4, "DT degree criterion", criterion4);
  criterion(5, "twist matrix cross-check", criterion5);
  criterion(6, "DT oracle equality", criterion6);
  criterion(7, "identity suite", criterion7);
  criterion(8, "involution instances", criterion8);
  criterion(9, "conjugation covariance", criterion9);
  criterion(10, "leading-exponent oracle", criterion10);
  if (failures == 0) {
    std::printf("acceptance: all criteria PASS\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return 1;
}
