#ifndef DBCELL_CHIPSI_HPP
#define DBCELL_CHIPSI_HPP

#include <map>

#include "dbcell/group.hpp"
#include "dbcell/seed.hpp"

namespace dbcell {

// Amalgamated chi: ordered product over the letters of
//   X_{left string}^{H^a} e_{+-a} X_{right string}^{H^a},
// every string's coordinate contributing exactly once, spectator coordinates
// emitted before the first letter of their level. Coweight factors are the
// projective representatives of gen(Coweight, .), so the result is meaningful
// as a torus coset.
template <class T>
Mat<T> chi_eval(const PairWord& word, const std::map<VertexId, T>& x, int n) {
  if (n - 1 != word.cartan.rank()) throw RankMismatch("chi needs n - 1 = rank");
  auto coord = [&](int level, long i) -> const T& {
    auto it = x.find(VertexId{level, static_cast<int>(i)});
    if (it == x.end()) throw UnknownVertex("missing coordinate for string");
    if (entry_is_zero(it->second)) throw ZeroTorusValue();
    return it->second;
  };
  Mat<T> m = Mat<T>::identity(n);
  for (int level = 1; level <= word.cartan.rank(); ++level)
    m = m * gen(GenKind::Coweight, level, coord(level, 0), n);
  std::vector<long> seen(word.cartan.rank() + 1, 0);
  for (int letter : word.letters) {
    int level = std::abs(letter);
    long i = ++seen[level];
    Mat<T> e = Mat<T>::identity(n);
    if (letter > 0)
      e(level - 1, level) = T(Rat(1));
    else
      e(level, level - 1) = T(Rat(1));
    m = m * e * gen(GenKind::Coweight, level, coord(level, i), n);
  }
  return m;
}

// Amalgamated psi: the A-coordinate of the string (a, i) is the generalized
// minor Delta_a at the translate ubar_{<k}^{-1} x vbar_{>k}^{-1} of an
// adjacent letter k; all overlapping assignments are asserted equal.
template <class T>
std::map<VertexId, T> psi_eval(const PairWord& word, const Mat<T>& x) {
  int n = x.size();
  if (n - 1 != word.cartan.rank()) throw RankMismatch("psi needs n - 1 = rank");
  int len = static_cast<int>(word.letters.size());

  // lift(u_{<k})^{-1} and lift((v_{>k})^{-1}) for every position, exact
  std::vector<MatQ> left(len + 1), right(len + 1);
  left[0] = MatQ::identity(n);
  for (int k = 0; k < len; ++k) {
    int letter = word.letters[k];
    left[k + 1] = letter < 0 ? sbar_inverse(-letter, n) * left[k] : left[k];
  }
  right[len] = MatQ::identity(n);
  for (int k = len - 1; k >= 0; --k) {
    int letter = word.letters[k];
    right[k] = letter > 0 ? right[k + 1] * sbar(letter, n) : right[k + 1];
  }

  auto to_t = [&](const MatQ& q) {
    Mat<T> m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = T(q(i, j));
    return m;
  };

  std::map<VertexId, T> values;
  auto assign = [&](const VertexId& v, const T& value) {
    if (entry_is_zero(value)) throw VanishingMinor("Delta vanishes at string " + v.str());
    auto [it, fresh] = values.emplace(v, value);
    if (!fresh && !(it->second == value))
      throw GluingMismatch("inconsistent minor at string " + v.str());
  };

  if (len == 0) {
    for (int level = 1; level <= word.cartan.rank(); ++level)
      assign({level, 0}, minor(level, x));
    return values;
  }

  std::vector<long> seen(word.cartan.rank() + 1, 0);
  for (int k = 0; k < len; ++k) {
    int letter = word.letters[k];
    int level = std::abs(letter);
    long i = ++seen[level];
    // g_k = lift(u_{<k})^{-1} x lift((v_{>k})^{-1}); positions are 0-based
    // here, so u_{<k} collects negative letters at indices < k.
    Mat<T> g = to_t(left[k]) * x * to_t(right[k + 1]);
    Mat<T> g_s = g * to_t(sbar(level, n));
    Mat<T> s_g = to_t(sbar_inverse(level, n)) * g;
    if (letter > 0) {
      assign({level, static_cast<int>(i - 1)}, minor(level, g_s));
      assign({level, static_cast<int>(i)}, minor(level, g));
    } else {
      assign({level, static_cast<int>(i - 1)}, minor(level, g));
      assign({level, static_cast<int>(i)}, minor(level, s_g));
    }
    for (int beta = 1; beta <= word.cartan.rank(); ++beta) {
      if (beta == level) continue;
      assign({beta, static_cast<int>(seen[beta])}, minor(beta, g));
    }
  }
  return values;
}

// p-map on the A-values: X_a = prod_b A_b^{eps_ab} for every unfrozen string.
template <class T>
std::map<VertexId, T> p_on_values(const Seed& seed, const std::map<VertexId, T>& a_values) {
  std::map<VertexId, T> out;
  for (const VertexId& a : seed.vertices()) {
    if (seed.frozen(a)) continue;
    T acc = T(Rat(1));
    for (const VertexId& b : seed.vertices()) {
      const Rat& e = seed.epsilon(a, b);
      if (e == 0) continue;
      long k = rat_to_long(e);
      const T& base = a_values.at(b);
      T powed = T(Rat(1));
      for (long t = 0; t < std::abs(k); ++t) powed = powed * base;
      if (k < 0) powed = T(Rat(1)) / powed;
      acc = acc * powed;
    }
    out.emplace(a, acc);
  }
  return out;
}

}  // namespace dbcell

#endif
