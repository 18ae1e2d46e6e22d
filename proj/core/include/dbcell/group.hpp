#ifndef DBCELL_GROUP_HPP
#define DBCELL_GROUP_HPP

#include <optional>
#include <tuple>
#include <vector>

#include "dbcell/matrix.hpp"
#include "dbcell/weyl.hpp"

namespace dbcell {

enum class GenKind { EPlus, EMinus, Coroot, Coweight };

// One-parameter generators of GL_n: e_{+a}(t) = I + t E_{a,a+1},
// e_{-a}(t) = I + t E_{a+1,a}, the coroot t^{H_a} = diag(.., t, t^{-1}, ..)
// and the coweight t^{H^a} = diag(t, .., t, 1, .., 1) as a projective (PGL)
// representative.
template <class T>
Mat<T> gen(GenKind kind, int alpha, const T& t, int n) {
  if (alpha < 1 || alpha > n - 1) throw IndexOutOfRange("generator index");
  Mat<T> m = Mat<T>::identity(n);
  switch (kind) {
    case GenKind::EPlus:
      m(alpha - 1, alpha) = t;
      break;
    case GenKind::EMinus:
      m(alpha, alpha - 1) = t;
      break;
    case GenKind::Coroot:
      if (entry_is_zero(t)) throw ZeroTorusValue();
      m(alpha - 1, alpha - 1) = t;
      m(alpha, alpha) = T(Rat(1)) / t;
      break;
    case GenKind::Coweight:
      if (entry_is_zero(t)) throw ZeroTorusValue();
      for (int i = 0; i < alpha; ++i) m(i, i) = t;
      break;
  }
  return m;
}

// s-bar lift of one simple reflection and of a reduced word.
MatQ sbar(int alpha, int n);
MatQ sbar_inverse(int alpha, int n);
MatQ lift(const WeylWord& word, int n);

// Gaussian decomposition x = L * D * U (unit lower/upper, diagonal middle).
template <class T>
std::tuple<Mat<T>, Mat<T>, Mat<T>> gauss(const Mat<T>& x) {
  int n = x.size();
  Mat<T> a = x;
  Mat<T> lower = Mat<T>::identity(n);
  Mat<T> diag(n);
  for (int k = 0; k < n; ++k) {
    if (entry_is_zero(a(k, k)))
      throw NotGaussianDecomposable("leading minor " + std::to_string(k + 1) + " vanishes");
    for (int i = k + 1; i < n; ++i) {
      if (entry_is_zero(a(i, k))) continue;
      T f = a(i, k) / a(k, k);
      lower(i, k) = f;
      for (int j = k; j < n; ++j) a(i, j) = a(i, j) - f * a(k, j);
    }
  }
  Mat<T> upper = Mat<T>::identity(n);
  for (int k = 0; k < n; ++k) {
    diag(k, k) = a(k, k);
    for (int j = k + 1; j < n; ++j) upper(k, j) = a(k, j) / a(k, k);
  }
  return {lower, diag, upper};
}

// Generalized minor: determinant of the leading alpha x alpha block.
template <class T>
T minor(int alpha, const Mat<T>& x) {
  if (alpha < 1 || alpha > x.size()) throw IndexOutOfRange("minor index");
  return x.leading_minor(alpha);
}

// Permutations of the two Bruhat decompositions, via rank profiles.
std::vector<int> bruhat_plus_permutation(const MatQ& x);   // x in B+ w B+
std::vector<int> bruhat_minus_permutation(const MatQ& x);  // x in B- w B-
std::vector<int> word_permutation(const WeylWord& word, int n);
bool in_double_cell(const MatQ& x, const WeylWord& u, const WeylWord& v);

// Twist map on G^{u,v}:
// x -> ([ubar^{-1} x]_-^{-1} ubar^{-1} x vbar' [x vbar']_+^{-1})^t  with
// vbar' the lift of v^{-1}.
MatQ twist(const MatQ& x, const WeylWord& u, const WeylWord& v);

// Canonical representative of the double torus quotient H \ x / H.
struct TorusCoset {
  MatQ representative;
  bool generic = false;  // first row and column fully nonzero
  MatQ normal_form;      // valid when generic

  static TorusCoset of(const MatQ& x);
  bool equals(const TorusCoset& other) const;
};

}  // namespace dbcell

#endif
