#include "dbcell/group.hpp"

#include <algorithm>

namespace dbcell {

MatQ sbar(int alpha, int n) {
  // e_alpha(-1) e_{-alpha}(1) e_alpha(-1): the 2x2 block [[0,-1],[1,0]]
  MatQ m = MatQ::identity(n);
  if (alpha < 1 || alpha > n - 1) throw IndexOutOfRange("sbar index");
  m(alpha - 1, alpha - 1) = 0;
  m(alpha, alpha) = 0;
  m(alpha - 1, alpha) = -1;
  m(alpha, alpha - 1) = 1;
  return m;
}

MatQ sbar_inverse(int alpha, int n) { return sbar(alpha, n).inverse(); }

MatQ lift(const WeylWord& word, int n) {
  CartanMatrix cartan = CartanMatrix::from_label("A" + std::to_string(n - 1));
  WeylGroup weyl(cartan);
  if (!weyl.is_reduced(word)) throw NotReduced("lift needs a reduced word");
  MatQ m = MatQ::identity(n);
  for (int a : word) m = m * sbar(a, n);
  return m;
}

namespace {

int rank_of(const MatQ& x, int row_from, int row_to, int col_from, int col_to) {
  // rank of the block rows [row_from, row_to) x cols [col_from, col_to)
  int rows = row_to - row_from, cols = col_to - col_from;
  if (rows <= 0 || cols <= 0) return 0;
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = x(row_from + i, col_from + j);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i)
      if (a[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int i = rank + 1; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      Rat f = a[i][col] / a[rank][col];
      for (int j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<int> bruhat_plus_permutation(const MatQ& x) {
  // x in B+ w B+ iff rank(x[i.., ..j]) = #{k <= j : w(k) >= i} for all i, j.
  int n = x.size();
  std::vector<int> w(n + 1, 0);  // 1-based
  for (int j = 1; j <= n; ++j) {
    for (int i = n; i >= 1; --i) {
      int with = rank_of(x, i - 1, n, 0, j);
      int without = rank_of(x, i - 1, n, 0, j - 1);
      if (with > without) {
        w[j] = i;
        break;
      }
    }
    if (w[j] == 0) throw SingularMatrix("matrix is singular");
  }
  return std::vector<int>(w.begin() + 1, w.end());
}

std::vector<int> bruhat_minus_permutation(const MatQ& x) {
  // northeast profile: rank(x[..i, j..]) = #{k >= j : w(k) <= i}
  int n = x.size();
  std::vector<int> w(n + 1, 0);
  for (int j = n; j >= 1; --j) {
    for (int i = 1; i <= n; ++i) {
      int with = rank_of(x, 0, i, j - 1, n);
      int without = rank_of(x, 0, i, j, n);
      if (with > without) {
        w[j] = i;
        break;
      }
    }
    if (w[j] == 0) throw SingularMatrix("matrix is singular");
  }
  return std::vector<int>(w.begin() + 1, w.end());
}

std::vector<int> word_permutation(const WeylWord& word, int n) {
  // s_a is the transposition (a, a+1); an in-place position swap multiplies
  // on the right, so walking the word left to right builds s_{a_1}...s_{a_l}.
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  for (int a : word) {
    if (a < 1 || a >= n) throw IndexOutOfRange("letter " + std::to_string(a));
    std::swap(perm[a - 1], perm[a]);
  }
  return perm;
}

bool in_double_cell(const MatQ& x, const WeylWord& u, const WeylWord& v) {
  return bruhat_plus_permutation(x) == word_permutation(u, x.size()) &&
         bruhat_minus_permutation(x) == word_permutation(v, x.size());
}

MatQ twist(const MatQ& x, const WeylWord& u, const WeylWord& v) {
  int n = x.size();
  if (!in_double_cell(x, u, v)) throw NotInCell("matrix is not in the (u,v) cell");
  MatQ ubar_inv = lift(u, n).inverse();
  MatQ vinv_bar = lift(WeylGroup::inverse(v), n);
  MatQ a = ubar_inv * x;
  MatQ b = x * vinv_bar;
  MatQ la = std::get<0>(gauss(a));
  MatQ ub = std::get<2>(gauss(b));
  MatQ middle = la.inverse() * (a * vinv_bar) * ub.inverse();
  return middle.transpose();
}

TorusCoset TorusCoset::of(const MatQ& x) {
  TorusCoset coset;
  coset.representative = x;
  int n = x.size();
  coset.generic = true;
  for (int i = 0; i < n; ++i)
    if (x(0, i) == 0 || x(i, 0) == 0) coset.generic = false;
  if (coset.generic) {
    // x'_{ij} = r_i x_{ij} c_j with r_1 = 1, first row and column sent to 1
    std::vector<Rat> r(n), c(n);
    r[0] = 1;
    for (int j = 0; j < n; ++j) c[j] = 1 / x(0, j);
    for (int i = 1; i < n; ++i) r[i] = 1 / (x(i, 0) * c[0]);
    coset.normal_form = MatQ(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) coset.normal_form(i, j) = r[i] * x(i, j) * c[j];
  }
  return coset;
}

bool TorusCoset::equals(const TorusCoset& other) const {
  if (generic && other.generic) return normal_form == other.normal_form;
  // fallback: zero patterns plus all torus-invariant cross ratios
  const MatQ& a = representative;
  const MatQ& b = other.representative;
  int n = a.size();
  if (n != b.size()) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((a(i, j) == 0) != (b(i, j) == 0)) return false;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
          if (i == k || j == l) continue;
          if (a(i, j) == 0 || a(k, l) == 0 || a(i, l) == 0 || a(k, j) == 0) continue;
          if (a(i, j) * a(k, l) / (a(i, l) * a(k, j)) !=
              b(i, j) * b(k, l) / (b(i, l) * b(k, j)))
            return false;
        }
  return true;
}

}  // namespace dbcell
