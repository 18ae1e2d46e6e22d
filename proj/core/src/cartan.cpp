#include "dbcell/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace dbcell {
namespace {

// Leading principal minors of the symmetrized matrix must all be positive.
bool positive_definite(const std::vector<std::vector<Rat>>& m) {
  int n = static_cast<int>(m.size());
  std::vector<std::vector<Rat>> a = m;
  for (int k = 0; k < n; ++k) {
    if (a[k][k] <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      Rat f = a[i][k] / a[k][k];
      for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return true;
}

std::vector<std::vector<Rat>> invert(const std::vector<std::vector<long>>& c) {
  int n = static_cast<int>(c.size());
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = c[i][j];
    a[i][n + i] = 1;
  }
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) throw NotGeneralizedCartan("Cartan matrix is singular");
    std::swap(a[k], a[p]);
    Rat piv = a[k][k];
    for (int j = 0; j < 2 * n; ++j) a[k][j] /= piv;
    for (int i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rat f = a[i][k];
      for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace

CartanMatrix CartanMatrix::validate(const std::vector<std::vector<long>>& entries,
                                    std::optional<std::string> label) {
  int n = static_cast<int>(entries.size());
  if (n == 0) throw NotGeneralizedCartan("empty matrix");
  for (const auto& row : entries)
    if (static_cast<int>(row.size()) != n) throw NotGeneralizedCartan("matrix is not square");
  for (int i = 0; i < n; ++i) {
    if (entries[i][i] != 2) throw NotGeneralizedCartan("diagonal entry is not 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (entries[i][j] > 0) throw NotGeneralizedCartan("positive off-diagonal entry");
      if ((entries[i][j] == 0) != (entries[j][i] == 0))
        throw NotGeneralizedCartan("zero-pattern asymmetry");
    }
  }

  // Minimal positive integer symmetrizer, propagated along the Coxeter graph.
  std::vector<Rat> d(n, 0);
  for (int start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (i == j || entries[i][j] == 0) continue;
        Rat need = d[i] * entries[i][j] / entries[j][i];  // d_j C_ji = d_i C_ij
        if (d[j] == 0) {
          d[j] = need;
          stack.push_back(j);
        } else if (d[j] != need) {
          throw NotSymmetrizable();
        }
      }
    }
  }
  Int lcm_den = 1, gcd_num = 0;
  for (const auto& q : d) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den().get_mpz_t());
  }
  std::vector<long> dint(n);
  for (int i = 0; i < n; ++i) {
    Rat scaled = d[i] * Rat(lcm_den);
    dint[i] = rat_to_long(scaled);
    Int g;
    mpz_gcd_ui(g.get_mpz_t(), gcd_num.get_mpz_t(), static_cast<unsigned long>(dint[i]));
    gcd_num = g;
  }
  long g = gcd_num.get_si();
  for (auto& v : dint) v /= g;

  std::vector<std::vector<Rat>> sym(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sym[i][j] = Rat(dint[i]) * entries[i][j];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (sym[i][j] != sym[j][i]) throw NotSymmetrizable();
  if (!positive_definite(sym)) throw NotFiniteType();

  CartanMatrix cm;
  cm.rank_ = n;
  cm.c_ = entries;
  cm.d_ = dint;
  cm.cinv_ = invert(entries);
  cm.label_ = label.value_or("");
  return cm;
}

CartanMatrix CartanMatrix::from_label(const std::string& label) {
  if (label.size() < 2) throw NotGeneralizedCartan("bad type label: " + label);
  char family = static_cast<char>(std::toupper(label[0]));
  int n = 0;
  try {
    n = std::stoi(label.substr(1));
  } catch (...) {
    throw NotGeneralizedCartan("bad type label: " + label);
  }
  if (n < 1) throw NotGeneralizedCartan("bad rank in label: " + label);
  auto chain = [&](int len) {
    std::vector<std::vector<long>> c(len, std::vector<long>(len, 0));
    for (int i = 0; i < len; ++i) {
      c[i][i] = 2;
      if (i + 1 < len) c[i][i + 1] = c[i + 1][i] = -1;
    }
    return c;
  };
  std::vector<std::vector<long>> c;
  switch (family) {
    case 'A':
      c = chain(n);
      break;
    case 'B':
      if (n < 2) throw NotGeneralizedCartan("B requires rank >= 2");
      c = chain(n);
      c[n - 2][n - 1] = -2;  // alpha_{n-1} long, alpha_n short
      break;
    case 'C':
      if (n < 2) throw NotGeneralizedCartan("C requires rank >= 2");
      c = chain(n);
      c[n - 1][n - 2] = -2;
      break;
    case 'D':
      if (n < 3) throw NotGeneralizedCartan("D requires rank >= 3");
      c = chain(n - 1);
      c.resize(n);
      for (auto& row : c) row.resize(n, 0);
      c[n - 1][n - 1] = 2;
      c[n - 1][n - 3] = c[n - 3][n - 1] = -1;
      c[n - 1][n - 2] = c[n - 2][n - 1] = 0;
      break;
    case 'E':
      if (n < 6 || n > 8) throw NotGeneralizedCartan("E requires rank 6..8");
      c = chain(n - 1);
      c.resize(n);
      for (auto& row : c) row.resize(n, 0);
      c[n - 1][n - 1] = 2;
      c[n - 1][2] = c[2][n - 1] = -1;  // branch node at position 3
      break;
    case 'F':
      if (n != 4) throw NotGeneralizedCartan("F requires rank 4");
      c = chain(4);
      c[1][2] = -2;
      c[2][1] = -1;
      break;
    case 'G':
      if (n != 2) throw NotGeneralizedCartan("G requires rank 2");
      c = {{2, -1}, {-3, 2}};
      break;
    default:
      throw NotGeneralizedCartan("unknown family in label: " + label);
  }
  return validate(c, label);
}

}  // namespace dbcell
