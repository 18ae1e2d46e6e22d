#ifndef DBCELL_MATRIX_HPP
#define DBCELL_MATRIX_HPP

#include <vector>

#include "dbcell/errors.hpp"
#include "dbcell/ratfun.hpp"
#include "dbcell/rational.hpp"

namespace dbcell {

inline bool entry_is_zero(const Rat& x) { return x == 0; }
inline bool entry_is_zero(const RationalFunction& x) { return x.is_zero(); }

// Dense square matrix over an exact field (Rat or RationalFunction).
template <class T>
class Mat {
 public:
  Mat() : n_(0) {}
  explicit Mat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, T()) {}

  static Mat identity(int n) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = T(Rat(1));
    return m;
  }

  int size() const { return n_; }
  T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const T& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }

  bool operator==(const Mat& o) const { return n_ == o.n_ && a_ == o.a_; }

  Mat operator*(const Mat& o) const {
    Mat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        const T& x = (*this)(i, k);
        if (entry_is_zero(x)) continue;
        for (int j = 0; j < n_; ++j) {
          if (entry_is_zero(o(k, j))) continue;
          r(i, j) += x * o(k, j);
        }
      }
    return r;
  }

  Mat transpose() const {
    Mat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Mat scaled(const T& c) const {
    Mat r = *this;
    for (auto& x : r.a_) x = x * c;
    return r;
  }

  // Determinant of the leading k x k block (k = n by default).
  T leading_minor(int k) const {
    Mat sub(k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub(i, j) = (*this)(i, j);
    return sub.det();
  }

  T det() const {
    Mat a = *this;
    T result = T(Rat(1));
    bool negate = false;
    for (int k = 0; k < n_; ++k) {
      int pivot = -1;
      for (int i = k; i < n_; ++i)
        if (!entry_is_zero(a(i, k))) {
          pivot = i;
          break;
        }
      if (pivot < 0) return T();
      if (pivot != k) {
        for (int j = 0; j < n_; ++j) std::swap(a(k, j), a(pivot, j));
        negate = !negate;
      }
      result = result * a(k, k);
      for (int i = k + 1; i < n_; ++i) {
        if (entry_is_zero(a(i, k))) continue;
        T f = a(i, k) / a(k, k);
        for (int j = k; j < n_; ++j) a(i, j) = a(i, j) - f * a(k, j);
      }
    }
    if (negate) result = T() - result;
    return result;
  }

  Mat inverse() const {
    Mat a = *this;
    Mat inv = identity(n_);
    for (int k = 0; k < n_; ++k) {
      int pivot = -1;
      for (int i = k; i < n_; ++i)
        if (!entry_is_zero(a(i, k))) {
          pivot = i;
          break;
        }
      if (pivot < 0) throw SingularMatrix("matrix is not invertible");
      if (pivot != k)
        for (int j = 0; j < n_; ++j) {
          std::swap(a(k, j), a(pivot, j));
          std::swap(inv(k, j), inv(pivot, j));
        }
      T p = a(k, k);
      for (int j = 0; j < n_; ++j) {
        a(k, j) = a(k, j) / p;
        inv(k, j) = inv(k, j) / p;
      }
      for (int i = 0; i < n_; ++i) {
        if (i == k || entry_is_zero(a(i, k))) continue;
        T f = a(i, k);
        for (int j = 0; j < n_; ++j) {
          a(i, j) = a(i, j) - f * a(k, j);
          inv(i, j) = inv(i, j) - f * inv(k, j);
        }
      }
    }
    return inv;
  }

 private:
  int n_;
  std::vector<T> a_;
};

using MatQ = Mat<Rat>;
using MatF = Mat<RationalFunction>;

}  // namespace dbcell

#endif
