#ifndef DBCELL_CARTAN_HPP
#define DBCELL_CARTAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "dbcell/errors.hpp"
#include "dbcell/rational.hpp"

namespace dbcell {

// Generalized Cartan matrix of finite type together with its minimal positive
// integer symmetrizer D, so that D_a * C[a][b] is symmetric.
class CartanMatrix {
 public:
  static CartanMatrix validate(const std::vector<std::vector<long>>& entries,
                               std::optional<std::string> label = std::nullopt);
  static CartanMatrix from_label(const std::string& label);

  int rank() const { return rank_; }
  long c(int a, int b) const { return c_[idx(a)][idx(b)]; }
  long d(int a) const { return d_[idx(a)]; }
  const std::string& label() const { return label_; }

  // Entry of the inverse Cartan matrix, exact.
  Rat c_inverse(int a, int b) const { return cinv_[idx(a)][idx(b)]; }

  bool operator==(const CartanMatrix& o) const { return c_ == o.c_; }

 private:
  CartanMatrix() = default;
  int idx(int a) const {
    if (a < 1 || a > rank_) throw IndexOutOfRange("root index " + std::to_string(a));
    return a - 1;
  }

  int rank_ = 0;
  std::vector<std::vector<long>> c_;
  std::vector<long> d_;
  std::vector<std::vector<Rat>> cinv_;
  std::string label_;
};

}  // namespace dbcell

#endif
