#ifndef DBCELL_POSEXPR_HPP
#define DBCELL_POSEXPR_HPP

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "dbcell/rational.hpp"
#include "dbcell/ratfun.hpp"
#include "dbcell/varpool.hpp"

namespace dbcell {

// Subtraction-free expression DAG. Tropicalization is defined on such
// presentations, not on canonical forms, so these trees are kept alongside
// the exact rational functions wherever a tropical shadow is needed.
class PosExpr {
 public:
  enum class Op { Const, Var, Add, Mul, Div, Pow };
  using Ptr = std::shared_ptr<const PosExpr>;

  static Ptr constant(const Rat& c);
  static Ptr variable(VarId v);
  static Ptr add(Ptr a, Ptr b);
  static Ptr mul(Ptr a, Ptr b);
  static Ptr div(Ptr a, Ptr b);
  static Ptr pow(Ptr a, long e);

  Op op() const { return op_; }
  const Rat& value() const { return value_; }
  VarId var_id() const { return var_; }
  const Ptr& lhs() const { return lhs_; }
  const Ptr& rhs() const { return rhs_; }
  long exponent() const { return exponent_; }

  // Exact evaluation as a rational function (the positive presentation is a
  // presentation of this value).
  RationalFunction to_ratfun() const;

  // Max-plus value of the naive tropicalization at an integer point.
  Int trop_eval(const std::map<VarId, Int>& point) const;

  std::string trop_str() const;  // rendering of the tropicalized expression

 private:
  PosExpr() = default;
  Op op_ = Op::Const;
  Rat value_;
  VarId var_ = -1;
  Ptr lhs_, rhs_;
  long exponent_ = 0;
};

// Parses a subtraction-free expression ('+','*','/','^', positive integer
// literals, identifiers). A '-' anywhere raises NegativeConstant.
PosExpr::Ptr parse_posexpr(const std::string& text);

// One component of a tropicalized positive map, plus the map as a whole.
struct TropicalMap {
  std::vector<VarId> source_vars;          // coordinates on the source
  std::vector<VarId> target_vars;          // coordinates on the target
  std::map<VarId, PosExpr::Ptr> presentations;  // target var -> positive tree

  std::vector<Int> eval(const std::vector<Int>& point) const;
};

}  // namespace dbcell

#endif
