#ifndef DBCELL_RATFUN_HPP
#define DBCELL_RATFUN_HPP

#include <map>
#include <string>

#include "dbcell/poly.hpp"

namespace dbcell {

// Exact rational function over Q in named variables, kept in canonical form:
// gcd(num, den) = 1 and den is an integer-primitive polynomial with positive
// leading coefficient under the graded-lex order. Structural equality of
// canonical forms is mathematical equality.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rat(1)) {}  // zero
  RationalFunction(const Rat& c) : num_(c), den_(Rat(1)) {}
  RationalFunction(const Poly& num, const Poly& den);
  static RationalFunction variable(VarId v);
  static RationalFunction variable(const std::string& name);
  // Caller guarantees gcd(num, den) = 1; skips the reduction, normalizes only
  // the denominator scaling.
  static RationalFunction from_coprime(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction&, const RationalFunction&);
  friend RationalFunction operator-(const RationalFunction&, const RationalFunction&);
  friend RationalFunction operator*(const RationalFunction&, const RationalFunction&);
  friend RationalFunction operator/(const RationalFunction&, const RationalFunction&);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  RationalFunction pow(long e) const;  // negative allowed
  RationalFunction inv() const;

  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  // All variables occurring in numerator or denominator, sorted.
  std::vector<VarId> variables() const;

  // Simultaneous substitution; must cover every variable of *this.
  RationalFunction substitute(const std::map<VarId, RationalFunction>& assignment) const;
  RationalFunction rename(const std::map<VarId, VarId>& renaming) const;

  // deg_X(num) - deg_X(den) on the canonical form. Throws ZeroFunction on 0.
  long variable_degree(VarId v) const;

  enum class Positivity { True, False, Inconclusive };
  // Sufficient test on the canonical form: positive if numerator and
  // denominator have all-positive coefficients after sign normalization;
  // False only when certified (numerator with all-one-sign coefficients of
  // opposite signs); otherwise Inconclusive.
  Positivity is_positive() const;

  std::string str() const;

 private:
  void reduce();
  Poly num_, den_;
};

RationalFunction parse_ratfun(const std::string& text);

}  // namespace dbcell

#endif
