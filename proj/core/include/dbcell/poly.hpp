#ifndef DBCELL_POLY_HPP
#define DBCELL_POLY_HPP

#include <string>
#include <vector>

#include "dbcell/rational.hpp"
#include "dbcell/varpool.hpp"

namespace dbcell {

// Multivariate polynomial over Q in canonical form: the variable list is the
// sorted support, terms are sorted graded-lexicographically, leading term
// first, no zero coefficients. Equality of canonical forms is mathematical
// equality.
class Poly {
 public:
  struct Term {
    std::vector<int> exps;  // aligned with vars()
    Rat coeff;
  };

  Poly() = default;  // zero
  explicit Poly(const Rat& constant);
  static Poly variable(VarId v);
  static Poly monomial(const Rat& coeff, const std::vector<std::pair<VarId, int>>& exps);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  bool is_one() const;
  Rat constant_value() const;  // requires is_constant()

  const std::vector<VarId>& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  int degree(VarId v) const;  // max exponent, 0 if absent; -1... see impl
  long total_degree() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly mul_scalar(const Rat& c) const;
  Poly pow(long e) const;  // e >= 0

  bool operator==(const Poly& o) const { return vars_ == o.vars_ && same_terms(o); }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Leading coefficient under the graded-lex order.
  const Rat& leading_coeff() const;

  // All coefficients strictly positive (the sufficient positivity test).
  bool all_coeffs_positive() const;

  std::string str() const;

  // gcd of canonical forms; result is primitive with positive leading
  // coefficient (1 for constants). poly_divexact throws IntegrityError if the
  // division is not exact.
  friend Poly poly_gcd(const Poly& a, const Poly& b);
  friend Poly poly_divexact(const Poly& a, const Poly& b);

  // Scale so coefficients are coprime integers and the leading one positive.
  Poly primitive_normalized() const;
  // The rational c with *this == c * primitive_normalized().
  Rat content_signed() const;

  // Componentwise-minimal exponent over all terms (the monomial content).
  std::vector<std::pair<VarId, int>> monomial_content() const;
  Poly divided_by_monomial(const std::vector<std::pair<VarId, int>>& mono) const;

 private:
  friend class PolyBuilder;
  bool same_terms(const Poly& o) const;
  void normalize();  // sort terms, drop zeros, compress vars

  std::vector<VarId> vars_;
  std::vector<Term> terms_;
};

}  // namespace dbcell

#endif
