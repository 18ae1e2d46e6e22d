#include "dbcell/ratfun.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "dbcell/errors.hpp"

namespace dbcell {

RationalFunction::RationalFunction(const Poly& num, const Poly& den) : num_(num), den_(den) {
  reduce();
}

RationalFunction RationalFunction::variable(VarId v) {
  RationalFunction f;
  f.num_ = Poly::variable(v);
  f.den_ = Poly(Rat(1));
  return f;
}

RationalFunction RationalFunction::variable(const std::string& name) {
  return variable(var(name));
}

RationalFunction RationalFunction::from_coprime(Poly num, Poly den) {
  if (den.is_zero()) throw DivisionByZero("zero denominator");
  RationalFunction f;
  if (num.is_zero()) return f;
  f.num_ = std::move(num);
  f.den_ = std::move(den);
  Rat c = f.den_.content_signed();
  if (c != 1) {
    Rat inv = Rat(1) / c;
    f.den_ = f.den_.mul_scalar(inv);
    f.num_ = f.num_.mul_scalar(inv);
  }
  return f;
}

void RationalFunction::reduce() {
  if (den_.is_zero()) throw DivisionByZero("zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(Rat(1));
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = poly_divexact(num_, g);
    den_ = poly_divexact(den_, g);
  }
  Rat c = den_.content_signed();
  if (c != 1) {
    Rat inv = Rat(1) / c;
    den_ = den_.mul_scalar(inv);
    num_ = num_.mul_scalar(inv);
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DivisionByZero();
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
  if (e == 0) return RationalFunction(Rat(1));
  if (e < 0) return inv().pow(-e);
  RationalFunction r(Rat(1));
  RationalFunction base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return r;
}

std::vector<VarId> RationalFunction::variables() const {
  std::vector<VarId> out;
  std::set_union(num_.vars().begin(), num_.vars().end(), den_.vars().begin(),
                 den_.vars().end(), std::back_inserter(out));
  return out;
}

namespace {

RationalFunction substitute_poly(const Poly& p,
                                 const std::map<VarId, RationalFunction>& assignment) {
  // power tables per variable position
  std::vector<std::vector<RationalFunction>> powers(p.vars().size());
  for (std::size_t i = 0; i < p.vars().size(); ++i) {
    auto it = assignment.find(p.vars()[i]);
    if (it == assignment.end())
      throw UndefinedVariable("no image for " + var_name(p.vars()[i]));
    int maxe = p.degree(p.vars()[i]);
    powers[i].resize(maxe + 1);
    powers[i][0] = RationalFunction(Rat(1));
    for (int e = 1; e <= maxe; ++e) powers[i][e] = powers[i][e - 1] * it->second;
  }
  RationalFunction acc;
  for (const auto& t : p.terms()) {
    RationalFunction term(t.coeff);
    for (std::size_t i = 0; i < t.exps.size(); ++i)
      if (t.exps[i] != 0) term *= powers[i][t.exps[i]];
    acc += term;
  }
  return acc;
}

}  // namespace

RationalFunction RationalFunction::substitute(
    const std::map<VarId, RationalFunction>& assignment) const {
  RationalFunction n = substitute_poly(num_, assignment);
  RationalFunction d = substitute_poly(den_, assignment);
  if (d.is_zero()) throw PoleAtSubstitution();
  return n / d;
}

RationalFunction RationalFunction::rename(const std::map<VarId, VarId>& renaming) const {
  std::map<VarId, RationalFunction> assignment;
  for (VarId v : variables()) {
    auto it = renaming.find(v);
    assignment.emplace(v, RationalFunction::variable(it == renaming.end() ? v : it->second));
  }
  return substitute(assignment);
}

long RationalFunction::variable_degree(VarId v) const {
  if (is_zero()) throw ZeroFunction("degree of the zero function");
  return static_cast<long>(num_.degree(v)) - static_cast<long>(den_.degree(v));
}

RationalFunction::Positivity RationalFunction::is_positive() const {
  if (is_zero()) throw ZeroFunction("positivity of the zero function");
  bool num_pos = num_.all_coeffs_positive();
  bool den_pos = den_.all_coeffs_positive();
  bool num_neg = (-num_).all_coeffs_positive();
  bool den_neg = (-den_).all_coeffs_positive();
  if ((num_pos && den_pos) || (num_neg && den_neg)) return Positivity::True;
  if ((num_neg && den_pos) || (num_pos && den_neg)) return Positivity::False;
  // Sample a few positive points; a genuinely positive function cannot be
  // <= 0 anywhere on the positive orthant.
  auto vars = variables();
  for (long trial : {1L, 2L, 3L, 5L, 7L}) {
    std::map<VarId, RationalFunction> point;
    Rat val(trial, 2);
    for (VarId v : vars) {
      point.emplace(v, RationalFunction(val));
      val += Rat(1, 3);
    }
    try {
      RationalFunction at = substitute(point);
      if (at.is_zero()) return Positivity::False;
      Rat q = at.num().constant_value() / at.den().constant_value();
      if (q < 0) return Positivity::False;
    } catch (const PoleAtSubstitution&) {
      continue;
    }
  }
  return Positivity::Inconclusive;
}

std::string RationalFunction::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------------------
// parser
// ---------------------------------------------------------------------------

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  RationalFunction parse_expr() {
    RationalFunction acc = parse_term();
    while (true) {
      if (eat('+'))
        acc += parse_term();
      else if (eat('-'))
        acc -= parse_term();
      else
        return acc;
    }
  }

  RationalFunction parse_term() {
    RationalFunction acc = parse_factor();
    while (true) {
      if (eat('*'))
        acc *= parse_factor();
      else if (eat('/'))
        acc /= parse_factor();
      else
        return acc;
    }
  }

  RationalFunction parse_factor() {
    if (eat('-')) return -parse_factor();
    RationalFunction base = parse_atom();
    if (eat('^')) {
      long e = parse_int();
      return base.pow(e);
    }
    return base;
  }

  long parse_int() {
    skip_ws();
    bool neg = eat('-');
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError("expected integer at offset " + std::to_string(pos));
    long value = std::stol(text.substr(start, pos - start));
    return neg ? -value : value;
  }

  RationalFunction parse_atom() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      RationalFunction inner = parse_expr();
      if (!eat(')')) throw ParseError("expected ')' at offset " + std::to_string(pos));
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      return RationalFunction(Rat(text.substr(start, pos - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      auto ident_char = [](char ch) {
        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == ':' ||
               ch == '[' || ch == ']';
      };
      while (pos < text.size() && ident_char(text[pos])) ++pos;
      return RationalFunction::variable(text.substr(start, pos - start));
    }
    throw ParseError(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

RationalFunction parse_ratfun(const std::string& text) {
  Parser p(text);
  RationalFunction f = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size())
    throw ParseError("trailing input at offset " + std::to_string(p.pos));
  return f;
}

}  // namespace dbcell
