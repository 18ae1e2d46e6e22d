#include "dbcell/posexpr.hpp"
#include <cctype>

#include <sstream>
#include <unordered_map>

#include "dbcell/errors.hpp"

namespace dbcell {

PosExpr::Ptr PosExpr::constant(const Rat& c) {
  if (c <= 0) throw NegativeConstant("constant " + rat_str(c) + " in positive presentation");
  auto node = std::shared_ptr<PosExpr>(new PosExpr());
  node->op_ = Op::Const;
  node->value_ = c;
  return node;
}

PosExpr::Ptr PosExpr::variable(VarId v) {
  auto node = std::shared_ptr<PosExpr>(new PosExpr());
  node->op_ = Op::Var;
  node->var_ = v;
  return node;
}

PosExpr::Ptr PosExpr::add(Ptr a, Ptr b) {
  auto node = std::shared_ptr<PosExpr>(new PosExpr());
  node->op_ = Op::Add;
  node->lhs_ = std::move(a);
  node->rhs_ = std::move(b);
  return node;
}

PosExpr::Ptr PosExpr::mul(Ptr a, Ptr b) {
  auto node = std::shared_ptr<PosExpr>(new PosExpr());
  node->op_ = Op::Mul;
  node->lhs_ = std::move(a);
  node->rhs_ = std::move(b);
  return node;
}

PosExpr::Ptr PosExpr::div(Ptr a, Ptr b) {
  auto node = std::shared_ptr<PosExpr>(new PosExpr());
  node->op_ = Op::Div;
  node->lhs_ = std::move(a);
  node->rhs_ = std::move(b);
  return node;
}

PosExpr::Ptr PosExpr::pow(Ptr a, long e) {
  auto node = std::shared_ptr<PosExpr>(new PosExpr());
  node->op_ = Op::Pow;
  node->lhs_ = std::move(a);
  node->exponent_ = e;
  return node;
}

namespace {

RationalFunction to_ratfun_memo(const PosExpr* node,
                                std::unordered_map<const PosExpr*, RationalFunction>& memo) {
  auto it = memo.find(node);
  if (it != memo.end()) return it->second;
  RationalFunction out;
  switch (node->op()) {
    case PosExpr::Op::Const:
      out = RationalFunction(node->value());
      break;
    case PosExpr::Op::Var:
      out = RationalFunction::variable(node->var_id());
      break;
    case PosExpr::Op::Add:
      out = to_ratfun_memo(node->lhs().get(), memo) + to_ratfun_memo(node->rhs().get(), memo);
      break;
    case PosExpr::Op::Mul:
      out = to_ratfun_memo(node->lhs().get(), memo) * to_ratfun_memo(node->rhs().get(), memo);
      break;
    case PosExpr::Op::Div:
      out = to_ratfun_memo(node->lhs().get(), memo) / to_ratfun_memo(node->rhs().get(), memo);
      break;
    case PosExpr::Op::Pow:
      out = to_ratfun_memo(node->lhs().get(), memo).pow(node->exponent());
      break;
  }
  memo.emplace(node, out);
  return out;
}

Int trop_eval_memo(const PosExpr* node, const std::map<VarId, Int>& point,
                   std::unordered_map<const PosExpr*, Int>& memo) {
  auto it = memo.find(node);
  if (it != memo.end()) return it->second;
  Int out;
  switch (node->op()) {
    case PosExpr::Op::Const:
      out = 0;  // every constant tropicalizes to zero
      break;
    case PosExpr::Op::Var: {
      auto pt = point.find(node->var_id());
      if (pt == point.end())
        throw UndefinedVariable("tropical point misses " + var_name(node->var_id()));
      out = pt->second;
      break;
    }
    case PosExpr::Op::Add: {
      Int a = trop_eval_memo(node->lhs().get(), point, memo);
      Int b = trop_eval_memo(node->rhs().get(), point, memo);
      out = a > b ? a : b;
      break;
    }
    case PosExpr::Op::Mul:
      out = trop_eval_memo(node->lhs().get(), point, memo) +
            trop_eval_memo(node->rhs().get(), point, memo);
      break;
    case PosExpr::Op::Div:
      out = trop_eval_memo(node->lhs().get(), point, memo) -
            trop_eval_memo(node->rhs().get(), point, memo);
      break;
    case PosExpr::Op::Pow:
      out = trop_eval_memo(node->lhs().get(), point, memo) * node->exponent();
      break;
  }
  memo.emplace(node, out);
  return out;
}

void trop_str_rec(const PosExpr* node, std::ostringstream& os) {
  switch (node->op()) {
    case PosExpr::Op::Const:
      os << "0";
      break;
    case PosExpr::Op::Var:
      os << var_name(node->var_id());
      break;
    case PosExpr::Op::Add:
      os << "max(";
      trop_str_rec(node->lhs().get(), os);
      os << ", ";
      trop_str_rec(node->rhs().get(), os);
      os << ")";
      break;
    case PosExpr::Op::Mul:
      os << "(";
      trop_str_rec(node->lhs().get(), os);
      os << " + ";
      trop_str_rec(node->rhs().get(), os);
      os << ")";
      break;
    case PosExpr::Op::Div:
      os << "(";
      trop_str_rec(node->lhs().get(), os);
      os << " - ";
      trop_str_rec(node->rhs().get(), os);
      os << ")";
      break;
    case PosExpr::Op::Pow:
      os << node->exponent() << "*(";
      trop_str_rec(node->lhs().get(), os);
      os << ")";
      break;
  }
}

}  // namespace

RationalFunction PosExpr::to_ratfun() const {
  std::unordered_map<const PosExpr*, RationalFunction> memo;
  return to_ratfun_memo(this, memo);
}

Int PosExpr::trop_eval(const std::map<VarId, Int>& point) const {
  std::unordered_map<const PosExpr*, Int> memo;
  return trop_eval_memo(this, point, memo);
}

std::string PosExpr::trop_str() const {
  std::ostringstream os;
  trop_str_rec(this, os);
  return os.str();
}

namespace {

struct PosParser {
  const std::string& text;
  std::size_t pos = 0;
  explicit PosParser(const std::string& t) : text(t) {}

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

  PosExpr::Ptr expr() {
    auto acc = term();
    while (true) {
      if (eat('+'))
        acc = PosExpr::add(acc, term());
      else if (eat('-'))
        throw NegativeConstant("subtraction in positive presentation");
      else
        return acc;
    }
  }
  PosExpr::Ptr term() {
    auto acc = factor();
    while (true) {
      if (eat('*'))
        acc = PosExpr::mul(acc, factor());
      else if (eat('/'))
        acc = PosExpr::div(acc, factor());
      else
        return acc;
    }
  }
  PosExpr::Ptr factor() {
    skip_ws();
    if (pos < text.size() && text[pos] == '-')
      throw NegativeConstant("negative constant in positive presentation");
    auto base = atom();
    if (eat('^')) {
      skip_ws();
      bool neg = eat('-');
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw ParseError("expected exponent");
      long e = std::stol(text.substr(start, pos - start));
      return PosExpr::pow(base, neg ? -e : e);
    }
    return base;
  }
  PosExpr::Ptr atom() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of positive expression");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      auto inner = expr();
      if (!eat(')')) throw ParseError("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      return PosExpr::constant(Rat(text.substr(start, pos - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      auto ident_char = [](char ch) {
        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == ':';
      };
      while (pos < text.size() && ident_char(text[pos])) ++pos;
      return PosExpr::variable(var(text.substr(start, pos - start)));
    }
    throw ParseError(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

PosExpr::Ptr parse_posexpr(const std::string& text) {
  PosParser p(text);
  auto e = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError("trailing input in positive expression");
  return e;
}

std::vector<Int> TropicalMap::eval(const std::vector<Int>& point) const {
  if (point.size() != source_vars.size())
    throw IndexOutOfRange("tropical point has wrong dimension");
  std::map<VarId, Int> named;
  for (std::size_t i = 0; i < source_vars.size(); ++i) named.emplace(source_vars[i], point[i]);
  std::vector<Int> out;
  out.reserve(target_vars.size());
  for (VarId v : target_vars) {
    auto it = presentations.find(v);
    if (it == presentations.end()) throw UnknownVariable("no component for " + var_name(v));
    out.push_back(it->second->trop_eval(named));
  }
  return out;
}

}  // namespace dbcell
