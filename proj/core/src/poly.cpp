#include "dbcell/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "dbcell/errors.hpp"

namespace dbcell {

namespace {

struct ExpsHash {
  std::size_t operator()(const std::vector<int>& e) const {
    std::size_t h = e.size();
    for (int x : e) h = h * 1000003u + static_cast<std::size_t>(x) + 0x9e3779b9u;
    return h;
  }
};

// graded-lex, true if a comes before b (a > b in the order)
bool term_before(const std::vector<int>& a, const std::vector<int>& b) {
  long da = 0, db = 0;
  for (int x : a) da += x;
  for (int x : b) db += x;
  if (da != db) return da > db;
  return a > b;
}

}  // namespace

Poly::Poly(const Rat& constant) {
  if (constant != 0) terms_.push_back({{}, constant});
}

Poly Poly::variable(VarId v) {
  Poly p;
  p.vars_ = {v};
  p.terms_.push_back({{1}, Rat(1)});
  return p;
}

Poly Poly::monomial(const Rat& coeff, const std::vector<std::pair<VarId, int>>& exps) {
  if (coeff == 0) return Poly();
  std::map<VarId, int> acc;
  for (const auto& [v, e] : exps) acc[v] += e;
  Poly p;
  Term t;
  for (const auto& [v, e] : acc) {
    if (e == 0) continue;
    if (e < 0) throw IntegrityError("negative exponent in monomial");
    p.vars_.push_back(v);
    t.exps.push_back(e);
  }
  t.coeff = coeff;
  p.terms_.push_back(std::move(t));
  return p;
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].exps.empty() && terms_[0].coeff == 1;
}

Rat Poly::constant_value() const {
  if (!is_constant()) throw IntegrityError("polynomial is not constant");
  return terms_.empty() ? Rat(0) : terms_[0].coeff;
}

int Poly::degree(VarId v) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return 0;
  std::size_t pos = static_cast<std::size_t>(it - vars_.begin());
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exps[pos]);
  return d;
}

long Poly::total_degree() const {
  long d = 0;
  for (const auto& t : terms_) {
    long s = 0;
    for (int e : t.exps) s += e;
    d = std::max(d, s);
  }
  return d;
}

void Poly::normalize() {
  // merge duplicates
  std::unordered_map<std::vector<int>, Rat, ExpsHash> acc;
  for (auto& t : terms_) {
    auto [it, fresh] = acc.emplace(std::move(t.exps), t.coeff);
    if (!fresh) it->second += t.coeff;
  }
  // find used variable positions
  std::vector<bool> used(vars_.size(), false);
  std::vector<std::pair<std::vector<int>, Rat>> kept;
  kept.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (c == 0) continue;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) used[i] = true;
    kept.emplace_back(e, c);
  }
  std::vector<VarId> new_vars;
  std::vector<int> posmap(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (used[i]) {
      posmap[i] = static_cast<int>(new_vars.size());
      new_vars.push_back(vars_[i]);
    }
  }
  terms_.clear();
  terms_.reserve(kept.size());
  for (auto& [e, c] : kept) {
    Term t;
    t.exps.assign(new_vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (posmap[i] >= 0) t.exps[posmap[i]] = e[i];
    t.coeff = c;
    terms_.push_back(std::move(t));
  }
  vars_ = std::move(new_vars);
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return term_before(a.exps, b.exps); });
}

bool Poly::same_terms(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].exps != o.terms_[i].exps || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

namespace {

// Rewrites both polynomials over the union variable list.
void align(const Poly& a, const Poly& b, std::vector<VarId>& vars,
           std::vector<Poly::Term>& ta, std::vector<Poly::Term>& tb) {
  vars.clear();
  std::set_union(a.vars().begin(), a.vars().end(), b.vars().begin(), b.vars().end(),
                 std::back_inserter(vars));
  auto remap = [&vars](const Poly& p, std::vector<Poly::Term>& out) {
    std::vector<int> pos(p.vars().size());
    for (std::size_t i = 0; i < p.vars().size(); ++i)
      pos[i] = static_cast<int>(
          std::lower_bound(vars.begin(), vars.end(), p.vars()[i]) - vars.begin());
    out.clear();
    out.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
      Poly::Term nt;
      nt.exps.assign(vars.size(), 0);
      for (std::size_t i = 0; i < t.exps.size(); ++i) nt.exps[pos[i]] = t.exps[i];
      nt.coeff = t.coeff;
      out.push_back(std::move(nt));
    }
  };
  remap(a, ta);
  remap(b, tb);
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Poly r;
  std::vector<Poly::Term> ta, tb;
  align(a, b, r.vars_, ta, tb);
  r.terms_ = std::move(ta);
  r.terms_.insert(r.terms_.end(), tb.begin(), tb.end());
  r.normalize();
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly r;
  std::vector<Poly::Term> ta, tb;
  align(a, b, r.vars_, ta, tb);
  std::unordered_map<std::vector<int>, Rat, ExpsHash> acc;
  acc.reserve(ta.size() * tb.size());
  std::vector<int> e(r.vars_.size());
  for (const auto& x : ta) {
    for (const auto& y : tb) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = x.exps[i] + y.exps[i];
      auto [it, fresh] = acc.emplace(e, x.coeff * y.coeff);
      if (!fresh) it->second += x.coeff * y.coeff;
    }
  }
  r.terms_.reserve(acc.size());
  for (auto& [exps, c] : acc) r.terms_.push_back({exps, c});
  r.normalize();
  return r;
}

Poly Poly::mul_scalar(const Rat& c) const {
  if (c == 0) return Poly();
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Poly Poly::pow(long e) const {
  if (e < 0) throw IntegrityError("negative power of a polynomial");
  Poly r(Rat(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

const Rat& Poly::leading_coeff() const {
  if (terms_.empty()) throw ZeroFunction("leading coefficient of zero");
  return terms_[0].coeff;
}

bool Poly::all_coeffs_positive() const {
  for (const auto& t : terms_)
    if (t.coeff <= 0) return false;
  return !terms_.empty();
}

Rat Poly::content_signed() const {
  if (is_zero()) return Rat(0);
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
  }
  Rat c(num_gcd, den_lcm);
  c.canonicalize();
  if (terms_[0].coeff < 0) c = -c;
  return c;
}

Poly Poly::primitive_normalized() const {
  if (is_zero()) return *this;
  Rat c = content_signed();
  return mul_scalar(Rat(1) / c);
}

std::vector<std::pair<VarId, int>> Poly::monomial_content() const {
  std::vector<std::pair<VarId, int>> out;
  if (terms_.empty()) return out;
  std::vector<int> mins = terms_[0].exps;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < mins.size(); ++i) mins[i] = std::min(mins[i], t.exps[i]);
  for (std::size_t i = 0; i < mins.size(); ++i)
    if (mins[i] > 0) out.emplace_back(vars_[i], mins[i]);
  return out;
}

Poly Poly::divided_by_monomial(const std::vector<std::pair<VarId, int>>& mono) const {
  if (mono.empty()) return *this;
  Poly r = *this;
  for (const auto& [v, e] : mono) {
    auto it = std::find(r.vars_.begin(), r.vars_.end(), v);
    if (it == r.vars_.end()) throw IntegrityError("monomial not a factor");
    std::size_t pos = static_cast<std::size_t>(it - r.vars_.begin());
    for (auto& t : r.terms_) {
      t.exps[pos] -= e;
      if (t.exps[pos] < 0) throw IntegrityError("monomial not a factor");
    }
  }
  r.normalize();
  return r;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    Rat c = t.coeff;
    if (i == 0) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    bool has_var = false;
    for (int e : t.exps) has_var |= (e != 0);
    if (c != 1 || !has_var) {
      os << rat_str(c);
      if (has_var) os << "*";
    }
    bool first = true;
    for (std::size_t j = 0; j < t.exps.size(); ++j) {
      if (t.exps[j] == 0) continue;
      if (!first) os << "*";
      first = false;
      os << var_name(vars_[j]);
      if (t.exps[j] != 1) os << "^" << t.exps[j];
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// gcd via content / primitive-part recursion with a primitive PRS
// ---------------------------------------------------------------------------

namespace {

// Univariate view of p in variable vmain: coefficients are polynomials in the
// other variables, index = exponent of vmain.
std::vector<Poly> coeffs_in(const Poly& p, VarId vmain) {
  auto it = std::find(p.vars().begin(), p.vars().end(), vmain);
  if (it == p.vars().end()) return {p};
  std::size_t pos = static_cast<std::size_t>(it - p.vars().begin());
  int deg = 0;
  for (const auto& t : p.terms()) deg = std::max(deg, t.exps[pos]);
  std::vector<Poly> out(deg + 1);
  for (const auto& t : p.terms()) {
    std::vector<std::pair<VarId, int>> rest;
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (i == pos || t.exps[i] == 0) continue;
      rest.emplace_back(p.vars()[i], t.exps[i]);
    }
    out[t.exps[pos]] += Poly::monomial(t.coeff, rest);
  }
  return out;
}

Poly from_coeffs(const std::vector<Poly>& coeffs, VarId vmain) {
  Poly x = Poly::variable(vmain);
  Poly r;
  Poly xp(Rat(1));
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    if (!coeffs[e].is_zero()) r += coeffs[e] * xp;
    if (e + 1 < coeffs.size()) xp = xp * x;
  }
  return r;
}

int uni_deg(const std::vector<Poly>& c) {
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
    if (!c[i].is_zero()) return i;
  return -1;
}

// Pseudo-remainder of a by b (both univariate coefficient vectors, b != 0).
std::vector<Poly> prem(std::vector<Poly> a, const std::vector<Poly>& b) {
  int db = uni_deg(b);
  const Poly& lb = b[db];
  int da = uni_deg(a);
  while (da >= db && da >= 0) {
    Poly la = a[da];
    // a := lb*a - la*x^(da-db)*b
    for (auto& c : a) c = c * lb;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= la * b[i];
    a[da] = Poly();  // exact cancellation by construction
    da = uni_deg(a);
  }
  return a;
}

Poly gcd_many(const std::vector<Poly>& polys) {
  Poly g;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? p.primitive_normalized() : poly_gcd(g, p);
    if (g.is_one()) return g;
  }
  return g;
}

// Memoized cache for the univariate hot path.
std::string cache_key(const Poly& a, const Poly& b) { return a.str() + "|" + b.str(); }
std::unordered_map<std::string, Poly>& uni_cache() {
  static std::unordered_map<std::string, Poly> cache;
  return cache;
}

}  // namespace

namespace {

// gcd after both sides were stripped of monomial and rational content
Poly poly_gcd_stripped(const Poly& a, const Poly& b);

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.primitive_normalized();
  if (b.is_zero()) return a.primitive_normalized();
  if (a.is_constant() || b.is_constant()) return Poly(Rat(1));

  // strip the monomial contents first; PRS wastes enormous effort on them
  auto ma = a.monomial_content();
  auto mb = b.monomial_content();
  std::vector<std::pair<VarId, int>> shared_mono;
  for (const auto& [v, e] : ma)
    for (const auto& [w, f] : mb)
      if (v == w) shared_mono.emplace_back(v, std::min(e, f));
  Poly sa = a.divided_by_monomial(ma).primitive_normalized();
  Poly sb = b.divided_by_monomial(mb).primitive_normalized();
  Poly core = poly_gcd_stripped(sa, sb);
  if (!shared_mono.empty()) core = core * Poly::monomial(Rat(1), shared_mono);
  return core;
}

namespace {

Poly poly_gcd_stripped(const Poly& a, const Poly& b) {
  if (a.is_constant() || b.is_constant()) return Poly(Rat(1));
  if (a == b) return a;

  // cheap exact-division shortcuts catch the common full-cancellation cases
  if (a.total_degree() >= b.total_degree()) {
    try {
      poly_divexact(a, b);
      return b;
    } catch (const IntegrityError&) {
    }
  }
  if (b.total_degree() >= a.total_degree()) {
    try {
      poly_divexact(b, a);
      return a;
    } catch (const IntegrityError&) {
    }
  }

  bool univariate = a.vars().size() == 1 && b.vars() == a.vars();
  std::string key;
  if (univariate) {
    key = cache_key(a, b);
    auto it = uni_cache().find(key);
    if (it != uni_cache().end()) return it->second;
  }

  // Main variable: the one of smallest maximal degree among shared variables,
  // or any variable of either polynomial if the supports are disjoint.
  std::vector<VarId> shared;
  std::set_intersection(a.vars().begin(), a.vars().end(), b.vars().begin(), b.vars().end(),
                        std::back_inserter(shared));
  // Disjoint supports: any common divisor is constant, hence a unit over Q.
  if (shared.empty()) return Poly(Rat(1));

  VarId vmain = shared[0];
  int best = std::max(a.degree(vmain), b.degree(vmain));
  for (VarId v : shared) {
    int d = std::max(a.degree(v), b.degree(v));
    if (d < best) {
      best = d;
      vmain = v;
    }
  }

  auto ca = coeffs_in(a, vmain);
  auto cb = coeffs_in(b, vmain);
  Poly cont_a = gcd_many(ca);
  Poly cont_b = gcd_many(cb);
  Poly cont_gcd = poly_gcd(cont_a, cont_b);

  auto divall = [](std::vector<Poly>& c, const Poly& d) {
    if (d.is_one()) return;
    for (auto& p : c)
      if (!p.is_zero()) p = poly_divexact(p, d);
  };
  divall(ca, cont_a);
  divall(cb, cont_b);

  // primitive PRS
  std::vector<Poly> r0 = std::move(ca), r1 = std::move(cb);
  if (uni_deg(r0) < uni_deg(r1)) std::swap(r0, r1);
  while (true) {
    int d1 = uni_deg(r1);
    if (d1 < 0) break;
    std::vector<Poly> rem = prem(r0, r1);
    if (uni_deg(rem) < 0) {
      r0 = std::move(r1);
      r1 = std::move(rem);
      break;
    }
    // primitive part of the remainder
    Poly cont = gcd_many(rem);
    divall(rem, cont);
    r0 = std::move(r1);
    r1 = std::move(rem);
  }
  Poly g;
  if (uni_deg(r0) <= 0) {
    g = cont_gcd;  // pp-gcd is a unit
  } else {
    Poly cont0 = gcd_many(r0);
    divall(r0, cont0);
    g = from_coeffs(r0, vmain) * cont_gcd;
  }
  g = g.primitive_normalized();
  if (univariate) uni_cache().emplace(key, g);
  return g;
}

}  // namespace

Poly poly_divexact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.is_zero()) return Poly();
  if (b.is_constant()) return a.mul_scalar(Rat(1) / b.constant_value());
  Poly rem = a;
  Poly quot;
  // repeated leading-term elimination; exactness is required
  while (!rem.is_zero()) {
    // leading term of rem must be divisible by leading term of b
    const auto& rt = rem.terms()[0];
    const auto& bt = b.terms()[0];
    std::vector<std::pair<VarId, int>> mono;
    bool ok = true;
    {
      // subtract exponents, aligning variables by name
      std::map<VarId, int> e;
      for (std::size_t i = 0; i < rt.exps.size(); ++i) e[rem.vars()[i]] += rt.exps[i];
      for (std::size_t i = 0; i < bt.exps.size(); ++i) e[b.vars()[i]] -= bt.exps[i];
      for (const auto& [v, k] : e) {
        if (k < 0) {
          ok = false;
          break;
        }
        if (k > 0) mono.emplace_back(v, k);
      }
    }
    if (!ok) throw IntegrityError("inexact polynomial division");
    Poly t = Poly::monomial(rt.coeff / bt.coeff, mono);
    quot += t;
    rem = rem - t * b;
  }
  return quot;
}

}  // namespace dbcell
