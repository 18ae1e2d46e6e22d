#include "dbcell/chart.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstdio>

namespace dbcell {

VarId chart_var(ChartKind kind, const VertexId& v) {
  return var((kind == ChartKind::A ? "A" : "X") + v.str());
}

const RationalFunction& PullbackMap::at(VarId v) const {
  auto it = images.find(v);
  if (it == images.end()) throw UnknownVariable("no image for " + var_name(v));
  return it->second;
}

PullbackMap PullbackMap::compose(const PullbackMap& outer, const PullbackMap& inner) {
  PullbackMap out;
  for (const auto& [v, f] : outer.images) out.images.emplace(v, f.substitute(inner.images));
  return out;
}

PullbackMap PullbackMap::identity(const std::vector<VarId>& vars) {
  PullbackMap out;
  for (VarId v : vars) out.images.emplace(v, RationalFunction::variable(v));
  return out;
}

bool PullbackMap::is_identity() const {
  for (const auto& [v, f] : images)
    if (f != RationalFunction::variable(v)) return false;
  return true;
}

PullbackMap x_mutation_pullback(const Seed& seed, const VertexId& c, bool reduced) {
  if (seed.frozen(c)) throw FrozenVertex("X-mutation at frozen " + c.str());
  PullbackMap out;
  RationalFunction xc = RationalFunction::variable(chart_var(ChartKind::X, c));
  for (const VertexId& a : seed.vertices()) {
    if (reduced && seed.frozen(a)) continue;
    VarId target = chart_var(ChartKind::X, a);
    if (a == c) {
      out.images.emplace(target, xc.inv());
      continue;
    }
    const Rat& eac = seed.epsilon(a, c);
    if (!is_integer(eac))
      throw NonIntegerExponent("epsilon(" + a.str() + "," + c.str() + ") = " + rat_str(eac));
    RationalFunction xa = RationalFunction::variable(target);
    if (eac == 0) {
      out.images.emplace(target, xa);
      continue;
    }
    long e = rat_to_long(eac);
    RationalFunction base = RationalFunction(Rat(1)) + (e > 0 ? xc.inv() : xc);
    out.images.emplace(target, xa * base.pow(-e));
  }
  return out;
}

PullbackMap a_mutation_pullback(const Seed& seed, const VertexId& c) {
  if (seed.frozen(c)) throw FrozenVertex("A-mutation at frozen " + c.str());
  PullbackMap out;
  RationalFunction plus(Rat(1)), minus(Rat(1));
  for (const VertexId& b : seed.vertices()) {
    if (b == c) continue;
    const Rat& ecb = seed.epsilon(c, b);
    if (ecb == 0) continue;
    if (!is_integer(ecb))
      throw NonIntegerExponent("epsilon(" + c.str() + "," + b.str() + ") = " + rat_str(ecb));
    long e = rat_to_long(ecb);
    RationalFunction ab = RationalFunction::variable(chart_var(ChartKind::A, b));
    if (e > 0)
      plus *= ab.pow(e);
    else
      minus *= ab.pow(-e);
  }
  for (const VertexId& a : seed.vertices()) {
    VarId target = chart_var(ChartKind::A, a);
    if (a == c) {
      RationalFunction ac = RationalFunction::variable(target);
      out.images.emplace(target, (plus + minus) / ac);
    } else {
      out.images.emplace(target, RationalFunction::variable(target));
    }
  }
  return out;
}

PullbackMap p_pullback(const Seed& seed, bool reduced) {
  PullbackMap out;
  for (const VertexId& a : seed.vertices()) {
    if (reduced && seed.frozen(a)) continue;
    RationalFunction image(Rat(1));
    for (const VertexId& b : seed.vertices()) {
      const Rat& eab = seed.epsilon(a, b);
      if (eab == 0) continue;
      if (!is_integer(eab))
        throw NonIntegerExponent("p-map exponent epsilon(" + a.str() + "," + b.str() +
                                 ") = " + rat_str(eab));
      image *= RationalFunction::variable(chart_var(ChartKind::A, b)).pow(rat_to_long(eab));
    }
    out.images.emplace(chart_var(ChartKind::X, a), image);
  }
  return out;
}

PullbackMap iso_pullback(ChartKind kind, const std::map<VertexId, VertexId>& sigma) {
  PullbackMap out;
  for (const auto& [from, to] : sigma)
    out.images.emplace(chart_var(kind, to),
                       RationalFunction::variable(chart_var(kind, from)));
  return out;
}

RationalFunction poisson_bracket(const Seed& seed, const VertexId& a, const VertexId& b) {
  Rat w = seed.epsilon_hat(a, b);
  RationalFunction xa = RationalFunction::variable(chart_var(ChartKind::X, a));
  RationalFunction xb = RationalFunction::variable(chart_var(ChartKind::X, b));
  return RationalFunction(w) * xa * xb;
}

ClusterTransformation::ClusterTransformation(Seed source, std::vector<TransformStep> steps)
    : source_(std::move(source)), target_(replay(source_, steps)), steps_(std::move(steps)) {}

Seed ClusterTransformation::replay(const Seed& source, const std::vector<TransformStep>& steps,
                                   const Seed* expected) {
  Seed current = source;
  for (const auto& step : steps) {
    if (step.kind == TransformStep::Kind::Mutation)
      current = current.mutate(step.vertex);
    else
      current = current.apply_isomorphism(step.sigma);
  }
  if (expected && !(current == *expected))
    throw ReplayMismatch("replayed seed differs from the expected target");
  return current;
}

ClusterTransformation ClusterTransformation::inverse() const {
  std::vector<TransformStep> rev;
  rev.reserve(steps_.size());
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    if (it->kind == TransformStep::Kind::Mutation) {
      rev.push_back(*it);  // mutation is involutive
    } else {
      std::map<VertexId, VertexId> inv;
      for (const auto& [from, to] : it->sigma) inv.emplace(to, from);
      rev.push_back(TransformStep::isomorphism(std::move(inv)));
    }
  }
  return ClusterTransformation(target_, std::move(rev));
}

ClusterTransformation ClusterTransformation::restrict_to_unfrozen() const {
  Seed current = source_;
  std::vector<TransformStep> out;
  for (const auto& s : steps_) {
    if (s.kind == TransformStep::Kind::Mutation) {
      out.push_back(s);
      current = current.mutate(s.vertex);
    } else {
      std::map<VertexId, VertexId> restricted;
      for (const auto& [from, to] : s.sigma)
        if (!current.frozen(from)) restricted.emplace(from, to);
      out.push_back(TransformStep::isomorphism(std::move(restricted)));
      current = current.apply_isomorphism(s.sigma);
    }
  }
  return ClusterTransformation(source_.reduced(), std::move(out));
}

ClusterTransformation ClusterTransformation::then(const ClusterTransformation& next) const {
  if (!(target_ == next.source_seed()))
    throw ReplayMismatch("composition seeds do not match");
  std::vector<TransformStep> all = steps_;
  all.insert(all.end(), next.steps().begin(), next.steps().end());
  return ClusterTransformation(source_, std::move(all));
}

namespace {

// Rational function as coeff * prod factors^e with the factors normalized
// (integer-primitive, positive leading coefficient, non-constant) and merged
// by structural equality. Mutation pullbacks compose inside this form, so
// the cancellations of the exchange recurrences are exponent arithmetic
// instead of polynomial gcds.
struct FactorList {
  Rat coeff = Rat(1);
  std::map<int, long> powers;  // pool index -> exponent

  FactorList inverse() const {
    FactorList inv;
    inv.coeff = Rat(1) / coeff;
    for (const auto& [f, e] : powers) inv.powers.emplace(f, -e);
    return inv;
  }
};

// Shared pool of normalized factors. New polynomials are factored against
// the pool by exact trial division; the leftovers become new pool entries.
// Pool entries need not end up pairwise coprime, so the final conversion
// runs a pairwise refinement before skipping the full gcd.
class FactorEngine {
 public:
  FactorList of_variable(VarId v) {
    FactorList f;
    mul_poly(f, Poly::variable(v), 1);
    return f;
  }

  void mul(FactorList& target, const FactorList& other, long e) {
    if (e == 0) return;
    target.coeff *= rat_pow(other.coeff, e);
    for (const auto& [f, exp] : other.powers) add_power(target, f, exp * e);
  }

  void mul_poly(FactorList& target, const Poly& p, long e) {
    if (e == 0) return;
    if (p.is_zero()) throw DivisionByZero("zero factor");
    Rat content = p.content_signed();
    target.coeff *= rat_pow(content, e);
    Poly q = (content == 1) ? p : p.mul_scalar(Rat(1) / content);
    if (q.is_one()) return;
    for (const auto& [idx, mult] : factorize(q)) add_power(target, idx, mult * e);
  }

  // numerator and denominator as expanded polynomials (den from negatives)
  std::pair<Poly, Poly> expand(const FactorList& f) const {
    Poly num(Rat(f.coeff.get_num()));
    Poly den(Rat(f.coeff.get_den()));
    for (const auto& [idx, e] : f.powers) {
      if (e > 0)
        num = num * pool_[idx].pow(e);
      else
        den = den * pool_[idx].pow(-e);
    }
    return {num, den};
  }

  RationalFunction to_ratfun(const FactorList& f) const {
    // split numerator against denominator factors until pairwise coprime,
    // then the expanded products share no factor
    std::vector<std::pair<Poly, long>> pos, neg;
    for (const auto& [idx, e] : f.powers)
      (e > 0 ? pos : neg).emplace_back(pool_[idx], std::labs(e));
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < pos.size() && !changed; ++i) {
        if (pos[i].first.is_constant()) continue;
        for (std::size_t j = 0; j < neg.size() && !changed; ++j) {
          if (neg[j].first.is_constant()) continue;
          Poly g = poly_gcd(pos[i].first, neg[j].first);
          if (g.is_constant()) continue;
          long pe = pos[i].second, qe = neg[j].second, cancel = std::min(pe, qe);
          Poly pr = poly_divexact(pos[i].first, g);
          Poly qr = poly_divexact(neg[j].first, g);
          pos[i].first = pr;
          neg[j].first = qr;
          if (pe > cancel) pos.emplace_back(g, pe - cancel);
          if (qe > cancel) neg.emplace_back(g, qe - cancel);
          changed = true;
        }
      }
    }
    Poly num(Rat(f.coeff.get_num()));
    Poly den(Rat(f.coeff.get_den()));
    for (const auto& [p, e] : pos) num = num * p.pow(e);
    for (const auto& [p, e] : neg) den = den * p.pow(e);
    return RationalFunction::from_coprime(std::move(num), std::move(den));
  }

 private:
  static Rat rat_pow(const Rat& base, long e) {
    Rat out(1);
    for (long k = 0; k < std::labs(e); ++k) out *= base;
    return e >= 0 ? out : Rat(1) / out;
  }

  static void add_power(FactorList& target, int idx, long e) {
    if (e == 0) return;
    auto [it, fresh] = target.powers.emplace(idx, e);
    if (!fresh) {
      it->second += e;
      if (it->second == 0) target.powers.erase(it);
    }
  }

  std::vector<std::pair<int, long>> factorize(const Poly& q) {
    std::vector<std::pair<int, long>> out;
    Poly rest = q;
    while (!rest.is_constant()) {
      bool advanced = false;
      for (std::size_t i = 0; i < pool_.size(); ++i) {
        if (pool_[i].total_degree() > rest.total_degree()) continue;
        long mult = 0;
        while (true) {
          try {
            Poly next = poly_divexact(rest, pool_[i]);
            Rat c = next.content_signed();
            rest = (c == 1) ? next : next.mul_scalar(Rat(1) / c);
            ++mult;
          } catch (const IntegrityError&) {
            break;
          }
        }
        if (mult > 0) {
          out.emplace_back(static_cast<int>(i), mult);
          if (rest.is_constant()) break;
          advanced = true;
        }
      }
      if (rest.is_constant()) break;
      if (!advanced) {
        pool_.push_back(rest);
        out.emplace_back(static_cast<int>(pool_.size() - 1), 1);
        break;
      }
    }
    return out;
  }

  std::vector<Poly> pool_;
};

}  // namespace

PullbackMap ClusterTransformation::pullback(ChartKind kind, bool reduced_x) const {
  // Forward accumulation: after step k the map sends the coordinates of the
  // chart after k to functions in the source coordinates.
  bool reduced = (kind == ChartKind::X) && reduced_x;
  Seed current = source_;
  std::vector<VarId> start_vars;
  for (const VertexId& v : current.vertices())
    if (!(reduced && current.frozen(v))) start_vars.push_back(chart_var(kind, v));
  PullbackMap acc = PullbackMap::identity(start_vars);

  if (kind == ChartKind::X) {
    FactorEngine engine;
    std::map<VarId, FactorList> facc;
    for (VarId v : start_vars) facc.emplace(v, engine.of_variable(v));
    for (const auto& step : steps_) {
      if (step.kind == TransformStep::Kind::Mutation) {
        const VertexId& c = step.vertex;
        VarId cv = chart_var(kind, c);
        const FactorList fc = facc.at(cv);
        // F_c = P/Q as factored parts; 1 + F_c^{-1} = S/P and 1 + F_c = S/Q
        // with S = P + Q
        FactorList pos_part, neg_part;
        pos_part.coeff = Rat(fc.coeff.get_num());
        neg_part.coeff = Rat(fc.coeff.get_den());
        for (const auto& [idx, e] : fc.powers)
          (e > 0 ? pos_part : neg_part).powers.emplace(idx, std::labs(e));
        Poly pnum = engine.expand(pos_part).first;
        Poly qnum = engine.expand(neg_part).first;
        Poly s = pnum + qnum;
        if (s.is_zero()) throw PoleAtSubstitution("1 + X_c^{+-1} vanished");
        if (std::getenv("DBCELL_FACTOR_DEBUG")) {
          std::fprintf(stderr, "mu %s: |fc|=%zu pnum=%zu qnum=%zu s=%zu\n",
                       c.str().c_str(), fc.powers.size(), pnum.terms().size(),
                       qnum.terms().size(), s.terms().size());
        }

        std::map<VarId, FactorList> next;
        for (const VertexId& a : current.vertices()) {
          if (reduced && current.frozen(a)) continue;
          VarId av = chart_var(kind, a);
          if (a == c) {
            next.emplace(av, fc.inverse());
            continue;
          }
          const Rat& eac = current.epsilon(a, c);
          FactorList image = facc.at(av);
          if (eac != 0) {
            long e = rat_to_long(eac);
            // (1 + F_c^{-sign e})^{-e}: (S/P)^{-e} for e > 0, (S/Q)^{|e|} else
            engine.mul_poly(image, s, -e);
            engine.mul(image, e > 0 ? pos_part : neg_part, e);
          }
          next.emplace(av, std::move(image));
        }
        facc = std::move(next);
        current = current.mutate(c);
      } else {
        std::map<VarId, FactorList> next;
        for (const auto& [from, to] : step.sigma) {
          if (reduced && current.frozen(from)) continue;
          next.emplace(chart_var(kind, to), facc.at(chart_var(kind, from)));
        }
        facc = std::move(next);
        current = current.apply_isomorphism(step.sigma);
      }
    }
    PullbackMap out;
    for (const auto& [v, f] : facc) out.images.emplace(v, engine.to_ratfun(f));
    return out;
  }

  for (const auto& step : steps_) {
    if (step.kind == TransformStep::Kind::Mutation) {
      const VertexId& c = step.vertex;
      VarId cv = chart_var(kind, c);
      RationalFunction plus(Rat(1)), minus(Rat(1));
      for (const VertexId& b : current.vertices()) {
        if (b == c) continue;
        const Rat& ecb = current.epsilon(c, b);
        if (ecb == 0) continue;
        long e = rat_to_long(ecb);
        const RationalFunction& fb = acc.at(chart_var(kind, b));
        if (e > 0)
          plus *= fb.pow(e);
        else
          minus *= fb.pow(-e);
      }
      RationalFunction fc = acc.at(cv);
      PullbackMap next = acc;
      next.images[cv] = (plus + minus) / fc;
      acc = std::move(next);
      current = current.mutate(c);
    } else {
      PullbackMap next;
      for (const auto& [from, to] : step.sigma)
        next.images.emplace(chart_var(kind, to), acc.at(chart_var(kind, from)));
      acc = std::move(next);
      current = current.apply_isomorphism(step.sigma);
    }
  }
  return acc;
}

}  // namespace dbcell

