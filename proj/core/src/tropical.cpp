#include "dbcell/tropical.hpp"

#include <sstream>

namespace dbcell {

Lamination Lamination::basic_positive(const Seed& seed, const VertexId& v) {
  Lamination l;
  auto unfrozen = seed.unfrozen_vertices();
  l.coords.assign(unfrozen.size(), 0);
  for (std::size_t i = 0; i < unfrozen.size(); ++i)
    if (unfrozen[i] == v) l.coords[i] = 1;
  return l;
}

Lamination Lamination::basic_negative(const Seed& seed, const VertexId& v) {
  Lamination l = basic_positive(seed, v);
  for (auto& c : l.coords) c = -c;
  return l;
}

TropicalMap tropicalize_transformation(const ClusterTransformation& t) {
  // Same forward accumulation as the exact pullback, but with shared
  // subtraction-free trees instead of canonical forms.
  Seed current = t.source_seed();
  std::map<VarId, PosExpr::Ptr> acc;
  TropicalMap out;
  for (const VertexId& v : current.vertices()) {
    if (current.frozen(v)) continue;
    VarId id = chart_var(ChartKind::X, v);
    out.source_vars.push_back(id);
    acc.emplace(id, PosExpr::variable(id));
  }
  for (const auto& step : t.steps()) {
    if (step.kind == TransformStep::Kind::Mutation) {
      const VertexId& c = step.vertex;
      VarId cv = chart_var(ChartKind::X, c);
      PosExpr::Ptr fc = acc.at(cv);
      std::map<VarId, PosExpr::Ptr> next;
      for (const VertexId& a : current.vertices()) {
        if (current.frozen(a)) continue;
        VarId av = chart_var(ChartKind::X, a);
        if (a == c) {
          next.emplace(av, PosExpr::pow(fc, -1));
          continue;
        }
        const Rat& eac = current.epsilon(a, c);
        if (eac == 0) {
          next.emplace(av, acc.at(av));
          continue;
        }
        long e = rat_to_long(eac);
        PosExpr::Ptr one = PosExpr::constant(Rat(1));
        PosExpr::Ptr base =
            PosExpr::add(one, e > 0 ? PosExpr::pow(fc, -1) : fc);
        next.emplace(av, PosExpr::mul(acc.at(av), PosExpr::pow(base, -e)));
      }
      acc = std::move(next);
      current = current.mutate(c);
    } else {
      std::map<VarId, PosExpr::Ptr> next;
      for (const auto& [from, to] : step.sigma) {
        if (current.frozen(from)) continue;
        next.emplace(chart_var(ChartKind::X, to), acc.at(chart_var(ChartKind::X, from)));
      }
      acc = std::move(next);
      current = current.apply_isomorphism(step.sigma);
    }
  }
  for (const VertexId& v : current.vertices()) {
    if (current.frozen(v)) continue;
    VarId id = chart_var(ChartKind::X, v);
    out.target_vars.push_back(id);
    out.presentations.emplace(id, acc.at(id));
  }
  return out;
}

std::vector<std::vector<long>> dt_degree_matrix(const PullbackMap& pullback,
                                                const std::vector<VarId>& vars) {
  std::vector<std::vector<long>> m(vars.size(), std::vector<long>(vars.size(), 0));
  for (std::size_t j = 0; j < vars.size(); ++j) {
    const RationalFunction& image = pullback.at(vars[j]);
    for (std::size_t i = 0; i < vars.size(); ++i)
      m[i][j] = image.variable_degree(vars[i]);
  }
  return m;
}

std::vector<std::vector<long>> dt_degree_matrix(const ClusterTransformation& t) {
  std::vector<VarId> vars;
  for (const VertexId& v : t.source_seed().vertices())
    if (!t.source_seed().frozen(v)) vars.push_back(chart_var(ChartKind::X, v));
  return dt_degree_matrix(t.pullback(ChartKind::X), vars);
}

std::string DtCheckReport::str() const {
  std::ostringstream os;
  os << "degree matrix (rows = deg variable, cols = image):\n";
  for (std::size_t i = 0; i < degree_matrix.size(); ++i) {
    os << "  ";
    for (std::size_t j = 0; j < degree_matrix[i].size(); ++j) {
      if (j) os << ' ';
      os << degree_matrix[i][j];
    }
    os << '\n';
  }
  os << "lamination route: " << (lamination_route_agrees ? "agrees" : "DISAGREES") << '\n';
  for (const auto& line : offending) os << "  offending: " << line << '\n';
  os << "verdict: " << (verdict ? "PASS" : "FAIL") << '\n';
  return os.str();
}

DtCheckReport check_dt(const ClusterTransformation& t) {
  DtCheckReport report;
  const Seed& seed = t.source_seed();
  for (const VertexId& v : seed.vertices())
    if (!seed.frozen(v)) report.vars.push_back(chart_var(ChartKind::X, v));
  report.degree_matrix = dt_degree_matrix(t);
  bool ok = true;
  for (std::size_t i = 0; i < report.vars.size(); ++i) {
    for (std::size_t j = 0; j < report.vars.size(); ++j) {
      long want = (i == j) ? -1 : 0;
      if (report.degree_matrix[i][j] != want) {
        ok = false;
        report.offending.push_back("deg_{" + var_name(report.vars[i]) + "} t*(" +
                                   var_name(report.vars[j]) + ") = " +
                                   std::to_string(report.degree_matrix[i][j]) +
                                   ", expected " + std::to_string(want));
      }
    }
  }
  // Lamination formulation: the tropicalized map must send each basic
  // positive lamination to its negative.
  TropicalMap trop = tropicalize_transformation(t);
  bool lam_ok = true;
  std::size_t n = report.vars.size();
  for (std::size_t i = 0; i < n && lam_ok; ++i) {
    std::vector<Int> point(n, 0);
    point[i] = 1;
    auto image = trop.eval(point);
    for (std::size_t j = 0; j < n; ++j) {
      Int want = (i == j) ? -1 : 0;
      if (image[j] != want) lam_ok = false;
    }
  }
  report.lamination_route_agrees = lam_ok;
  report.verdict = ok && lam_ok;
  return report;
}

}  // namespace dbcell
