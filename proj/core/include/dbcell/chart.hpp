#ifndef DBCELL_CHART_HPP
#define DBCELL_CHART_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "dbcell/ratfun.hpp"
#include "dbcell/seed.hpp"

namespace dbcell {

enum class ChartKind { A, X };

// Variable naming for the canonical coordinates on a seed torus.
VarId chart_var(ChartKind kind, const VertexId& v);

// Materialized pullback: every target coordinate mapped to an exact rational
// function in the source coordinates.
struct PullbackMap {
  std::map<VarId, RationalFunction> images;

  const RationalFunction& at(VarId v) const;
  // Pullback of g . f from the pullbacks of f (inner, applied first) and g.
  static PullbackMap compose(const PullbackMap& outer, const PullbackMap& inner);
  static PullbackMap identity(const std::vector<VarId>& vars);
  bool is_identity() const;
  bool operator==(const PullbackMap& o) const { return images == o.images; }
};

// X-mutation at c. In reduced charts (seed with no frozen vertices, or
// reduced=true on a bigger seed) only unfrozen targets are emitted; the
// formulas never involve frozen coordinates either way.
PullbackMap x_mutation_pullback(const Seed& seed, const VertexId& c, bool reduced = true);
PullbackMap a_mutation_pullback(const Seed& seed, const VertexId& c);
// p*(X_a) = prod_b A_b^{eps_ab}; reduced emits unfrozen targets only.
PullbackMap p_pullback(const Seed& seed, bool reduced = true);
// sigma*(X'_{sigma(a)}) = X_a
PullbackMap iso_pullback(ChartKind kind, const std::map<VertexId, VertexId>& sigma);

RationalFunction poisson_bracket(const Seed& seed, const VertexId& a, const VertexId& b);

// Ordered mutation/isomorphism steps between seeds. Steps are listed in the
// order the transformation is applied (source chart first); the pullback of
// the composite therefore composes the per-step pullbacks right-to-left.
struct TransformStep {
  enum class Kind { Mutation, Isomorphism } kind;
  VertexId vertex;                      // Mutation
  std::map<VertexId, VertexId> sigma;   // Isomorphism

  static TransformStep mutation(const VertexId& v) {
    return {Kind::Mutation, v, {}};
  }
  static TransformStep isomorphism(std::map<VertexId, VertexId> sigma) {
    return {Kind::Isomorphism, {}, std::move(sigma)};
  }
};

class ClusterTransformation {
 public:
  ClusterTransformation(Seed source, std::vector<TransformStep> steps);

  const Seed& source_seed() const { return source_; }
  const Seed& target_seed() const { return target_; }
  const std::vector<TransformStep>& steps() const { return steps_; }

  // Replays the steps; throws ReplayMismatch if `expected` is provided and
  // the final seed differs.
  static Seed replay(const Seed& source, const std::vector<TransformStep>& steps,
                     const Seed* expected = nullptr);

  ClusterTransformation inverse() const;
  ClusterTransformation then(const ClusterTransformation& next) const;

  // Same steps restricted to the unfrozen vertices, based at reduced seeds
  // (mutation vertices are unfrozen already; isomorphisms are restricted).
  ClusterTransformation restrict_to_unfrozen() const;

  // Total pullback on the chosen chart. For ChartKind::X the reduced chart
  // is used by default (only unfrozen coordinates appear); pass
  // reduced_x = false for the full X-chart of an unreduced seed.
  PullbackMap pullback(ChartKind kind, bool reduced_x = true) const;

 private:
  Seed source_;
  Seed target_;
  std::vector<TransformStep> steps_;
};

}  // namespace dbcell

#endif
