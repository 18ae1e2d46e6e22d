#ifndef DBCELL_TROPICAL_HPP
#define DBCELL_TROPICAL_HPP

#include <string>
#include <vector>

#include "dbcell/chart.hpp"
#include "dbcell/posexpr.hpp"

namespace dbcell {

// Integer tropical point on the reduced X-chart of a seed.
struct Lamination {
  std::vector<Int> coords;  // indexed like Seed::unfrozen_vertices()

  static Lamination basic_positive(const Seed& seed, const VertexId& v);
  static Lamination basic_negative(const Seed& seed, const VertexId& v);
};

// Positive presentations of the per-step X-mutation pullback images, composed
// by tree substitution. The result tropicalizes each component per the naive
// rules.
TropicalMap tropicalize_transformation(const ClusterTransformation& t);

// deg matrix M[i][j] = deg_{X_i} t*(X_j), computed on canonical forms.
std::vector<std::vector<long>> dt_degree_matrix(const ClusterTransformation& t);
std::vector<std::vector<long>> dt_degree_matrix(const PullbackMap& pullback,
                                                const std::vector<VarId>& vars);

struct DtCheckReport {
  bool verdict = false;
  std::vector<std::vector<long>> degree_matrix;
  std::vector<VarId> vars;
  std::vector<std::string> offending;  // entries that break -identity
  bool lamination_route_agrees = false;
  std::string str() const;
};

// Degree criterion (matrix = -I) plus the lamination route cross-check
// (l_i^+ must map to l_i^-).
DtCheckReport check_dt(const ClusterTransformation& t);

}  // namespace dbcell

#endif
