#ifndef DBCELL_CROSSCHECK_HPP
#define DBCELL_CROSSCHECK_HPP

#include <cstdint>

#include "dbcell/chart.hpp"
#include "dbcell/chipsi.hpp"
#include "dbcell/group.hpp"

namespace dbcell {

// chi . p . psi with the frozen chi-coordinates set to 1: the cluster route
// of the twist map on H \ G^{u,v} / H.
MatQ twist_via_cluster(const PairWord& word, const MatQ& x);

// Random totally-positive style element of G^{u,v}: a coroot torus factor
// times the word-ordered product of e_{-a}(t) / e_{+a}(t) with positive
// rational parameters.
MatQ random_cell_element(const PairWord& word, std::uint64_t seed);

// DT pullback computed through the matrix model: substitute a symbolic
// section of chi into psi, then apply the p-map. The projective coweight
// representatives are not a section of SL_n, so the computation runs on the
// honest SL_n section with every unfrozen X_a = T_a^n (the frozen chi
// coordinates are set to 1); the cluster route is compared after the same
// substitution. Both maps are keyed by the unfrozen X-chart variables with
// values in the T variables.
struct DtOracleComparison {
  PullbackMap matrix_route;
  PullbackMap cluster_route;
  bool equal = false;
};
DtOracleComparison dt_oracle_compare(const PairWord& word);

}  // namespace dbcell

#endif
