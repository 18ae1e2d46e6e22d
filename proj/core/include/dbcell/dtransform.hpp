#ifndef DBCELL_DTRANSFORM_HPP
#define DBCELL_DTRANSFORM_HPP

#include <map>
#include <vector>

#include "dbcell/chart.hpp"
#include "dbcell/moves.hpp"
#include "dbcell/seed.hpp"

namespace dbcell {

// Donaldson-Thomas transformation of the reduced X-chart of `word`, built as
// the three-stage rewrite: flip-and-transit every u-letter to the middle and
// every v-letter symmetrically, transpose (a cluster isomorphism), then
// restore the original layout with swaps. The returned transformation lives
// on the reduced seed (no frozen vertices) and replays source -> source.
ClusterTransformation build_dt(const PairWord& word);

// Cluster counterpart of the inversion anti-automorphism: pullback
// X'_{sigma(a)} = X_a^{-1} onto the chart of the letter-reversed word, where
// sigma is the horizontal flip (alpha, i) -> (alpha, n_alpha - i).
struct InvolutionIX {
  PairWord source_word;
  PairWord target_word;  // reversed letters
  Seed source_seed;      // reduced
  Seed target_seed;      // reduced, equals amalgamate(reversed).reduced()
  PullbackMap pullback;
};
InvolutionIX i_x(const PairWord& word);

// Pullback of i_x . build_dt (Goncharov-Shen's D_X) on the reduced chart,
// keyed by the reversed word's coordinates.
PullbackMap d_x_pullback(const PairWord& word);

// Leading-exponent bookkeeping for the schematic calculus: the exponent, per
// level, of each cluster variable inside the middle circles of the picture of
// ubar_{<k}^{-1} x vbar_{>k}^{-1}.
class LeadingExponentState {
 public:
  using Mono = std::map<VertexId, long>;  // exponent vector over cluster variables

  explicit LeadingExponentState(const PairWord& word);

  // Multiplies the lift of the last unconsumed v-letter on the right.
  void right_mult_sbar();
  // Multiplies the inverse lift of the first unconsumed u-letter on the left.
  void left_mult_sbar_inv();

  int remaining_v() const { return static_cast<int>(right_.size()); }
  int remaining_u() const { return static_cast<int>(left_.size()); }
  const Mono& middle(int level) const;

  // Leading exponent of X in the generalized minor Delta_alpha of the current
  // state, for the type-A projective convention (sum of min(alpha, level)
  // weighted circle exponents).
  long minor_exponent_type_a(int alpha, const VertexId& x) const;
  // The paper's invariant combination: sum_beta p_beta (C^{-1})_{beta alpha}.
  Rat conserved_sum(int alpha, const VertexId& x) const;

 private:
  struct Tok {
    int level;
    Mono exps;
  };
  void add_to_middle(int level, const Mono& m, long scale);

  CartanMatrix cartan_;
  std::vector<Tok> left_;    // e_{-} triangles, product order (u part)
  std::vector<Tok> right_;   // e_{+} triangles, product order (v part)
  std::vector<Mono> middle_; // circle per level, index 1..rank
  // Coroot insertions t^{H_gamma} at the last level decompose into coweight
  // matrices only up to a central factor t; the minors of the projective
  // matrix model see that factor, so it is tracked separately. The per-level
  // circle data above is the honest adjoint-group bookkeeping either way.
  Mono central_;
};

// Exponent-per-level of variable `x` in the middle circles after consuming
// u_prefix letters on the left and v_suffix letters on the right.
std::vector<long> leading_exponents(const PairWord& word, const VertexId& x,
                                    int u_prefix, int v_suffix);

}  // namespace dbcell

#endif
