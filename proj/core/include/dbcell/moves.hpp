#ifndef DBCELL_MOVES_HPP
#define DBCELL_MOVES_HPP

#include <vector>

#include "dbcell/chart.hpp"
#include "dbcell/seed.hpp"

namespace dbcell {

// Reduced-word moves. Swap exchanges two neighboring letters of opposite
// signs; Braid rewrites a same-sign braid block (length 3, 4 or 6 for
// C*C = 1, 2, 3).
struct Move {
  enum class Kind { Swap, Braid } kind;
  int position = 0;   // 0-based index of the block's leftmost letter
  int block_len = 2;  // 2 for Swap

  static Move swap_at(int p) { return {Kind::Swap, p, 2}; }
  static Move braid_at(int p, int len) { return {Kind::Braid, p, len}; }
};

struct MoveResult {
  PairWord word;                     // rewritten word
  std::vector<TransformStep> steps;  // induced steps on the amalgamated seed
};

// Applies one move and returns the rewritten word together with the induced
// seed steps, replay-validated against amalgamate(target word).
MoveResult apply_move(const PairWord& word, const Move& move);

// Move sequence transforming source into target (same Weyl pair required).
std::vector<Move> word_path(const PairWord& source, const PairWord& target);

// Replays a move sequence into a single transformation on the full
// amalgamated seed of `source`.
ClusterTransformation moves_to_transformation(const PairWord& source,
                                              const std::vector<Move>& moves);

}  // namespace dbcell

#endif
