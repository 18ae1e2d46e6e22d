#include "dbcell/moves.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "dbcell/weyl.hpp"

namespace dbcell {

namespace {

constexpr std::size_t kSearchBudget = 1000000;

long occurrences_before(const std::vector<int>& letters, int level, int position) {
  long n = 0;
  for (int k = 0; k < position; ++k)
    if (std::abs(letters[k]) == level) ++n;
  return n;
}

// Swap of two adjacent opposite-sign letters; a mutation happens only when
// both letters sit on the same level.
MoveResult apply_swap(const PairWord& word, int p) {
  const auto& letters = word.letters;
  if (p < 0 || p + 1 >= static_cast<int>(letters.size()))
    throw MoveNotApplicable("swap position out of range");
  int a = letters[p], b = letters[p + 1];
  if ((a > 0) == (b > 0)) throw MoveNotApplicable("swap needs opposite signs");
  MoveResult out{word, {}};
  std::swap(out.word.letters[p], out.word.letters[p + 1]);
  if (std::abs(a) == std::abs(b)) {
    int level = std::abs(a);
    long i = occurrences_before(letters, level, p) + 1;
    out.steps.push_back(TransformStep::mutation({level, static_cast<int>(i)}));
  }
  return out;
}

// Vertex relabeling induced by a C*C = 1 braid block: the enclosed string
// switches level and the later strings on the two levels shift.
std::map<VertexId, VertexId> braid3_sigma(const Seed& source, int alpha, int beta,
                                          long k_alpha, long k_beta) {
  std::map<VertexId, VertexId> sigma;
  for (const VertexId& v : source.vertices()) {
    VertexId image = v;
    if (v.level == alpha) {
      if (v.pos == k_alpha + 1)
        image = {beta, static_cast<int>(k_beta + 1)};
      else if (v.pos >= k_alpha + 2)
        image = {alpha, v.pos - 1};
    } else if (v.level == beta && v.pos >= k_beta + 1) {
      image = {beta, v.pos + 1};
    }
    sigma.emplace(v, image);
  }
  return sigma;
}

MoveResult apply_braid(const PairWord& word, int p, int len) {
  const auto& letters = word.letters;
  int n = static_cast<int>(letters.size());
  if (p < 0 || p + len > n) throw MoveNotApplicable("braid block out of range");
  int first = letters[p];
  int sign = first > 0 ? 1 : -1;
  int alpha = std::abs(letters[p]);
  int beta = std::abs(letters[p + 1]);
  if (alpha == beta) throw MoveNotApplicable("braid block must alternate two levels");
  for (int k = 0; k < len; ++k) {
    int expect = (k % 2 == 0) ? alpha : beta;
    if (letters[p + k] * sign <= 0 || std::abs(letters[p + k]) != expect)
      throw MoveNotApplicable("block is not an alternating same-sign braid segment");
  }
  const CartanMatrix& cartan = word.cartan;
  long cc = cartan.c(alpha, beta) * cartan.c(beta, alpha);
  long want_len = cc == 0 ? 2 : (cc == 1 ? 3 : (cc == 2 ? 4 : 6));
  if (cc > 3 || len != want_len)
    throw MoveNotApplicable("block length does not match the braid relation");
  // Commuting letters: the amalgamated seed only depends on the occurrence
  // counts, so the rewrite induces no steps at all.

  MoveResult out{word, {}};
  for (int k = 0; k < len; ++k) {
    int level = (k % 2 == 0) ? beta : alpha;
    out.word.letters[p + k] = sign * level;
  }

  Seed source = amalgamate(word).first;
  Seed target = amalgamate(out.word).first;
  long k_alpha = occurrences_before(letters, alpha, p);
  long k_beta = occurrences_before(letters, beta, p);
  VertexId a1{alpha, static_cast<int>(k_alpha + 1)};
  VertexId a2{alpha, static_cast<int>(k_alpha + 2)};
  VertexId b1{beta, static_cast<int>(k_beta + 1)};
  VertexId b2{beta, static_cast<int>(k_beta + 2)};

  std::vector<std::vector<TransformStep>> candidates;
  if (cc == 0) {
    candidates.push_back({});
  } else if (cc == 1) {
    auto sigma = braid3_sigma(source, alpha, beta, k_alpha, k_beta);
    candidates.push_back({TransformStep::mutation(a1), TransformStep::isomorphism(sigma)});
  } else if (cc == 2) {
    // mu_b, mu_a, mu_b with a on the level carrying the -2 entry; the
    // mirrored orientation swaps the roles
    std::vector<TransformStep> bab{TransformStep::mutation(b1), TransformStep::mutation(a1),
                                   TransformStep::mutation(b1)};
    std::vector<TransformStep> aba{TransformStep::mutation(a1), TransformStep::mutation(b1),
                                   TransformStep::mutation(a1)};
    if (cartan.c(alpha, beta) == -2) {
      candidates.push_back(bab);
      candidates.push_back(aba);
    } else {
      candidates.push_back(aba);
      candidates.push_back(bab);
    }
  } else {
    // the two stored half-paths of the 10-mutation sequence, concatenated:
    // d c b a d from the source side, then the reversed target-side half
    // b d c a d; the mirrored orientation swaps (a,b) with (c,d)
    auto seq = [&](VertexId va, VertexId vb, VertexId vc, VertexId vd) {
      std::vector<TransformStep> s;
      for (const VertexId* v : {&vd, &vc, &vb, &va, &vd, &vb, &vd, &vc, &va, &vd})
        s.push_back(TransformStep::mutation(*v));
      return s;
    };
    if (cartan.c(alpha, beta) == -1) {
      candidates.push_back(seq(a1, a2, b1, b2));
      candidates.push_back(seq(b1, b2, a1, a2));
    } else {
      candidates.push_back(seq(b1, b2, a1, a2));
      candidates.push_back(seq(a1, a2, b1, b2));
    }
  }

  for (auto& steps : candidates) {
    try {
      ClusterTransformation::replay(source, steps, &target);
      out.steps = std::move(steps);
      return out;
    } catch (const ReplayMismatch&) {
      continue;
    } catch (const FrozenVertex&) {
      continue;
    }
  }
  throw SequenceValidationFailed("no stored mutation sequence reproduces the target seed");
}

// Move1 bubble sort of `letters` into the sign pattern of `target_signs`,
// preserving the relative order within each sign.
std::vector<Move> sort_to_pattern(std::vector<int> letters, const std::vector<bool>& neg_first) {
  std::vector<Move> moves;
  int n = static_cast<int>(letters.size());
  // target position of each letter: match i-th negative to i-th negative slot
  std::vector<int> target_pos(n);
  {
    std::vector<int> neg_slots, pos_slots;
    for (int i = 0; i < n; ++i)
      (neg_first[i] ? neg_slots : pos_slots).push_back(i);
    std::size_t ni = 0, pi = 0;
    for (int i = 0; i < n; ++i) {
      if (letters[i] < 0) {
        if (ni >= neg_slots.size()) throw DifferentPair("sign multiset mismatch");
        target_pos[i] = neg_slots[ni++];
      } else {
        if (pi >= pos_slots.size()) throw DifferentPair("sign multiset mismatch");
        target_pos[i] = pos_slots[pi++];
      }
    }
  }
  // bubble: adjacent transpositions always involve opposite signs, because
  // equal-sign letters never need to cross
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = target_pos[i];
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (perm[i] > perm[i + 1]) {
        moves.push_back(Move::swap_at(i));
        std::swap(perm[i], perm[i + 1]);
        std::swap(letters[i], letters[i + 1]);
        changed = true;
      }
    }
  }
  return moves;
}

// Braid-move path between two reduced words of the same element, by BFS.
std::vector<std::pair<int, int>> braid_path(const WeylWord& from, const WeylWord& to,
                                            const CartanMatrix& cartan) {
  if (from == to) return {};
  auto neighbors = [&](const WeylWord& w) {
    std::vector<std::tuple<WeylWord, int, int>> out;
    int n = static_cast<int>(w.size());
    for (int p = 0; p + 1 < n; ++p) {
      int alpha = w[p], beta = w[p + 1];
      if (alpha == beta) continue;
      long cc = cartan.c(alpha, beta) * cartan.c(beta, alpha);
      if (cc > 3) continue;
      int L = cc == 0 ? 2 : (cc == 1 ? 3 : (cc == 2 ? 4 : 6));
      if (p + L > n) continue;
      bool ok = true;
      for (int k = 0; k < L; ++k)
        if (w[p + k] != ((k % 2 == 0) ? alpha : beta)) ok = false;
      if (!ok) continue;
      WeylWord next = w;
      for (int k = 0; k < L; ++k) next[p + k] = (k % 2 == 0) ? beta : alpha;
      out.emplace_back(std::move(next), p, L);
    }
    return out;
  };
  std::map<WeylWord, std::pair<WeylWord, std::pair<int, int>>> parent;
  std::deque<WeylWord> queue{from};
  parent[from] = {from, {-1, -1}};
  std::size_t visited = 0;
  while (!queue.empty()) {
    WeylWord w = queue.front();
    queue.pop_front();
    if (++visited > kSearchBudget) throw SearchBudgetExceeded();
    if (w == to) break;
    for (auto& [next, p, len] : neighbors(w)) {
      if (parent.count(next)) continue;
      parent[next] = {w, {p, len}};
      queue.push_back(next);
    }
  }
  if (!parent.count(to)) throw DifferentPair("no braid path between reduced words");
  std::vector<std::pair<int, int>> path;
  WeylWord cur = to;
  while (!(parent[cur].second.first == -1)) {
    path.push_back(parent[cur].second);
    cur = parent[cur].first;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

MoveResult apply_move(const PairWord& word, const Move& move) {
  MoveResult out = move.kind == Move::Kind::Swap ? apply_swap(word, move.position)
                                                 : apply_braid(word, move.position, move.block_len);
  // Every emitted step list is replay-validated against the amalgamation of
  // the rewritten word.
  Seed source = amalgamate(word).first;
  Seed target = amalgamate(out.word).first;
  ClusterTransformation::replay(source, out.steps, &target);
  return out;
}

std::vector<Move> word_path(const PairWord& source, const PairWord& target) {
  WeylGroup weyl(source.cartan);
  if (!(source.cartan == target.cartan)) throw DifferentPair("different Cartan data");
  if (!weyl.equal(source.u_word(), target.u_word()) ||
      !weyl.equal(source.v_word(), target.v_word()))
    throw DifferentPair("words do not spell the same pair");
  if (source.letters == target.letters) return {};

  // 1) sort both words to the separated u-before-v layout
  int n = static_cast<int>(source.letters.size());
  long m = source.u_word().size();
  std::vector<bool> separated(n);
  for (int i = 0; i < n; ++i) separated[i] = i < m;

  std::vector<Move> to_sep_src = sort_to_pattern(source.letters, separated);
  std::vector<Move> to_sep_tgt = sort_to_pattern(target.letters, separated);

  PairWord cur = source;
  std::vector<Move> path;
  for (const Move& mv : to_sep_src) {
    path.push_back(mv);
    cur = apply_move(cur, mv).word;
  }

  // 2) braid moves inside the u block and the v block
  PairWord sep_tgt = target;
  {
    PairWord tmp = target;
    for (const Move& mv : to_sep_tgt) tmp = apply_move(tmp, mv).word;
    sep_tgt = tmp;
  }
  WeylWord u_from, u_to, v_from, v_to;
  for (int i = 0; i < n; ++i) {
    if (cur.letters[i] < 0)
      u_from.push_back(-cur.letters[i]);
    else
      v_from.push_back(cur.letters[i]);
    if (sep_tgt.letters[i] < 0)
      u_to.push_back(-sep_tgt.letters[i]);
    else
      v_to.push_back(sep_tgt.letters[i]);
  }
  for (auto& [p, len] : braid_path(u_from, u_to, source.cartan)) {
    path.push_back(Move::braid_at(p, len));
    cur = apply_move(cur, path.back()).word;
  }
  for (auto& [p, len] : braid_path(v_from, v_to, source.cartan)) {
    path.push_back(Move::braid_at(static_cast<int>(m) + p, len));
    cur = apply_move(cur, path.back()).word;
  }

  // 3) undo target's sorting moves in reverse (each move is an involution)
  for (auto it = to_sep_tgt.rbegin(); it != to_sep_tgt.rend(); ++it) {
    path.push_back(*it);
    cur = apply_move(cur, *it).word;
  }
  if (cur.letters != target.letters)
    throw SequenceValidationFailed("word path did not reach the target word");
  return path;
}

ClusterTransformation moves_to_transformation(const PairWord& source,
                                              const std::vector<Move>& moves) {
  Seed seed = amalgamate(source).first;
  PairWord cur = source;
  std::vector<TransformStep> steps;
  for (const Move& mv : moves) {
    MoveResult r = apply_move(cur, mv);
    steps.insert(steps.end(), r.steps.begin(), r.steps.end());
    cur = r.word;
  }
  ClusterTransformation t(seed, steps);
  Seed expected = amalgamate(cur).first;
  if (!(t.target_seed() == expected))
    throw ReplayMismatch("assembled transformation does not reach amalgamate(target)");
  return t;
}

}  // namespace dbcell
