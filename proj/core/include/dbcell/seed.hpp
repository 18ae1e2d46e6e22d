#ifndef DBCELL_SEED_HPP
#define DBCELL_SEED_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "dbcell/rational.hpp"
#include "dbcell/weyl.hpp"

namespace dbcell {

// Vertex of a seed. For amalgamated seeds (level, pos) is the string
// (alpha, i) of the string diagram; free-standing seeds may use any pairs.
struct VertexId {
  int level = 0;
  int pos = 0;

  auto operator<=>(const VertexId&) const = default;
  std::string str() const { return std::to_string(level) + ":" + std::to_string(pos); }
  static VertexId parse(const std::string& s);
};

// Seed (I, I0, epsilon, d). Entries of epsilon are exact rationals whose
// denominators stay in {1, 2}; an entry may be non-integral only when both
// of its vertices are frozen. epsilon_hat[a][b] = epsilon[a][b] * d[b] is
// skew-symmetric.
class Seed {
 public:
  Seed() = default;
  Seed(std::vector<VertexId> vertices, std::vector<bool> frozen,
       std::vector<std::vector<Rat>> epsilon, std::vector<long> d);

  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  bool frozen(const VertexId& v) const { return frozen_[index(v)]; }
  long d(const VertexId& v) const { return d_[index(v)]; }
  const Rat& epsilon(const VertexId& a, const VertexId& b) const {
    return eps_[index(a)][index(b)];
  }
  Rat epsilon_hat(const VertexId& a, const VertexId& b) const {
    return eps_[index(a)][index(b)] * d_[index(b)];
  }
  int index(const VertexId& v) const;
  bool has_vertex(const VertexId& v) const { return lookup_.count(v) != 0; }
  std::vector<VertexId> unfrozen_vertices() const;

  Seed mutate(const VertexId& c) const;
  Seed apply_isomorphism(const std::map<VertexId, VertexId>& sigma) const;
  // Restriction to the unfrozen vertices (the reduced X-chart's seed).
  Seed reduced() const;
  Seed negated() const;  // epsilon -> -epsilon, rest unchanged

  bool operator==(const Seed& o) const {
    return vertices_ == o.vertices_ && frozen_ == o.frozen_ && eps_ == o.eps_ && d_ == o.d_;
  }

  std::string dot() const;

 private:
  void check_invariants() const;

  std::vector<VertexId> vertices_;
  std::vector<bool> frozen_;
  std::vector<std::vector<Rat>> eps_;
  std::vector<long> d_;
  std::map<VertexId, int> lookup_;
};

// Per-level layout of a pair word: nodes are letters, strings are the gaps.
struct StringDiagram {
  PairWord word;
  std::vector<long> n_alpha;                 // occurrences per level (1-based)
  std::vector<std::vector<int>> node_index;  // per level: word positions of +-alpha letters

  bool is_open(const VertexId& v) const {
    return v.pos == 0 || v.pos == n_alpha[v.level];
  }
};

// Throws NotAnIsomorphism unless transporting `source` along sigma gives
// exactly `target` (frozen flags, d and epsilon included).
void check_isomorphism(const Seed& source, const std::map<VertexId, VertexId>& sigma,
                       const Seed& target);

// Seed of a single letter (all vertices frozen). Spectator levels use pos = 0.
Seed letter_seed(int letter, const CartanMatrix& cartan);

// Amalgamation of the letter seeds of a signed word, with the interior
// strings defrosted. The word need not be a valid reduced pair word; the
// construction is purely combinatorial.
std::pair<Seed, StringDiagram> amalgamate(const PairWord& word);
Seed amalgamate_seed(const std::vector<int>& letters, const CartanMatrix& cartan);

}  // namespace dbcell

#endif
