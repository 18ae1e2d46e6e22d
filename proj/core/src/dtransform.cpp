#include "dbcell/dtransform.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace dbcell {

namespace {

Seed reduced_amalgamate(const std::vector<int>& letters, const CartanMatrix& cartan) {
  return amalgamate_seed(letters, cartan).reduced();
}

bool u_before_v(const std::vector<int>& letters) {
  bool seen_positive = false;
  for (int l : letters) {
    if (l > 0) seen_positive = true;
    if (l < 0 && seen_positive) return false;
  }
  return true;
}

// Word + reduced seed kept in lockstep; every primitive rewrite re-checks the
// seed against the amalgamation of the current letters.
struct DtState {
  std::vector<int> letters;
  CartanMatrix cartan;
  Seed seed;  // reduced
  std::vector<TransformStep> steps;

  DtState(const PairWord& word)
      : letters(word.letters), cartan(word.cartan),
        seed(reduced_amalgamate(word.letters, word.cartan)) {}

  void sync_check() const {
    if (!(seed == reduced_amalgamate(letters, cartan)))
      throw ReplayMismatch("seed out of sync with the rewritten word");
  }

  void flip(int p) {
    letters[p] = -letters[p];
    sync_check();  // boundary sign flips never touch the reduced seed
  }

  void swap_adjacent(int p) {
    int a = letters[p], b = letters[p + 1];
    if ((a > 0) == (b > 0)) throw MoveNotApplicable("swap needs opposite signs");
    if (std::abs(a) == std::abs(b)) {
      int level = std::abs(a);
      long i = 0;
      for (int k = 0; k <= p; ++k)
        if (std::abs(letters[k]) == level) ++i;
      VertexId c{level, static_cast<int>(i)};
      seed = seed.mutate(c);
      steps.push_back(TransformStep::mutation(c));
    }
    std::swap(letters[p], letters[p + 1]);
    sync_check();
  }

  void transpose() {
    std::vector<long> n(cartan.rank() + 1, 0);
    for (int l : letters) ++n[std::abs(l)];
    std::map<VertexId, VertexId> sigma;
    for (const VertexId& v : seed.vertices())
      sigma.emplace(v, VertexId{v.level, static_cast<int>(n[v.level]) - v.pos});
    seed = seed.apply_isomorphism(sigma);
    steps.push_back(TransformStep::isomorphism(sigma));
    std::vector<int> rev;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) rev.push_back(-*it);
    letters = std::move(rev);
    sync_check();
  }
};

ClusterTransformation build_dt_sorted(const PairWord& word) {
  DtState st(word);
  Seed source = st.seed;
  int m = 0, l = 0;
  for (int letter : word.letters) (letter < 0 ? m : l)++;

  // Stage 1: multiply e_{alpha}e_{-alpha}^{-1} on the left for each u-letter
  // (flip the leftmost letter, transit it to the middle), then symmetrically
  // e_{beta}^{-1}e_{-beta} on the right for each v-letter.
  for (int pass = 0; pass < m; ++pass) {
    st.flip(0);
    int p = 0;
    while (p + 1 < static_cast<int>(st.letters.size()) && st.letters[p + 1] < 0) {
      st.swap_adjacent(p);
      ++p;
    }
  }
  for (int pass = 0; pass < l; ++pass) {
    int p = static_cast<int>(st.letters.size()) - 1;
    st.flip(p);
    while (p > m && st.letters[p - 1] > 0) {
      st.swap_adjacent(p - 1);
      --p;
    }
  }

  // Stage 2: transposition.
  st.transpose();

  // Stage 3: restore the u-before-v layout.
  for (int k = 0; k < m; ++k) {
    int p = l + k;
    while (p > k) {
      st.swap_adjacent(p - 1);
      --p;
    }
  }

  if (st.letters != word.letters)
    throw ReplayMismatch("DT rewrite did not restore the original word");
  ClusterTransformation t(source, st.steps);
  if (!(t.target_seed() == source)) throw ReplayMismatch("DT does not return to its seed");
  return t;
}

std::vector<TransformStep> reduce_steps(const Seed& full_source,
                                        const std::vector<TransformStep>& steps) {
  // Mutation vertices are unfrozen, so they survive the restriction; the
  // isomorphism maps are restricted to the unfrozen vertices.
  std::vector<TransformStep> out;
  Seed current = full_source;
  for (const auto& s : steps) {
    if (s.kind == TransformStep::Kind::Mutation) {
      out.push_back(s);
      current = current.mutate(s.vertex);
    } else {
      std::map<VertexId, VertexId> restricted;
      for (const auto& [from, to] : s.sigma)
        if (!current.frozen(from)) restricted.emplace(from, to);
      out.push_back(TransformStep::isomorphism(restricted));
      current = current.apply_isomorphism(s.sigma);
    }
  }
  return out;
}

}  // namespace

ClusterTransformation build_dt(const PairWord& word) {
  if (u_before_v(word.letters)) return build_dt_sorted(word);
  // Pre-normalize through word_path and conjugate: DT at the given word is
  // tau^{-1} . DT_sorted . tau read source-first, with tau the path from the
  // given word to its sorted layout.
  std::vector<int> sorted;
  for (int letter : word.letters)
    if (letter < 0) sorted.push_back(letter);
  for (int letter : word.letters)
    if (letter > 0) sorted.push_back(letter);
  PairWord sorted_word = validate_pair_word(sorted, word.cartan);
  auto moves = word_path(word, sorted_word);
  ClusterTransformation tau_full = moves_to_transformation(word, moves);
  Seed source = amalgamate(word).first.reduced();
  auto tau_steps = reduce_steps(amalgamate(word).first, tau_full.steps());
  ClusterTransformation tau(source, tau_steps);
  ClusterTransformation dt_sorted = build_dt_sorted(sorted_word);
  return tau.then(dt_sorted).then(tau.inverse());
}

InvolutionIX i_x(const PairWord& word) {
  InvolutionIX out{word, word, Seed(), Seed(), {}};
  std::vector<int> rev;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) rev.push_back(*it);
  out.target_word = PairWord{rev, word.cartan};
  out.source_seed = amalgamate(word).first.reduced();
  out.target_seed = amalgamate(out.target_word).first.reduced();

  std::vector<long> n(word.cartan.rank() + 1, 0);
  for (int l : word.letters) ++n[std::abs(l)];
  std::map<VertexId, VertexId> sigma;
  for (const VertexId& v : out.source_seed.vertices())
    sigma.emplace(v, VertexId{v.level, static_cast<int>(n[v.level]) - v.pos});
  // the horizontal flip carries the sign-flipped seed onto the reversed word
  check_isomorphism(out.source_seed.negated(), sigma, out.target_seed);
  for (const auto& [from, to] : sigma)
    out.pullback.images.emplace(chart_var(ChartKind::X, to),
                                RationalFunction::variable(chart_var(ChartKind::X, from)).inv());
  return out;
}

PullbackMap d_x_pullback(const PairWord& word) {
  ClusterTransformation dt = build_dt(word);
  InvolutionIX ix = i_x(word);
  return PullbackMap::compose(ix.pullback, dt.pullback(ChartKind::X));
}

LeadingExponentState::LeadingExponentState(const PairWord& word)
    : cartan_(word.cartan), middle_(word.cartan.rank() + 1) {
  if (!u_before_v(word.letters))
    throw InvalidPrefix("schematic state needs the u part before the v part");
  // Normal form of chi(word): empty triangles, every string's coordinate as a
  // circle; moving the circles into the middle fills the triangles.
  std::vector<long> total(cartan_.rank() + 1, 0);
  for (int l : word.letters) ++total[std::abs(l)];
  std::vector<long> seen(cartan_.rank() + 1, 0);
  for (int letter : word.letters) {
    int level = std::abs(letter);
    long j = ++seen[level];
    Mono exps;
    if (letter < 0) {
      // crossed, while normalizing, by the circles (level, i) with i < j
      for (long i = 0; i < j; ++i) exps[{level, static_cast<int>(i)}] = -1;
      left_.push_back({level, std::move(exps)});
    } else {
      for (long i = j; i <= total[level]; ++i) exps[{level, static_cast<int>(i)}] = -1;
      right_.push_back({level, std::move(exps)});
    }
  }
  for (int level = 1; level <= cartan_.rank(); ++level) {
    Mono& mid = middle_[level];
    for (long i = 0; i <= total[level]; ++i) mid[{level, static_cast<int>(i)}] = 1;
  }
}

void LeadingExponentState::add_to_middle(int level, const Mono& m, long scale) {
  if (scale == 0) return;
  Mono& mid = middle_[level];
  for (const auto& [v, e] : m) {
    if (e == 0) continue;
    mid[v] += e * scale;
    if (mid[v] == 0) mid.erase(v);
  }
}

namespace {
void mono_axpy(LeadingExponentState::Mono& dst, const LeadingExponentState::Mono& src,
               long scale) {
  if (scale == 0) return;
  for (const auto& [v, e] : src) {
    if (e == 0) continue;
    dst[v] += e * scale;
    if (dst[v] == 0) dst.erase(v);
  }
}
}  // namespace

void LeadingExponentState::right_mult_sbar() {
  if (right_.empty()) throw InvalidPrefix("no v-letters left to consume");
  Tok consumed = right_.back();
  right_.pop_back();
  int gamma = consumed.level;

  // rule (5'): the consumed triangle turns into an up-triangle with negated
  // monomial plus circles; the trailing down-triangle is dropped.
  struct Emission {
    int level;
    Mono value;
    std::size_t pos;  // crosses tokens strictly left of pos
  };
  std::vector<Emission> emissions;
  {
    Mono two;
    mono_axpy(two, consumed.exps, 2);
    emissions.push_back({gamma, std::move(two), right_.size()});
    for (int delta = 1; delta <= cartan_.rank(); ++delta) {
      if (delta == gamma) continue;
      Mono c;
      mono_axpy(c, consumed.exps, cartan_.c(gamma, delta));
      emissions.push_back({delta, std::move(c), right_.size()});
    }
    if (gamma == cartan_.rank()) mono_axpy(central_, consumed.exps, 1);
  }

  Mono u;  // the migrating up-triangle's monomial, starts at -p
  mono_axpy(u, consumed.exps, -1);

  // The migration has to happen one tracked variable at a time: the truncated
  // max in rule (4) is the tropical shadow in a single variable direction.
  // Collect all variables that can appear, then run per-variable.
  // (Interactions are per-variable independent exactly because every rule is
  // the tropicalization of a group identity evaluated at a basis lamination.)
  for (std::size_t idx = right_.size(); idx-- > 0;) {
    Tok& t = right_[idx];
    if (t.level != gamma) continue;
    // m = componentwise max(0, t.e + u.e)
    Mono m;
    {
      std::set<VertexId> keys;
      for (const auto& [v, e] : t.exps) keys.insert(v);
      for (const auto& [v, e] : u) keys.insert(v);
      for (const VertexId& v : keys) {
        long sum = 0;
        auto it = t.exps.find(v);
        if (it != t.exps.end()) sum += it->second;
        auto iu = u.find(v);
        if (iu != u.end()) sum += iu->second;
        if (sum > 0) m[v] = sum;
      }
    }
    if (!m.empty()) {
      Mono two;
      mono_axpy(two, m, 2);
      emissions.push_back({gamma, std::move(two), idx});
      for (int delta = 1; delta <= cartan_.rank(); ++delta) {
        if (delta == gamma) continue;
        Mono c;
        mono_axpy(c, m, cartan_.c(gamma, delta));
        emissions.push_back({delta, std::move(c), idx});
      }
      if (gamma == cartan_.rank()) mono_axpy(central_, m, 1);
      mono_axpy(t.exps, m, -1);
      mono_axpy(u, m, -1);
    }
  }

  // cross the (pre-existing) middle circle on level gamma
  mono_axpy(u, middle_[gamma], -1);

  for (const auto& em : emissions) {
    for (std::size_t i = 0; i < em.pos; ++i)
      if (right_[i].level == em.level) mono_axpy(right_[i].exps, em.value, -1);
    mono_axpy(middle_[em.level], em.value, 1);
  }
  left_.push_back({gamma, std::move(u)});
}

void LeadingExponentState::left_mult_sbar_inv() {
  if (left_.empty()) throw InvalidPrefix("no u-letters left to consume");
  Tok consumed = left_.front();
  left_.erase(left_.begin());
  int gamma = consumed.level;

  struct Emission {
    int level;
    Mono value;
    std::size_t pos;  // crosses tokens at index >= pos (to its right)
  };
  std::vector<Emission> emissions;
  {
    Mono two;
    mono_axpy(two, consumed.exps, 2);
    emissions.push_back({gamma, std::move(two), 0});
    for (int delta = 1; delta <= cartan_.rank(); ++delta) {
      if (delta == gamma) continue;
      Mono c;
      mono_axpy(c, consumed.exps, cartan_.c(gamma, delta));
      emissions.push_back({delta, std::move(c), 0});
    }
    if (gamma == cartan_.rank()) mono_axpy(central_, consumed.exps, 1);
  }

  Mono d;
  mono_axpy(d, consumed.exps, -1);

  for (std::size_t idx = 0; idx < left_.size(); ++idx) {
    Tok& t = left_[idx];
    if (t.level != gamma) continue;
    Mono m;
    {
      std::set<VertexId> keys;
      for (const auto& [v, e] : t.exps) keys.insert(v);
      for (const auto& [v, e] : d) keys.insert(v);
      for (const VertexId& v : keys) {
        long sum = 0;
        auto it = t.exps.find(v);
        if (it != t.exps.end()) sum += it->second;
        auto id = d.find(v);
        if (id != d.end()) sum += id->second;
        if (sum > 0) m[v] = sum;
      }
    }
    if (!m.empty()) {
      Mono two;
      mono_axpy(two, m, 2);
      emissions.push_back({gamma, std::move(two), idx + 1});
      for (int delta = 1; delta <= cartan_.rank(); ++delta) {
        if (delta == gamma) continue;
        Mono c;
        mono_axpy(c, m, cartan_.c(gamma, delta));
        emissions.push_back({delta, std::move(c), idx + 1});
      }
      if (gamma == cartan_.rank()) mono_axpy(central_, m, 1);
      mono_axpy(t.exps, m, -1);
      mono_axpy(d, m, -1);
    }
  }

  mono_axpy(d, middle_[gamma], -1);

  for (const auto& em : emissions) {
    for (std::size_t i = em.pos; i < left_.size(); ++i)
      if (left_[i].level == em.level) mono_axpy(left_[i].exps, em.value, -1);
    mono_axpy(middle_[em.level], em.value, 1);
  }
  right_.insert(right_.begin(), {gamma, std::move(d)});
}

const LeadingExponentState::Mono& LeadingExponentState::middle(int level) const {
  if (level < 1 || level >= static_cast<int>(middle_.size()))
    throw IndexOutOfRange("level " + std::to_string(level));
  return middle_[level];
}

long LeadingExponentState::minor_exponent_type_a(int alpha, const VertexId& x) const {
  long total = 0;
  for (int gamma = 1; gamma <= cartan_.rank(); ++gamma) {
    auto it = middle_[gamma].find(x);
    if (it == middle_[gamma].end()) continue;
    total += static_cast<long>(std::min(alpha, gamma)) * it->second;
  }
  auto c = central_.find(x);
  if (c != central_.end()) total -= static_cast<long>(alpha) * c->second;
  return total;
}

Rat LeadingExponentState::conserved_sum(int alpha, const VertexId& x) const {
  Rat total(0);
  for (int gamma = 1; gamma <= cartan_.rank(); ++gamma) {
    auto it = middle_[gamma].find(x);
    if (it == middle_[gamma].end()) continue;
    total += Rat(it->second) * cartan_.c_inverse(gamma, alpha);
  }
  return total;
}

std::vector<long> leading_exponents(const PairWord& word, const VertexId& x, int u_prefix,
                                    int v_suffix) {
  LeadingExponentState state(word);
  if (v_suffix > state.remaining_v() || u_prefix > state.remaining_u() || u_prefix < 0 ||
      v_suffix < 0)
    throw InvalidPrefix("prefix/suffix exceed the word parts");
  for (int k = 0; k < v_suffix; ++k) state.right_mult_sbar();
  for (int k = 0; k < u_prefix; ++k) state.left_mult_sbar_inv();
  std::vector<long> out(word.cartan.rank() + 1, 0);
  for (int level = 1; level <= word.cartan.rank(); ++level) {
    const auto& mid = state.middle(level);
    auto it = mid.find(x);
    out[level] = it == mid.end() ? 0 : it->second;
  }
  return out;
}

}  // namespace dbcell
