#include "dbcell/seed.hpp"

#include <algorithm>
#include <sstream>

namespace dbcell {

VertexId VertexId::parse(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw ParseError("bad vertex id: " + s);
  try {
    return VertexId{std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
  } catch (...) {
    throw ParseError("bad vertex id: " + s);
  }
}

Seed::Seed(std::vector<VertexId> vertices, std::vector<bool> frozen,
           std::vector<std::vector<Rat>> epsilon, std::vector<long> d)
    : vertices_(std::move(vertices)),
      frozen_(std::move(frozen)),
      eps_(std::move(epsilon)),
      d_(std::move(d)) {
  for (int i = 0; i < size(); ++i) {
    if (!lookup_.emplace(vertices_[i], i).second)
      throw IntegrityError("duplicate vertex " + vertices_[i].str());
  }
  check_invariants();
}

void Seed::check_invariants() const {
  int n = size();
  if (static_cast<int>(frozen_.size()) != n || static_cast<int>(d_.size()) != n ||
      static_cast<int>(eps_.size()) != n)
    throw IntegrityError("seed data sizes disagree");
  for (const auto& row : eps_)
    if (static_cast<int>(row.size()) != n) throw IntegrityError("epsilon is not square");
  for (int i = 0; i < n; ++i) {
    if (d_[i] <= 0) throw IntegrityError("d must be positive");
    for (int j = 0; j < n; ++j) {
      const Rat& e = eps_[i][j];
      if (e.get_den() != 1 && e.get_den() != 2)
        throw IntegrityError("epsilon denominator outside {1,2} at " + vertices_[i].str() +
                             "," + vertices_[j].str());
      if (!is_integer(e) && !(frozen_[i] && frozen_[j]))
        throw IntegrityError("non-integer epsilon touching unfrozen vertex " +
                             vertices_[i].str() + "," + vertices_[j].str());
      if (eps_[i][j] * d_[j] != -eps_[j][i] * d_[i])
        throw IntegrityError("epsilon_hat is not skew-symmetric");
    }
  }
}

int Seed::index(const VertexId& v) const {
  auto it = lookup_.find(v);
  if (it == lookup_.end()) throw UnknownVertex("vertex " + v.str());
  return it->second;
}

std::vector<VertexId> Seed::unfrozen_vertices() const {
  std::vector<VertexId> out;
  for (int i = 0; i < size(); ++i)
    if (!frozen_[i]) out.push_back(vertices_[i]);
  return out;
}

Seed Seed::mutate(const VertexId& cv) const {
  int c = index(cv);
  if (frozen_[c]) throw FrozenVertex("mutation at frozen vertex " + cv.str());
  int n = size();
  auto eps = eps_;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == c || b == c) {
        eps[a][b] = -eps_[a][b];
      } else if (eps_[a][c] * eps_[c][b] > 0) {
        Rat inc = abs(eps_[a][c]) * eps_[c][b];
        eps[a][b] = eps_[a][b] + inc;
      }
    }
  }
  return Seed(vertices_, frozen_, std::move(eps), d_);
}

Seed Seed::apply_isomorphism(const std::map<VertexId, VertexId>& sigma) const {
  // sigma must be a bijection from this seed's vertices onto a vertex set;
  // epsilon and d are transported, and frozen-ness must be preserved.
  if (static_cast<int>(sigma.size()) != size()) throw NotAnIsomorphism("sigma size mismatch");
  std::map<VertexId, int> target_index;
  std::vector<VertexId> verts(size());
  for (const auto& [from, to] : sigma) {
    int i = index(from);
    if (!target_index.emplace(to, i).second) throw NotAnIsomorphism("sigma not injective");
    verts[i] = to;
  }
  // Reorder target vertices canonically (sorted) for deterministic layout.
  std::vector<int> order(size());
  for (int i = 0; i < size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return verts[a] < verts[b]; });
  std::vector<VertexId> new_verts(size());
  std::vector<bool> new_frozen(size());
  std::vector<long> new_d(size());
  std::vector<std::vector<Rat>> new_eps(size(), std::vector<Rat>(size()));
  for (int i = 0; i < size(); ++i) {
    int oi = order[i];
    new_verts[i] = verts[oi];
    new_frozen[i] = frozen_[oi];
    new_d[i] = d_[oi];
  }
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) new_eps[i][j] = eps_[order[i]][order[j]];
  return Seed(std::move(new_verts), std::move(new_frozen), std::move(new_eps),
              std::move(new_d));
}

Seed Seed::reduced() const {
  std::vector<int> keep;
  for (int i = 0; i < size(); ++i)
    if (!frozen_[i]) keep.push_back(i);
  std::vector<VertexId> verts;
  std::vector<bool> frz;
  std::vector<long> dd;
  std::vector<std::vector<Rat>> eps(keep.size(), std::vector<Rat>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    verts.push_back(vertices_[keep[i]]);
    frz.push_back(false);
    dd.push_back(d_[keep[i]]);
    for (std::size_t j = 0; j < keep.size(); ++j) eps[i][j] = eps_[keep[i]][keep[j]];
  }
  return Seed(std::move(verts), std::move(frz), std::move(eps), std::move(dd));
}

Seed Seed::negated() const {
  auto eps = eps_;
  for (auto& row : eps)
    for (auto& e : row) e = -e;
  return Seed(vertices_, frozen_, std::move(eps), d_);
}

std::string Seed::dot() const {
  // Quasi-quiver rendering: one arrow per skew pair, weight labels when the
  // pair is not (1,-1), dashed for half-integer entries. Vertex order is the
  // seed's own order, so output is deterministic.
  std::ostringstream os;
  os << "digraph seed {\n";
  for (int i = 0; i < size(); ++i) {
    os << "  \"" << vertices_[i].str() << "\" [shape=" << (frozen_[i] ? "box" : "ellipse")
       << ", label=\"" << vertices_[i].str() << " (d=" << d_[i] << ")\"];\n";
  }
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      const Rat& e = eps_[i][j];
      if (e <= 0) continue;  // draw each pair once, from the positive side
      os << "  \"" << vertices_[i].str() << "\" -> \"" << vertices_[j].str() << "\"";
      std::vector<std::string> attrs;
      const Rat& back = eps_[j][i];
      if (!(e == 1 && back == -1))
        attrs.push_back("label=\"" + rat_str(e) + "," + rat_str(back) + "\"");
      if (!is_integer(e) || !is_integer(back)) attrs.push_back("style=dashed");
      if (!attrs.empty()) {
        os << " [" << attrs[0];
        for (std::size_t k = 1; k < attrs.size(); ++k) os << ", " << attrs[k];
        os << "]";
      }
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

void check_isomorphism(const Seed& source, const std::map<VertexId, VertexId>& sigma,
                       const Seed& target) {
  Seed transported = source.apply_isomorphism(sigma);
  if (!(transported == target))
    throw NotAnIsomorphism("epsilon is not transported consistently");
}

Seed letter_seed(int letter, const CartanMatrix& cartan) {
  if (letter == 0 || std::abs(letter) > cartan.rank())
    throw IndexOutOfRange("letter " + std::to_string(letter));
  int alpha = std::abs(letter);
  int sign = letter > 0 ? 1 : -1;
  int n = cartan.rank();
  // Vertices: alpha_- = (alpha, 0), alpha_+ = (alpha, 1), spectators (beta, 0).
  std::vector<VertexId> verts;
  std::vector<long> d;
  for (int b = 1; b <= n; ++b) {
    if (b == alpha) {
      verts.push_back({alpha, 0});
      verts.push_back({alpha, 1});
      d.push_back(cartan.d(alpha));
      d.push_back(cartan.d(alpha));
    } else {
      verts.push_back({b, 0});
      d.push_back(cartan.d(b));
    }
  }
  int m = static_cast<int>(verts.size());
  std::vector<std::vector<Rat>> eps(m, std::vector<Rat>(m, 0));
  auto at = [&](const VertexId& v) {
    return static_cast<int>(std::find(verts.begin(), verts.end(), v) - verts.begin());
  };
  int am = at({alpha, 0}), ap = at({alpha, 1});
  eps[ap][am] = sign;
  eps[am][ap] = -sign;
  for (int b = 1; b <= n; ++b) {
    if (b == alpha) continue;
    int ib = at({b, 0});
    eps[ap][ib] = Rat(sign * cartan.c(b, alpha), 2);
    eps[am][ib] = Rat(-sign * cartan.c(b, alpha), 2);
    eps[ib][am] = Rat(sign * cartan.c(alpha, b), 2);
    eps[ib][ap] = Rat(-sign * cartan.c(alpha, b), 2);
    eps[ap][ib].canonicalize();
    eps[am][ib].canonicalize();
    eps[ib][am].canonicalize();
    eps[ib][ap].canonicalize();
  }
  std::vector<bool> frozen(m, true);
  return Seed(std::move(verts), std::move(frozen), std::move(eps), std::move(d));
}

std::pair<Seed, StringDiagram> amalgamate(const PairWord& word) {
  const CartanMatrix& cartan = word.cartan;
  int rank = cartan.rank();
  StringDiagram diagram{word, {}, {}};
  diagram.n_alpha.assign(rank + 1, 0);
  diagram.node_index.assign(rank + 1, {});
  for (std::size_t k = 0; k < word.letters.size(); ++k) {
    int level = std::abs(word.letters[k]);
    ++diagram.n_alpha[level];
    diagram.node_index[level].push_back(static_cast<int>(k));
  }

  std::vector<VertexId> verts;
  std::vector<long> d;
  std::vector<bool> frozen;
  for (int a = 1; a <= rank; ++a) {
    for (long i = 0; i <= diagram.n_alpha[a]; ++i) {
      verts.push_back({a, static_cast<int>(i)});
      d.push_back(cartan.d(a));
      frozen.push_back(i == 0 || i == diagram.n_alpha[a]);
    }
  }
  std::map<VertexId, int> at;
  for (std::size_t i = 0; i < verts.size(); ++i) at[verts[i]] = static_cast<int>(i);

  int m = static_cast<int>(verts.size());
  std::vector<std::vector<Rat>> eps(m, std::vector<Rat>(m, 0));

  // Sum the letter-seed contributions under the gluing maps i^k.
  std::vector<long> seen(rank + 1, 0);  // occurrences so far per level
  for (int letter : word.letters) {
    int alpha = std::abs(letter);
    int sign = letter > 0 ? 1 : -1;
    long i = ++seen[alpha];  // this is the i-th appearance of +-alpha
    int am = at.at({alpha, static_cast<int>(i - 1)});
    int ap = at.at({alpha, static_cast<int>(i)});
    eps[ap][am] += sign;
    eps[am][ap] += -sign;
    for (int b = 1; b <= rank; ++b) {
      if (b == alpha) continue;
      int ib = at.at({b, static_cast<int>(seen[b])});
      Rat half_ba(sign * cartan.c(b, alpha), 2);
      Rat half_ab(sign * cartan.c(alpha, b), 2);
      half_ba.canonicalize();
      half_ab.canonicalize();
      eps[ap][ib] += half_ba;
      eps[am][ib] += -half_ba;
      eps[ib][am] += half_ab;
      eps[ib][ap] += -half_ab;
    }
  }
  Seed seed(std::move(verts), std::move(frozen), std::move(eps), std::move(d));
  return {std::move(seed), std::move(diagram)};
}

Seed amalgamate_seed(const std::vector<int>& letters, const CartanMatrix& cartan) {
  PairWord w{letters, cartan};
  return amalgamate(w).first;
}

}  // namespace dbcell
