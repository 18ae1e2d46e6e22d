#include "dbcell/weyl.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dbcell {

namespace {
constexpr std::size_t kRootCap = 10000;  // guards against non-finite input
}

WeylGroup::WeylGroup(const CartanMatrix& cartan) : cartan_(cartan) {
  int n = cartan_.rank();
  // Close the simple roots under simple reflections.
  std::set<std::vector<long>> seen;
  std::vector<std::vector<long>> queue;
  for (int a = 1; a <= n; ++a) {
    std::vector<long> e(n, 0);
    e[a - 1] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto v = queue.back();
    queue.pop_back();
    for (int a = 1; a <= n; ++a) {
      auto w = reflect(a, v);
      if (is_positive(w) && seen.insert(w).second) {
        if (seen.size() > kRootCap) throw NotFiniteType("root closure exceeded cap");
        queue.push_back(w);
      }
    }
  }
  positive_roots_.assign(seen.begin(), seen.end());
}

void WeylGroup::check_index(int alpha) const {
  if (alpha < 1 || alpha > rank()) throw IndexOutOfRange("letter " + std::to_string(alpha));
}

std::vector<long> WeylGroup::reflect(int alpha, const std::vector<long>& v) const {
  // s_alpha(v) = v - <H_alpha, v> alpha with <H_alpha, beta> = C[alpha][beta]
  long pairing = 0;
  for (int b = 1; b <= rank(); ++b) pairing += cartan_.c(alpha, b) * v[b - 1];
  auto w = v;
  w[alpha - 1] -= pairing;
  return w;
}

bool WeylGroup::is_positive(const std::vector<long>& v) const {
  for (long x : v)
    if (x != 0) return x > 0;
  return false;
}

std::vector<long> WeylGroup::act(const WeylWord& word, int alpha) const {
  check_index(alpha);
  std::vector<long> v(rank(), 0);
  v[alpha - 1] = 1;
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = reflect(*it, v);
  return v;
}

bool WeylGroup::is_reduced(const WeylWord& word) const {
  // Reduced iff every prefix sends its next letter's root to a positive root.
  for (int letter : word) check_index(letter);
  for (std::size_t k = 0; k < word.size(); ++k) {
    std::vector<long> v(rank(), 0);
    v[word[k] - 1] = 1;
    for (std::size_t j = k; j-- > 0;) v = reflect(word[j], v);
    if (!is_positive(v)) return false;
  }
  return true;
}

long WeylGroup::length(const WeylWord& word) const {
  long len = 0;
  for (const auto& root : positive_roots_) {
    auto v = root;
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = reflect(*it, v);
    if (!is_positive(v)) ++len;
  }
  return len;
}

WeylWord WeylGroup::normal_form(const WeylWord& word) const {
  // Repeatedly peel off the smallest left descent.
  for (int letter : word) check_index(letter);
  WeylWord current = word;
  WeylWord out;
  long len = length(current);
  while (len > 0) {
    for (int a = 1; a <= rank(); ++a) {
      // a is a left descent iff w^{-1}(alpha_a) < 0.
      std::vector<long> v(rank(), 0);
      v[a - 1] = 1;
      for (int letter : current) v = reflect(letter, v);  // w^{-1} action
      if (!is_positive(v)) {
        out.push_back(a);
        current.insert(current.begin(), a);  // s_a * w, shorter
        --len;
        break;
      }
    }
  }
  return out;
}

bool WeylGroup::equal(const WeylWord& a, const WeylWord& b) const {
  return normal_form(a) == normal_form(b);
}

WeylWord WeylGroup::longest_element() const {
  WeylWord w;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 1; a <= rank(); ++a) {
      // w s_a longer iff w(alpha_a) > 0
      if (is_positive(act(w, a))) {
        w.push_back(a);
        grew = true;
        break;
      }
    }
  }
  return normal_form(w);
}

WeylWord WeylGroup::inverse(const WeylWord& word) {
  return WeylWord(word.rbegin(), word.rend());
}

WeylWord WeylGroup::star(const WeylWord& word) const {
  if (!is_reduced(word)) throw NotReduced();
  WeylWord w0 = longest_element();
  WeylWord prod;
  prod.insert(prod.end(), w0.begin(), w0.end());
  prod.insert(prod.end(), word.begin(), word.end());
  prod.insert(prod.end(), w0.begin(), w0.end());
  return normal_form(prod);
}

WeylWord WeylGroup::c_map(const WeylWord& word) const {
  if (!is_reduced(word)) throw NotReduced();
  WeylWord w0 = longest_element();
  WeylWord prod;
  prod.insert(prod.end(), w0.begin(), w0.end());
  auto inv = inverse(word);
  prod.insert(prod.end(), inv.begin(), inv.end());
  return normal_form(prod);
}

WeylWord PairWord::u_word() const {
  WeylWord w;
  for (int letter : letters)
    if (letter < 0) w.push_back(-letter);
  return w;
}

WeylWord PairWord::v_word() const {
  WeylWord w;
  for (int letter : letters)
    if (letter > 0) w.push_back(letter);
  return w;
}

std::vector<long> PairWord::occurrences() const {
  std::vector<long> n(cartan.rank() + 1, 0);
  for (int letter : letters) ++n[std::abs(letter)];
  return n;
}

std::string PairWord::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) os << ' ';
    os << letters[i];
  }
  return os.str();
}

PairWord validate_pair_word(const std::vector<int>& letters, const CartanMatrix& cartan) {
  WeylGroup weyl(cartan);
  for (int letter : letters) {
    if (letter == 0) throw IndexOutOfRange("zero letter");
    if (std::abs(letter) > cartan.rank())
      throw IndexOutOfRange("letter " + std::to_string(letter));
  }
  PairWord word{letters, cartan};
  if (!weyl.is_reduced(word.u_word())) throw NotReducedSubword("u-part is not reduced");
  if (!weyl.is_reduced(word.v_word())) throw NotReducedSubword("v-part is not reduced");
  return word;
}

std::vector<int> parse_signed_word(const std::string& text) {
  std::vector<int> letters;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      letters.push_back(v);
    } catch (...) {
      throw ParseError("bad word letter: " + tok);
    }
  }
  return letters;
}

}  // namespace dbcell
