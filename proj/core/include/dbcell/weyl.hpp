#ifndef DBCELL_WEYL_HPP
#define DBCELL_WEYL_HPP

#include <string>
#include <vector>

#include "dbcell/cartan.hpp"

namespace dbcell {

// A word in the simple reflections, 1-based letters.
using WeylWord = std::vector<int>;

// The finite root system spanned by the simple roots of C, with the Weyl
// group acting on root coordinates. All elements are handled through reduced
// words; equality goes through the lexicographically smallest reduced word.
class WeylGroup {
 public:
  explicit WeylGroup(const CartanMatrix& cartan);

  const CartanMatrix& cartan() const { return cartan_; }
  int rank() const { return cartan_.rank(); }
  long positive_root_count() const { return static_cast<long>(positive_roots_.size()); }

  bool is_reduced(const WeylWord& word) const;
  long length(const WeylWord& word) const;

  // Lexicographically smallest reduced word representing the same element.
  WeylWord normal_form(const WeylWord& word) const;
  bool equal(const WeylWord& a, const WeylWord& b) const;

  WeylWord longest_element() const;
  WeylWord star(const WeylWord& word) const;   // w0 w w0
  WeylWord c_map(const WeylWord& word) const;  // w0 w^{-1}
  static WeylWord inverse(const WeylWord& word);

  // Image of the simple root alpha under the left action of the word,
  // in simple-root coordinates.
  std::vector<long> act(const WeylWord& word, int alpha) const;

 private:
  void check_index(int alpha) const;
  std::vector<long> reflect(int alpha, const std::vector<long>& v) const;
  bool is_positive(const std::vector<long>& v) const;

  CartanMatrix cartan_;
  std::vector<std::vector<long>> positive_roots_;
};

// Reduced word of a pair (u, v): negative letters spell u, positive spell v.
struct PairWord {
  std::vector<int> letters;  // nonzero; -a is a u-letter, +a a v-letter
  CartanMatrix cartan;

  WeylWord u_word() const;
  WeylWord v_word() const;
  std::vector<long> occurrences() const;  // n_alpha per level, 1-based offset 0
  std::string str() const;
};

PairWord validate_pair_word(const std::vector<int>& letters, const CartanMatrix& cartan);
std::vector<int> parse_signed_word(const std::string& text);

}  // namespace dbcell

#endif
