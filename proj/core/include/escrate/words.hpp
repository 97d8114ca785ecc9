#pragma once

#include <optional>
#include <string>
#include <vector>

#include "escrate/polynomial.hpp"

namespace escrate {

enum class ParseMode { Digit, Abstract };

// Immutable symbol sequence; symbols are indices in [0, q) but the word does
// not carry q itself (collections do).
class Word {
 public:
  explicit Word(std::vector<int> symbols);

  int length() const { return static_cast<int>(s_.size()); }
  int at(int i) const { return s_[static_cast<size_t>(i)]; }
  const std::vector<int>& symbols() const { return s_; }
  int max_symbol() const;

  std::string str() const;  // digit form, 0-9a-z

  bool operator==(const Word& o) const { return s_ == o.s_; }
  bool operator!=(const Word& o) const { return s_ != o.s_; }
  bool operator<(const Word& o) const { return s_ < o.s_; }

 private:
  std::vector<int> s_;
};

// Digit mode: characters 0-9a-z map to 0..35. Abstract mode: letters a-z map
// to 0..25 (the tables' convention that a, b, c, ... are distinct symbols).
// Raises BadCharacter / InsufficientAlphabet.
Word parse_word(const std::string& text, int q, ParseMode mode);
std::vector<Word> parse_word_list(const std::string& csv, int q, ParseMode mode);

class WordCollection {
 public:
  // Validates: q >= 2, symbols < q, words distinct and reduced (no word is a
  // subword of another). Raises InsufficientAlphabet / NotReduced.
  WordCollection(int q, std::vector<Word> words);
  static WordCollection parse(const std::string& csv, int q, ParseMode mode);

  int alphabet_size() const { return q_; }
  const std::vector<Word>& words() const { return words_; }
  int size() const { return static_cast<int>(words_.size()); }
  bool empty() const { return words_.empty(); }

  std::string str() const;  // comma-separated digit form

  bool operator==(const WordCollection& o) const { return q_ == o.q_ && words_ == o.words_; }

 private:
  int q_;
  std::vector<Word> words_;
};

bool is_subword(const Word& needle, const Word& haystack);

// Correlation polynomial (u,w)_z = sum b_l z^{p1-l}, where b_l = 1 iff the
// suffix of u starting at position l agrees with w on their full overlap of
// length min(p1-l+1, p2).
IntPolynomial correlation(const Word& u, const Word& w);

// Smallest l >= 1 with u_{i+l} = u_i for all valid i; equals |u| when the
// word has no proper self-overlap.
int minimal_period_word(const Word& u);

// min over the collection; raises EmptyCollection on an empty hole.
int minimal_period_hole(const WordCollection& g);

bool has_zero_cross_correlations(const WordCollection& g);

// pi must be a bijection on [0, q).
Word permute_symbols(const Word& w, const std::vector<int>& pi);
WordCollection permute_symbols(const WordCollection& g, const std::vector<int>& pi);

}  // namespace escrate
