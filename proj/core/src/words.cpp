#include "escrate/words.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace escrate {

Word::Word(std::vector<int> symbols) : s_(std::move(symbols)) {
  if (s_.empty()) raise("BadWord", "words must have length >= 1");
  for (int v : s_)
    if (v < 0) raise("BadWord", "negative symbol index");
}

int Word::max_symbol() const { return *std::max_element(s_.begin(), s_.end()); }

std::string Word::str() const {
  std::string out;
  out.reserve(s_.size());
  for (int v : s_) out += (v < 10) ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10);
  return out;
}

Word parse_word(const std::string& text, int q, ParseMode mode) {
  if (text.empty()) raise("BadCharacter", "empty word");
  std::vector<int> s;
  s.reserve(text.size());
  for (char c : text) {
    int idx;
    if (mode == ParseMode::Digit) {
      if (c >= '0' && c <= '9')
        idx = c - '0';
      else if (c >= 'a' && c <= 'z')
        idx = 10 + (c - 'a');
      else
        raise("BadCharacter", std::string("character '") + c + "' is not in 0-9a-z");
    } else {
      if (c >= 'a' && c <= 'z')
        idx = c - 'a';
      else
        raise("BadCharacter", std::string("character '") + c + "' is not a letter a-z");
    }
    if (idx >= q)
      raise("InsufficientAlphabet", "word \"" + text + "\" needs symbol index " +
                                        std::to_string(idx) + " but q = " + std::to_string(q));
    s.push_back(idx);
  }
  return Word(std::move(s));
}

std::vector<Word> parse_word_list(const std::string& csv, int q, ParseMode mode) {
  std::vector<Word> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) {
    // tolerate surrounding blanks
    size_t b = item.find_first_not_of(" \t");
    size_t e = item.find_last_not_of(" \t");
    if (b == std::string::npos) raise("BadCharacter", "empty word in list \"" + csv + "\"");
    out.push_back(parse_word(item.substr(b, e - b + 1), q, mode));
  }
  if (out.empty()) raise("BadCharacter", "empty word list");
  return out;
}

bool is_subword(const Word& needle, const Word& haystack) {
  const int n = needle.length(), h = haystack.length();
  if (n > h) return false;
  for (int off = 0; off + n <= h; ++off) {
    bool match = true;
    for (int i = 0; i < n; ++i)
      if (haystack.at(off + i) != needle.at(i)) {
        match = false;
        break;
      }
    if (match) return true;
  }
  return false;
}

WordCollection::WordCollection(int q, std::vector<Word> words)
    : q_(q), words_(std::move(words)) {
  if (q_ < 2) raise("InsufficientAlphabet", "alphabet size must be >= 2");
  for (const auto& w : words_) {
    if (w.max_symbol() >= q_)
      raise("InsufficientAlphabet", "word \"" + w.str() + "\" uses symbol index " +
                                        std::to_string(w.max_symbol()) + " but q = " +
                                        std::to_string(q_));
  }
  for (size_t i = 0; i < words_.size(); ++i)
    for (size_t j = 0; j < words_.size(); ++j) {
      if (i == j) continue;
      if (is_subword(words_[i], words_[j]))
        raise("NotReduced", "\"" + words_[i].str() + "\" is a subword of \"" +
                                words_[j].str() + "\"");
    }
}

WordCollection WordCollection::parse(const std::string& csv, int q, ParseMode mode) {
  return WordCollection(q, parse_word_list(csv, q, mode));
}

std::string WordCollection::str() const {
  std::string out;
  for (size_t i = 0; i < words_.size(); ++i) {
    if (i) out += ",";
    out += words_[i].str();
  }
  return out;
}

IntPolynomial correlation(const Word& u, const Word& w) {
  const int p1 = u.length(), p2 = w.length();
  std::map<long, BigInt> coeffs;
  for (int l = 1; l <= p1; ++l) {
    const int overlap = std::min(p1 - l + 1, p2);
    bool match = true;
    for (int i = 0; i < overlap; ++i)
      if (u.at(l - 1 + i) != w.at(i)) {
        match = false;
        break;
      }
    if (match) coeffs[p1 - l] = 1;
  }
  return IntPolynomial::from_map(coeffs);
}

int minimal_period_word(const Word& u) {
  const int p = u.length();
  for (int l = 1; l < p; ++l) {
    bool periodic = true;
    for (int i = 0; i + l < p; ++i)
      if (u.at(i + l) != u.at(i)) {
        periodic = false;
        break;
      }
    if (periodic) return l;
  }
  return p;
}

int minimal_period_hole(const WordCollection& g) {
  if (g.empty()) raise("EmptyCollection", "minimal period of an empty hole");
  int best = g.words()[0].length() + 1;
  for (const auto& w : g.words()) best = std::min(best, minimal_period_word(w));
  return best;
}

bool has_zero_cross_correlations(const WordCollection& g) {
  for (const auto& u : g.words())
    for (const auto& w : g.words()) {
      if (u == w) continue;
      if (!correlation(u, w).is_zero()) return false;
    }
  return true;
}

Word permute_symbols(const Word& w, const std::vector<int>& pi) {
  std::vector<bool> seen(pi.size(), false);
  for (int v : pi) {
    if (v < 0 || v >= static_cast<int>(pi.size()) || seen[static_cast<size_t>(v)])
      raise("BadPermutation", "not a bijection on [0, q)");
    seen[static_cast<size_t>(v)] = true;
  }
  std::vector<int> s;
  s.reserve(static_cast<size_t>(w.length()));
  for (int v : w.symbols()) {
    if (v >= static_cast<int>(pi.size())) raise("BadPermutation", "symbol outside the domain");
    s.push_back(pi[static_cast<size_t>(v)]);
  }
  return Word(std::move(s));
}

WordCollection permute_symbols(const WordCollection& g, const std::vector<int>& pi) {
  if (static_cast<int>(pi.size()) != g.alphabet_size())
    raise("BadPermutation", "permutation size differs from the alphabet size");
  std::vector<Word> ws;
  ws.reserve(g.words().size());
  for (const auto& w : g.words()) ws.push_back(permute_symbols(w, pi));
  return WordCollection(g.alphabet_size(), std::move(ws));
}

}  // namespace escrate
