#pragma once

#include <string>
#include <vector>

#include "escrate/numeric.hpp"
#include "escrate/words.hpp"

namespace escrate {

// Deterministic automaton recognizing the words that avoid a forbidden
// collection: states are the proper prefixes of the forbidden words closed
// under failure transitions (Aho-Corasick), with states completing a
// forbidden word removed. next[s][a] == kDead means the symbol kills the word.
struct AvoidanceAutomaton {
  static constexpr int kDead = -1;

  int q = 0;
  int root = 0;
  std::vector<std::vector<int>> next;  // live state x symbol -> live state or kDead
  std::vector<std::string> labels;     // prefix spelled by each live state

  int num_states() const { return static_cast<int>(next.size()); }
};

AvoidanceAutomaton build_avoidance_automaton(const WordCollection& g, int q);

// Nonnegative integer matrix over live states; entry (s, s') counts the
// symbols driving s to s'.
struct TransferMatrix {
  int n = 0;
  std::vector<std::vector<long>> a;
};

TransferMatrix transfer_matrix(const AvoidanceAutomaton& automaton);

// Exact number of length-n words avoiding the collection (paths from the root).
BigInt count_words(const AvoidanceAutomaton& automaton, int n);
std::vector<BigInt> count_words_upto(const AvoidanceAutomaton& automaton, int n_max);

// Independent oracle: enumerate all q^n words and scan for forbidden
// subwords. Raises CapExceeded when q^n > cap (default from ESCRATE_BRUTE_CAP
// or 10^7).
BigInt brute_force_count(const WordCollection& g, int q, int n);
BigInt brute_force_count(const WordCollection& g, int q, int n, const BigInt& cap);
BigInt default_brute_cap();

// Strongly connected components in a deterministic order (Tarjan, components
// listed by their smallest state index).
std::vector<std::vector<int>> strongly_connected_components(const TransferMatrix& t);

}  // namespace escrate
