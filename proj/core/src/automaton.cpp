#include "escrate/automaton.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>

namespace escrate {

AvoidanceAutomaton build_avoidance_automaton(const WordCollection& g, int q) {
  if (q < 2) raise("InsufficientAlphabet", "alphabet size must be >= 2");
  for (const auto& w : g.words())
    if (w.max_symbol() >= q)
      raise("InsufficientAlphabet",
            "collection uses symbol index " + std::to_string(w.max_symbol()) +
                " but q = " + std::to_string(q));

  // Trie over the forbidden words.
  struct Node {
    std::vector<int> child;
    int fail = 0;
    bool terminal = false;
    bool dead = false;
    std::string label;
  };
  std::vector<Node> trie(1);
  trie[0].child.assign(static_cast<size_t>(q), -1);
  for (const auto& w : g.words()) {
    int cur = 0;
    for (int v : w.symbols()) {
      int& slot = trie[static_cast<size_t>(cur)].child[static_cast<size_t>(v)];
      if (slot < 0) {
        slot = static_cast<int>(trie.size());
        Node n;
        n.child.assign(static_cast<size_t>(q), -1);
        n.label = trie[static_cast<size_t>(cur)].label + Word({v}).str();
        trie.push_back(std::move(n));
        // trie.push_back may invalidate `slot`; re-read below
        cur = static_cast<int>(trie.size()) - 1;
      } else {
        cur = slot;
      }
    }
    trie[static_cast<size_t>(cur)].terminal = true;
  }

  // Failure links (BFS) and goto completion; dead = completes a forbidden word.
  std::deque<int> queue;
  std::vector<std::vector<int>> step(trie.size(), std::vector<int>(static_cast<size_t>(q)));
  for (int a = 0; a < q; ++a) {
    int c = trie[0].child[static_cast<size_t>(a)];
    if (c < 0) {
      step[0][static_cast<size_t>(a)] = 0;
    } else {
      trie[static_cast<size_t>(c)].fail = 0;
      step[0][static_cast<size_t>(a)] = c;
      queue.push_back(c);
    }
  }
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    Node& node = trie[static_cast<size_t>(s)];
    node.dead = node.terminal || trie[static_cast<size_t>(node.fail)].dead;
    for (int a = 0; a < q; ++a) {
      int c = node.child[static_cast<size_t>(a)];
      if (c < 0) {
        step[static_cast<size_t>(s)][static_cast<size_t>(a)] =
            step[static_cast<size_t>(node.fail)][static_cast<size_t>(a)];
      } else {
        trie[static_cast<size_t>(c)].fail =
            step[static_cast<size_t>(node.fail)][static_cast<size_t>(a)];
        step[static_cast<size_t>(s)][static_cast<size_t>(a)] = c;
        queue.push_back(c);
      }
    }
  }

  // Keep the live states.
  std::vector<int> live_index(trie.size(), -1);
  AvoidanceAutomaton out;
  out.q = q;
  for (size_t s = 0; s < trie.size(); ++s) {
    if (trie[s].dead) continue;
    live_index[s] = static_cast<int>(out.labels.size());
    out.labels.push_back(trie[s].label);
  }
  out.root = live_index[0];
  out.next.assign(out.labels.size(), std::vector<int>(static_cast<size_t>(q),
                                                      AvoidanceAutomaton::kDead));
  for (size_t s = 0; s < trie.size(); ++s) {
    if (trie[s].dead) continue;
    for (int a = 0; a < q; ++a) {
      int tgt = step[s][static_cast<size_t>(a)];
      out.next[static_cast<size_t>(live_index[s])][static_cast<size_t>(a)] =
          trie[static_cast<size_t>(tgt)].dead ? AvoidanceAutomaton::kDead : live_index[static_cast<size_t>(tgt)];
    }
  }
  return out;
}

TransferMatrix transfer_matrix(const AvoidanceAutomaton& automaton) {
  TransferMatrix t;
  t.n = automaton.num_states();
  t.a.assign(static_cast<size_t>(t.n), std::vector<long>(static_cast<size_t>(t.n), 0));
  for (int s = 0; s < t.n; ++s)
    for (int a = 0; a < automaton.q; ++a) {
      int d = automaton.next[static_cast<size_t>(s)][static_cast<size_t>(a)];
      if (d != AvoidanceAutomaton::kDead) ++t.a[static_cast<size_t>(s)][static_cast<size_t>(d)];
    }
  return t;
}

std::vector<BigInt> count_words_upto(const AvoidanceAutomaton& automaton, int n_max) {
  const int n_states = automaton.num_states();
  std::vector<BigInt> v(static_cast<size_t>(n_states), BigInt(0));
  v[static_cast<size_t>(automaton.root)] = 1;
  std::vector<BigInt> counts;
  counts.reserve(static_cast<size_t>(n_max) + 1);
  counts.emplace_back(1);
  for (int n = 1; n <= n_max; ++n) {
    std::vector<BigInt> w(static_cast<size_t>(n_states), BigInt(0));
    for (int s = 0; s < n_states; ++s) {
      if (v[static_cast<size_t>(s)] == 0) continue;
      for (int a = 0; a < automaton.q; ++a) {
        int d = automaton.next[static_cast<size_t>(s)][static_cast<size_t>(a)];
        if (d != AvoidanceAutomaton::kDead) w[static_cast<size_t>(d)] += v[static_cast<size_t>(s)];
      }
    }
    v = std::move(w);
    BigInt total(0);
    for (const auto& x : v) total += x;
    counts.push_back(std::move(total));
  }
  return counts;
}

BigInt count_words(const AvoidanceAutomaton& automaton, int n) {
  if (n < 0) raise("BadArgument", "word length must be >= 0");
  return count_words_upto(automaton, n).back();
}

BigInt default_brute_cap() {
  if (const char* env = std::getenv("ESCRATE_BRUTE_CAP")) return BigInt(env);
  return BigInt(10000000);
}

BigInt brute_force_count(const WordCollection& g, int q, int n) {
  return brute_force_count(g, q, n, default_brute_cap());
}

BigInt brute_force_count(const WordCollection& g, int q, int n, const BigInt& cap) {
  if (n < 0) raise("BadArgument", "word length must be >= 0");
  BigInt universe = int_pow(BigInt(q), static_cast<unsigned long>(n));
  if (universe > cap)
    raise("CapExceeded", "q^n = " + universe.get_str() + " exceeds the cap " + cap.get_str());
  if (n == 0) return 1;

  std::vector<std::vector<int>> pats;
  for (const auto& w : g.words()) {
    if (w.max_symbol() >= q)
      raise("InsufficientAlphabet", "collection does not fit alphabet of size " + std::to_string(q));
    if (w.length() <= n) pats.push_back(w.symbols());
  }

  std::vector<int> word(static_cast<size_t>(n), 0);
  long long count = 0;
  while (true) {
    bool bad = false;
    for (const auto& p : pats) {
      const int pl = static_cast<int>(p.size());
      for (int off = 0; off + pl <= n && !bad; ++off) {
        int i = 0;
        while (i < pl && word[static_cast<size_t>(off + i)] == p[static_cast<size_t>(i)]) ++i;
        if (i == pl) bad = true;
      }
      if (bad) break;
    }
    if (!bad) ++count;
    int pos = n - 1;
    while (pos >= 0 && word[static_cast<size_t>(pos)] == q - 1) word[static_cast<size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++word[static_cast<size_t>(pos)];
  }
  return BigInt(static_cast<long>(count));
}

namespace {

struct TarjanState {
  const TransferMatrix& t;
  std::vector<int> index, low, stack;
  std::vector<bool> on_stack;
  std::vector<std::vector<int>> components;
  int counter = 0;

  explicit TarjanState(const TransferMatrix& tm)
      : t(tm),
        index(static_cast<size_t>(tm.n), -1),
        low(static_cast<size_t>(tm.n), 0),
        on_stack(static_cast<size_t>(tm.n), false) {}

  void run(int v0) {
    // Iterative Tarjan to keep deep chains off the call stack.
    struct Frame {
      int v;
      int next_w;
    };
    std::vector<Frame> frames{{v0, 0}};
    index[static_cast<size_t>(v0)] = low[static_cast<size_t>(v0)] = counter++;
    stack.push_back(v0);
    on_stack[static_cast<size_t>(v0)] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      bool descended = false;
      while (f.next_w < t.n) {
        int w = f.next_w++;
        if (t.a[static_cast<size_t>(f.v)][static_cast<size_t>(w)] == 0) continue;
        if (index[static_cast<size_t>(w)] < 0) {
          index[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = counter++;
          stack.push_back(w);
          on_stack[static_cast<size_t>(w)] = true;
          frames.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[static_cast<size_t>(w)])
          low[static_cast<size_t>(f.v)] = std::min(low[static_cast<size_t>(f.v)], index[static_cast<size_t>(w)]);
      }
      if (descended) continue;
      if (low[static_cast<size_t>(f.v)] == index[static_cast<size_t>(f.v)]) {
        std::vector<int> comp;
        while (true) {
          int w = stack.back();
          stack.pop_back();
          on_stack[static_cast<size_t>(w)] = false;
          comp.push_back(w);
          if (w == f.v) break;
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
      int child = f.v;
      frames.pop_back();
      if (!frames.empty()) {
        int parent = frames.back().v;
        low[static_cast<size_t>(parent)] =
            std::min(low[static_cast<size_t>(parent)], low[static_cast<size_t>(child)]);
      }
    }
  }
};

}  // namespace

std::vector<std::vector<int>> strongly_connected_components(const TransferMatrix& t) {
  TarjanState ts(t);
  for (int v = 0; v < t.n; ++v)
    if (ts.index[static_cast<size_t>(v)] < 0) ts.run(v);
  std::sort(ts.components.begin(), ts.components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return ts.components;
}

}  // namespace escrate
