#include <algorithm>
#include <cmath>

#include "escrate/escape.hpp"

namespace escrate {

namespace {

constexpr long kBlockCap = 2000000;

bool contains_forbidden(const std::vector<int>& s, const WordCollection& f) {
  for (const auto& w : f.words()) {
    const int pl = w.length(), n = static_cast<int>(s.size());
    for (int off = 0; off + pl <= n; ++off) {
      int i = 0;
      while (i < pl && s[static_cast<size_t>(off + i)] == w.at(i)) ++i;
      if (i == pl) return true;
    }
  }
  return false;
}

}  // namespace

int ParryData::state_index(const Word& block) const {
  auto it = std::lower_bound(states.begin(), states.end(), block);
  if (it == states.end() || !(*it == block)) return -1;
  return static_cast<int>(it - states.begin());
}

ParryData parry_data(const WordCollection& forbidden, int q) {
  ParryData pd;
  pd.q = q;
  int max_len = 1;
  for (const auto& w : forbidden.words()) max_len = std::max(max_len, w.length());
  pd.block_len = std::max(1, max_len - 1);
  const int m = pd.block_len;

  double n_blocks = std::pow(static_cast<double>(q), m);
  if (n_blocks > static_cast<double>(kBlockCap))
    raise("CapExceeded", "block presentation would need q^" + std::to_string(m) + " states");

  // All forbidden-word-free blocks, lexicographic.
  std::vector<int> blk(static_cast<size_t>(m), 0);
  std::vector<Word> states;
  while (true) {
    if (!contains_forbidden(blk, forbidden)) states.emplace_back(blk);
    int pos = m - 1;
    while (pos >= 0 && blk[static_cast<size_t>(pos)] == q - 1) blk[static_cast<size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++blk[static_cast<size_t>(pos)];
  }

  // Sink-prune: a live block must extend forward forever.
  std::vector<bool> alive(states.size(), true);
  auto index_of = [&](const std::vector<int>& b) {
    Word w{b};
    auto it = std::lower_bound(states.begin(), states.end(), w);
    if (it == states.end() || !(*it == w)) return -1;
    return static_cast<int>(it - states.begin());
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t s = 0; s < states.size(); ++s) {
      if (!alive[s]) continue;
      bool has_succ = false;
      std::vector<int> window(states[s].symbols());
      window.push_back(0);
      for (int a = 0; a < q && !has_succ; ++a) {
        window.back() = a;
        if (contains_forbidden(window, forbidden)) continue;
        std::vector<int> nxt(window.begin() + 1, window.end());
        int t = index_of(nxt);
        if (t >= 0 && alive[static_cast<size_t>(t)]) has_succ = true;
      }
      if (!has_succ) {
        alive[s] = false;
        changed = true;
      }
    }
  }

  for (size_t s = 0; s < states.size(); ++s)
    if (alive[s]) pd.states.push_back(states[s]);
  if (pd.states.empty())
    raise("NotIrreducible", "the subshift is empty; no Parry measure exists");

  const int n = static_cast<int>(pd.states.size());
  pd.next.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(q), -1));
  TransferMatrix tm;
  tm.n = n;
  tm.a.assign(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n), 0));
  for (int s = 0; s < n; ++s) {
    std::vector<int> window(pd.states[static_cast<size_t>(s)].symbols());
    window.push_back(0);
    for (int a = 0; a < q; ++a) {
      window.back() = a;
      if (contains_forbidden(window, forbidden)) continue;
      std::vector<int> nxt(window.begin() + 1, window.end());
      int t = pd.state_index(Word{nxt});
      if (t < 0) continue;
      pd.next[static_cast<size_t>(s)][static_cast<size_t>(a)] = t;
      ++tm.a[static_cast<size_t>(s)][static_cast<size_t>(t)];
    }
  }

  auto sccs = strongly_connected_components(tm);
  if (sccs.size() != 1)
    raise("NotIrreducible", "the block presentation has " + std::to_string(sccs.size()) +
                                " strongly connected components");

  pd.theta = spectral_radius(tm, 1e-13);
  const double theta = pd.theta.value;

  // Right and left Perron vectors by (A + I) power iteration; the shift keeps
  // periodic presentations converging.
  auto iterate = [&](bool transpose) {
    std::vector<double> x(static_cast<size_t>(n), 1.0), y(static_cast<size_t>(n));
    for (int it = 0; it < 200000; ++it) {
      for (int i = 0; i < n; ++i) {
        double acc = x[static_cast<size_t>(i)];
        for (int j = 0; j < n; ++j) {
          long e = transpose ? tm.a[static_cast<size_t>(j)][static_cast<size_t>(i)]
                             : tm.a[static_cast<size_t>(i)][static_cast<size_t>(j)];
          if (e) acc += e * x[static_cast<size_t>(j)];
        }
        y[static_cast<size_t>(i)] = acc;
      }
      double mx = 0;
      for (double v : y) mx = std::max(mx, v);
      for (auto& v : y) v /= mx;
      double resid = 0;
      for (int i = 0; i < n; ++i) {
        double acc = y[static_cast<size_t>(i)];
        for (int j = 0; j < n; ++j) {
          long e = transpose ? tm.a[static_cast<size_t>(j)][static_cast<size_t>(i)]
                             : tm.a[static_cast<size_t>(i)][static_cast<size_t>(j)];
          if (e) acc += e * y[static_cast<size_t>(j)];
        }
        resid = std::max(resid, std::fabs(acc - (theta + 1.0) * y[static_cast<size_t>(i)]));
      }
      x = y;
      if (resid < 1e-13 * (theta + 1.0)) break;
    }
    return x;
  };

  pd.v = iterate(false);
  pd.u = iterate(true);

  // Normalize: u.v = 1 with equal Euclidean norms (full shift: both uniform).
  double dot = 0, nu = 0, nv = 0;
  for (int i = 0; i < n; ++i) {
    dot += pd.u[static_cast<size_t>(i)] * pd.v[static_cast<size_t>(i)];
    nu += pd.u[static_cast<size_t>(i)] * pd.u[static_cast<size_t>(i)];
    nv += pd.v[static_cast<size_t>(i)] * pd.v[static_cast<size_t>(i)];
  }
  // First scale u so u.v = 1, then balance the two norms; the product, and
  // with it every cylinder measure, is unchanged.
  for (auto& x : pd.u) x /= dot;
  nu = 0;
  for (int i = 0; i < n; ++i) nu += pd.u[static_cast<size_t>(i)] * pd.u[static_cast<size_t>(i)];
  double gamma = std::sqrt(std::sqrt(nv) / std::sqrt(nu));
  for (auto& x : pd.u) x *= gamma;
  for (auto& x : pd.v) x /= gamma;
  return pd;
}

double cylinder_measure(const Word& w, const ParryData& pd) {
  const int n = w.length(), m = pd.block_len;
  if (w.max_symbol() >= pd.q) raise("NotAllowedWord", "symbol outside the alphabet");

  if (n < m) {
    // Union of the block cylinders extending w; stationary weights u_B v_B.
    double total = 0;
    bool any = false;
    for (size_t s = 0; s < pd.states.size(); ++s) {
      const Word& b = pd.states[s];
      bool pref = true;
      for (int i = 0; i < n; ++i)
        if (b.at(i) != w.at(i)) {
          pref = false;
          break;
        }
      if (pref) {
        any = true;
        total += pd.u[s] * pd.v[s];
      }
    }
    if (!any) raise("NotAllowedWord", "\"" + w.str() + "\" is not allowed in the subshift");
    return total;
  }

  std::vector<int> first_block(w.symbols().begin(), w.symbols().begin() + m);
  int s = pd.state_index(Word{first_block});
  if (s < 0) raise("NotAllowedWord", "\"" + w.str() + "\" is not allowed in the subshift");
  int cur = s;
  for (int i = m; i < n; ++i) {
    cur = pd.next[static_cast<size_t>(cur)][static_cast<size_t>(w.at(i))];
    if (cur < 0) raise("NotAllowedWord", "\"" + w.str() + "\" is not allowed in the subshift");
  }
  const double theta = pd.theta.value;
  return pd.u[static_cast<size_t>(s)] * pd.v[static_cast<size_t>(cur)] /
         std::pow(theta, n - m);
}

double hole_measure(const WordCollection& g, const ParryData& pd) {
  double total = 0;
  for (const auto& w : g.words()) total += cylinder_measure(w, pd);
  return total;
}

}  // namespace escrate
