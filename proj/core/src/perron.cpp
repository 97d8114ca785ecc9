#include "escrate/perron.hpp"

#include <algorithm>
#include <cmath>

namespace escrate {

namespace {

constexpr long kMaxIterations = 100000;

struct ComponentRoot {
  Rational lo, hi;
  long iterations = 0;
};

// Power iteration on (T_c + I) for one strongly connected component, with the
// Collatz-Wielandt bracket evaluated exactly on the integer iterate. The +I
// shift defeats periodicity; it cancels in the ratios (T x)_i / x_i.
ComponentRoot component_root(const TransferMatrix& t, const std::vector<int>& comp,
                             const Rational& tol) {
  const int m = static_cast<int>(comp.size());
  std::vector<BigInt> x(static_cast<size_t>(m), BigInt(1));
  std::vector<BigInt> tx(static_cast<size_t>(m));
  ComponentRoot out;
  for (long it = 1; it <= kMaxIterations; ++it) {
    for (int i = 0; i < m; ++i) {
      BigInt acc(0);
      const auto& row = t.a[static_cast<size_t>(comp[static_cast<size_t>(i)])];
      for (int j = 0; j < m; ++j) {
        long e = row[static_cast<size_t>(comp[static_cast<size_t>(j)])];
        if (e) acc += x[static_cast<size_t>(j)] * e;
      }
      tx[static_cast<size_t>(i)] = std::move(acc);
    }
    Rational lo, hi;
    for (int i = 0; i < m; ++i) {
      Rational ratio(tx[static_cast<size_t>(i)], x[static_cast<size_t>(i)]);
      ratio.canonicalize();
      if (i == 0) {
        lo = hi = ratio;
      } else {
        if (ratio < lo) lo = ratio;
        if (ratio > hi) hi = ratio;
      }
    }
    out.iterations = it;
    if (hi - lo <= tol) {
      out.lo = lo;
      out.hi = hi;
      return out;
    }
    for (int i = 0; i < m; ++i) x[static_cast<size_t>(i)] += tx[static_cast<size_t>(i)];
    // Rescale to keep the integers bounded; any positive vector keeps the
    // bracket valid, so truncation is harmless.
    size_t bits = 0;
    for (const auto& v : x) bits = std::max(bits, mpz_sizeinbase(v.get_mpz_t(), 2));
    if (bits > 768) {
      unsigned long shift = static_cast<unsigned long>(bits - 512);
      for (auto& v : x) {
        mpz_fdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), shift);
        if (v == 0) v = 1;
      }
    }
  }
  raise("NonConvergence", "Collatz-Wielandt bracket did not reach the tolerance after " +
                              std::to_string(kMaxIterations) + " iterations");
}

}  // namespace

PerronResult spectral_radius(const TransferMatrix& t, double tol) {
  PerronResult out;
  out.method = "matrix";
  out.lo = out.hi = Rational(0);
  if (t.n == 0) {
    out.notes.push_back("empty matrix");
    return out;
  }
  const Rational rtol(tol);
  auto components = strongly_connected_components(t);
  int recurrent = 0;
  for (const auto& comp : components) {
    bool nontrivial = comp.size() > 1;
    long self_loop = t.a[static_cast<size_t>(comp[0])][static_cast<size_t>(comp[0])];
    if (!nontrivial && self_loop == 0) continue;  // transient state, contributes 0
    ++recurrent;
    Rational lo, hi;
    long iters = 0;
    if (!nontrivial) {
      lo = hi = Rational(self_loop);  // single state with self-loops: exact
    } else {
      ComponentRoot cr = component_root(t, comp, rtol);
      lo = cr.lo;
      hi = cr.hi;
      iters = cr.iterations;
    }
    out.iterations += iters;
    if (lo > out.lo) out.lo = lo;
    if (hi > out.hi) out.hi = hi;
  }
  out.recurrent_components = recurrent;
  out.irreducible = (recurrent == 1);
  if (recurrent == 0) out.notes.push_back("no recurrent component");
  if (recurrent > 1) out.notes.push_back("reducible: spectral radius is the max over components");
  out.value = to_double((out.lo + out.hi) / 2);
  return out;
}

PerronResult perron_root_of_char_poly(const IntPolynomial& char_poly, int q, double tol) {
  PerronResult out;
  out.method = "polynomial";
  auto bracket = largest_root_in(char_poly, Rational(1), Rational(q), tol);
  if (!bracket) {
    // A root exactly at 1 is still a valid Perron root; (1, q] excludes it.
    if (char_poly.sign_at(Rational(1)) == 0) {
      out.lo = out.hi = Rational(1);
      out.value = 1.0;
      out.notes.push_back("exact root at 1");
      return out;
    }
    raise("NoRealRootFound",
          "no real root in [1, q]; degenerate instance, use the matrix engine");
  }
  out.lo = bracket->lo;
  out.hi = bracket->hi;
  out.iterations = bracket->iterations;
  if (bracket->exact) out.notes.push_back("exact rational root");
  out.value = to_double((out.lo + out.hi) / 2);
  return out;
}

PerronResult perron_root_poly(const WordCollection& g, int q, double tol) {
  return perron_root_of_char_poly(survivor_char_poly(g, q), q, tol);
}

EntropyResult topological_entropy(const WordCollection& forbidden, int q, double tol) {
  AvoidanceAutomaton automaton = build_avoidance_automaton(forbidden, q);
  PerronResult theta = spectral_radius(transfer_matrix(automaton), tol);
  if (theta.hi == 0) raise("EmptySubshift", "the avoidance automaton has no recurrent part");
  EntropyResult out;
  out.value = std::log(theta.value);
  out.theta = std::move(theta);
  return out;
}

}  // namespace escrate
