#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "escrate/perron.hpp"
#include "escrate/words.hpp"

namespace escrate {

// A hole (union of cylinders on the words of `hole`) in the full shift on q
// symbols, or in the subshift avoiding `base` when a base is given.
// Validation: base and base+hole collections are reduced, and every hole word
// is accepted by the base avoidance automaton. Raises InvalidHole.
struct HoleSpec {
  int q;
  WordCollection hole;
  std::optional<WordCollection> base;

  HoleSpec(int q_, WordCollection hole_, std::optional<WordCollection> base_ = std::nullopt);

  // base and hole merged; the forbidden collection of the survivor subshift.
  WordCollection survivor_forbidden() const;
  bool same_setting(const HoleSpec& o) const;
};

struct EngineOptions {
  enum class Engine { Auto, Polynomial, Matrix };
  Engine engine = Engine::Auto;
  bool crosscheck = false;   // run both engines and compare at crosscheck_tol
  double tol = 1e-12;
  double crosscheck_tol = 1e-9;
};

struct EscapeRateResult {
  double rho = 0.0;
  PerronResult lambda;  // survivor Perron root
  PerronResult theta;   // ambient Perron root (exact q for the full shift)
  double entropy_ambient = 0.0;
  double entropy_survivor = 0.0;
  std::string method;
  std::vector<std::string> diagnostics;
};

// rho = ln(theta) - ln(lambda), both roots carried with certified brackets.
// Raises EmptySurvivorSet when nothing survives, EmptySubshift when the
// ambient subshift is empty.
EscapeRateResult escape_rate(const HoleSpec& h, const EngineOptions& opts = {});

enum class Ordering { Less, Greater, Tie };
std::string ordering_str(Ordering o);

struct ComparisonResult {
  Ordering ordering = Ordering::Tie;
  bool certified = false;       // certified orderings have disjoint lambda brackets
  Rational gap_lower;           // proven lower bound on |lambda1 - lambda2| when certified
  Rational residual;            // upper bound on |lambda1 - lambda2| when TIE
  PerronResult lambda1, lambda2;
  long refinements = 0;
};

// Certified comparison of escape rates of two holes over the same base and q:
// LESS means rho(h1) < rho(h2). Brackets are refined (with exact sign tests
// of each characteristic polynomial at the other bracket's endpoints) until
// the order is certified or the widths reach width_floor, then TIE is
// reported with the residual bound.
ComparisonResult compare_escape(const HoleSpec& h1, const HoleSpec& h2,
                                double width_floor = 1e-12);

// Parry-measure data for the subshift avoiding `forbidden`: the block
// presentation on allowed (p-1)-blocks, its Perron root, and the left/right
// eigenvectors normalized to u.v = 1 with equal norms.
struct ParryData {
  int q = 0;
  int block_len = 1;
  std::vector<Word> states;
  std::vector<std::vector<int>> next;  // state x symbol -> state or -1
  PerronResult theta;
  std::vector<double> u, v;

  int state_index(const Word& block) const;  // -1 if not a live block
};

ParryData parry_data(const WordCollection& forbidden, int q);  // NotIrreducible

// mu(C_w) under the Parry measure. Raises NotAllowedWord.
double cylinder_measure(const Word& w, const ParryData& pd);
// Sum of the cylinder measures over the (disjoint) hole cylinders.
double hole_measure(const WordCollection& g, const ParryData& pd);

// Thresholds D(t, p) above which the r-order determines the escape-rate
// order.
BigInt d_threshold_two_words(int p);            // 3p^2 + 2
BigInt d_threshold_mixed(int p1, int p2);       // 3*p1*p2 + 2
BigInt d_threshold_generic(int t, int p);       // 2 t^2 (t!)^2 p^(2t-2) + 1

// Instance-specific threshold (a1*b2 + a2*b1)*t*p + 1 from the actual
// coefficient maxima of Delta_i and S_i. Requires equal t and equal word
// length p across the two collections.
BigInt d_instance(const WordCollection& g1, const WordCollection& g2);

// Exact evaluation of (q-1)(t+1) - t q (1 + 1/q)^(t-1) >= 0.
bool gen_period_condition(int q, int t);

// For a word w, the single-word holes with zero cross-correlation against w
// minimizing and maximizing the escape rate: u0 = a^p and u1 = a b^(p-1) with
// a, b the two smallest distinct symbols outside {first(w), last(w)}.
// Raises InsufficientAlphabet.
std::pair<Word, Word> extremal_words(const Word& w, int q);

// Smallest p >= 3 such that the hole on the two length-p prefixes of x and y
// has escape rate < delta (certified via the upper end of the rho bracket).
// Symbols are supplied by index; p_max bounds the search.
int find_small_escape_hole(const std::function<int(int)>& x, const std::function<int(int)>& y,
                           int q, double delta, int p_max = 64);

}  // namespace escrate
