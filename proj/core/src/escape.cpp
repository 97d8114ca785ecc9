#include "escrate/escape.hpp"

#include <algorithm>
#include <cmath>

namespace escrate {

HoleSpec::HoleSpec(int q_, WordCollection hole_, std::optional<WordCollection> base_)
    : q(q_), hole(std::move(hole_)), base(std::move(base_)) {
  if (hole.empty()) raise("InvalidHole", "hole must contain at least one word");
  if (hole.alphabet_size() != q) raise("InvalidHole", "hole alphabet differs from q");
  if (base) {
    if (base->alphabet_size() != q) raise("InvalidHole", "base alphabet differs from q");
    // every hole word must be allowed in the base subshift
    AvoidanceAutomaton fa = build_avoidance_automaton(*base, q);
    for (const auto& w : hole.words()) {
      int s = fa.root;
      for (int a : w.symbols()) {
        s = fa.next[static_cast<size_t>(s)][static_cast<size_t>(a)];
        if (s == AvoidanceAutomaton::kDead)
          raise("InvalidHole", "hole word \"" + w.str() + "\" is forbidden in the base subshift");
      }
    }
    survivor_forbidden();  // validates that base + hole is reduced
  }
}

WordCollection HoleSpec::survivor_forbidden() const {
  std::vector<Word> all;
  if (base)
    for (const auto& w : base->words()) all.push_back(w);
  for (const auto& w : hole.words()) all.push_back(w);
  try {
    return WordCollection(q, std::move(all));
  } catch (const Error& e) {
    raise("InvalidHole", std::string("base + hole is not a reduced collection (") + e.what() + ")");
  }
}

bool HoleSpec::same_setting(const HoleSpec& o) const {
  if (q != o.q) return false;
  if (base.has_value() != o.base.has_value()) return false;
  if (base && !(*base == *o.base)) return false;
  return true;
}

namespace {

PerronResult survivor_root(const WordCollection& s, int q, const EngineOptions& opts,
                           std::vector<std::string>* diagnostics) {
  auto matrix_root = [&]() {
    return spectral_radius(transfer_matrix(build_avoidance_automaton(s, q)), opts.tol);
  };
  if (opts.engine == EngineOptions::Engine::Matrix) return matrix_root();

  PerronResult poly;
  bool have_poly = false;
  try {
    poly = perron_root_poly(s, q, opts.tol);
    have_poly = true;
  } catch (const Error& e) {
    if (std::string(e.name()) != "NoRealRootFound" || opts.engine == EngineOptions::Engine::Polynomial)
      throw;
    if (diagnostics) diagnostics->push_back("polynomial engine: no root, matrix fallback");
  }
  if (!have_poly) return matrix_root();
  if (opts.engine == EngineOptions::Engine::Auto && opts.crosscheck) {
    PerronResult mat = matrix_root();
    double diff = std::fabs(poly.value - mat.value);
    if (diff > opts.crosscheck_tol) {
      if (diagnostics)
        diagnostics->push_back("engine disagreement |poly - matrix| = " + std::to_string(diff) +
                               "; reporting the matrix value");
      mat.notes.push_back("polynomial engine disagreed; matrix value kept");
      return mat;
    }
    poly.recurrent_components = mat.recurrent_components;
    poly.irreducible = mat.irreducible;
  }
  return poly;
}

}  // namespace

EscapeRateResult escape_rate(const HoleSpec& h, const EngineOptions& opts) {
  EscapeRateResult out;

  if (h.base) {
    out.theta = survivor_root(*h.base, h.q, opts, &out.diagnostics);
    if (out.theta.hi == 0) raise("EmptySubshift", "the base subshift is empty");
  } else {
    out.theta.value = static_cast<double>(h.q);
    out.theta.lo = out.theta.hi = Rational(h.q);
    out.theta.method = "exact";
    out.theta.irreducible = true;
    out.theta.recurrent_components = 1;
  }

  WordCollection survivor = h.survivor_forbidden();
  out.lambda = survivor_root(survivor, h.q, opts, &out.diagnostics);
  if (out.lambda.hi == 0)
    raise("EmptySurvivorSet", "no sequence avoids the hole; the escape rate is undefined");

  out.entropy_ambient = std::log(out.theta.value);
  out.entropy_survivor = std::log(out.lambda.value);
  out.rho = out.entropy_ambient - out.entropy_survivor;
  out.method = out.lambda.method;
  return out;
}

std::string ordering_str(Ordering o) {
  switch (o) {
    case Ordering::Less:
      return "LESS";
    case Ordering::Greater:
      return "GREATER";
    default:
      return "TIE";
  }
}

namespace {

struct RootState {
  IntPolynomial poly;       // characteristic polynomial (empty when matrix-backed)
  bool poly_backed = false;
  Rational lo, hi;
};

// Refine the bracket of the largest real root of `poly` within (lo, hi] to
// the given width, reusing Sturm isolation on the current interval.
void refine(RootState& r, double width) {
  if (!r.poly_backed) return;
  if (r.hi - r.lo <= Rational(width)) return;
  auto b = largest_root_in(r.poly, r.lo, r.hi, width);
  if (b) {
    r.lo = b->lo;
    r.hi = b->hi;
  }
}

}  // namespace

ComparisonResult compare_escape(const HoleSpec& h1, const HoleSpec& h2, double width_floor) {
  if (!h1.same_setting(h2))
    raise("BadComparison", "holes must share the same alphabet size and base");

  EngineOptions opts;
  ComparisonResult out;

  WordCollection s1 = h1.survivor_forbidden();
  WordCollection s2 = h2.survivor_forbidden();

  RootState r1, r2;
  r1.poly = survivor_char_poly(s1, h1.q);
  r2.poly = survivor_char_poly(s2, h2.q);

  out.lambda1 = survivor_root(s1, h1.q, opts, nullptr);
  out.lambda2 = survivor_root(s2, h2.q, opts, nullptr);
  if (out.lambda1.hi == 0 || out.lambda2.hi == 0)
    raise("EmptySurvivorSet", "comparison against an empty survivor set");
  r1.poly_backed = out.lambda1.method == "polynomial";
  r2.poly_backed = out.lambda2.method == "polynomial";
  r1.lo = out.lambda1.lo;
  r1.hi = out.lambda1.hi;
  r2.lo = out.lambda2.lo;
  r2.hi = out.lambda2.hi;

  // Identical characteristic polynomials: exactly equal roots.
  if (r1.poly_backed && r2.poly_backed && r1.poly == r2.poly) {
    out.ordering = Ordering::Tie;
    out.residual = 0;
    out.lambda1.lo = r1.lo, out.lambda1.hi = r1.hi;
    out.lambda2.lo = r2.lo, out.lambda2.hi = r2.hi;
    return out;
  }

  auto finish = [&](bool lambda1_larger, const Rational& gap) {
    // larger lambda = smaller escape rate
    out.ordering = lambda1_larger ? Ordering::Less : Ordering::Greater;
    out.certified = true;
    out.gap_lower = gap < 0 ? Rational(0) : gap;
    out.lambda1.lo = r1.lo, out.lambda1.hi = r1.hi;
    out.lambda1.value = to_double((r1.lo + r1.hi) / 2);
    out.lambda2.lo = r2.lo, out.lambda2.hi = r2.hi;
    out.lambda2.value = to_double((r2.lo + r2.hi) / 2);
    return out;
  };

  double width = 1e-12;
  while (true) {
    ++out.refinements;
    refine(r1, width);
    refine(r2, width);

    if (r1.lo > r2.hi) return finish(true, r1.lo - r2.hi);
    if (r2.lo > r1.hi) return finish(false, r2.lo - r1.hi);

    // Overlapping brackets: exact sign tests decide arbitrarily small gaps.
    // F(x) < 0 at a point implies the largest root of F lies above x.
    if (r1.poly_backed && r2.poly_backed) {
      SturmChain c1(r1.poly), c2(r2.poly);
      const IntPolynomial& f1 = c1.square_free();
      const IntPolynomial& f2 = c2.square_free();
      if (f1.sign_at(r2.hi) < 0) {
        // lambda1 > hi2 >= lambda2: re-isolate lambda1 above hi2.
        auto b = largest_root_in(r1.poly, r2.hi, r1.hi, width);
        if (b) {
          r1.lo = b->lo;
          r1.hi = b->hi;
        } else {
          r1.lo = r2.hi;  // the root sits in (hi2, old hi] regardless
        }
        return finish(true, r1.lo - r2.hi);
      }
      if (f2.sign_at(r1.hi) < 0) {
        auto b = largest_root_in(r2.poly, r1.hi, r2.hi, width);
        if (b) {
          r2.lo = b->lo;
          r2.hi = b->hi;
        } else {
          r2.lo = r1.hi;
        }
        return finish(false, r2.lo - r1.hi);
      }
    }

    if (width <= width_floor || !(r1.poly_backed && r2.poly_backed)) break;
    width = std::max(width * 1e-4, width_floor * 0.99);
  }

  out.ordering = Ordering::Tie;
  Rational span_hi = std::max(r1.hi, r2.hi);
  Rational span_lo = std::min(r1.lo, r2.lo);
  out.residual = span_hi - span_lo;
  out.lambda1.lo = r1.lo, out.lambda1.hi = r1.hi;
  out.lambda2.lo = r2.lo, out.lambda2.hi = r2.hi;
  return out;
}

int find_small_escape_hole(const std::function<int(int)>& x, const std::function<int(int)>& y,
                           int q, double delta, int p_max) {
  if (q < 5) raise("BadArgument", "the small-hole construction needs q >= 5");
  if (delta <= 0) raise("BadArgument", "delta must be positive");
  for (int p = 3; p <= p_max; ++p) {
    std::vector<int> xs, ys;
    for (int i = 0; i < p; ++i) {
      xs.push_back(x(i));
      ys.push_back(y(i));
    }
    std::vector<Word> words;
    words.emplace_back(std::move(xs));
    Word yw{std::move(ys)};
    if (!(words[0] == yw)) words.push_back(std::move(yw));
    HoleSpec h(q, WordCollection(q, std::move(words)));
    EscapeRateResult r = escape_rate(h);
    // certified upper end of the rho bracket
    double rho_hi = std::log(q / to_double(r.lambda.lo));
    if (rho_hi < delta) return p;
  }
  raise("BadArgument", "no p <= p_max reached the requested escape rate");
}

}  // namespace escrate
