#pragma once

#include <optional>
#include <vector>

#include "escrate/polynomial.hpp"

namespace escrate {

// Sturm chain of the square-free part of a polynomial. Counting uses the
// skip-zero sign-variation convention, which makes count(a, b] exact even
// when an endpoint lands on a root: a root at a is excluded, at b included.
class SturmChain {
 public:
  explicit SturmChain(const IntPolynomial& p);

  const IntPolynomial& square_free() const { return chain_.front(); }

  int variations_at(const Rational& x) const;
  int variations_at_plus_infinity() const;

  // Number of distinct real roots in (a, b].
  long count_halfopen(const Rational& a, const Rational& b) const;
  // Number of distinct real roots in (a, +inf).
  long count_above(const Rational& a) const;

 private:
  std::vector<IntPolynomial> chain_;
};

struct RootBracket {
  Rational lo, hi;   // root in [lo, hi]; lo == hi for an exact rational root
  bool exact = false;
  long iterations = 0;
};

// Largest real root of p in (lo_limit, hi_limit], located to relative width
// rel_tol with certified Sturm counts (no root of p exceeds the returned hi
// within the search interval). Returns nullopt when there is no such root;
// a root exactly at lo_limit does not count.
std::optional<RootBracket> largest_root_in(const IntPolynomial& p, const Rational& lo_limit,
                                           const Rational& hi_limit, double rel_tol);

}  // namespace escrate
