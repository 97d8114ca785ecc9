#include "escrate/sturm.hpp"

namespace escrate {

SturmChain::SturmChain(const IntPolynomial& p) {
  if (p.is_zero()) raise("InternalError", "Sturm chain of the zero polynomial");
  IntPolynomial g = poly_gcd(p, p.derivative());
  IntPolynomial f = g.degree() > 0 ? divide_exact(p, g) : primitive_part(p);
  if (f.leading() < 0) f = -f;

  chain_.push_back(f);
  if (f.degree() == 0) return;
  chain_.push_back(f.derivative());
  while (chain_.back().degree() > 0) {
    IntPolynomial r = remainder_primitive(chain_[chain_.size() - 2], chain_.back());
    if (r.is_zero()) break;  // square-free input: only at the constant tail
    chain_.push_back(-r);
  }
}

int SturmChain::variations_at(const Rational& x) const {
  int count = 0, prev = 0;
  for (const auto& p : chain_) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

int SturmChain::variations_at_plus_infinity() const {
  int count = 0, prev = 0;
  for (const auto& p : chain_) {
    if (p.is_zero()) continue;
    int s = sign_of(p.leading());
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

long SturmChain::count_halfopen(const Rational& a, const Rational& b) const {
  return variations_at(a) - variations_at(b);
}

long SturmChain::count_above(const Rational& a) const {
  return variations_at(a) - variations_at_plus_infinity();
}

std::optional<RootBracket> largest_root_in(const IntPolynomial& p, const Rational& lo_limit,
                                           const Rational& hi_limit, double rel_tol) {
  SturmChain chain(p);
  const IntPolynomial& f = chain.square_free();

  if (f.sign_at(hi_limit) == 0) {
    RootBracket r;
    r.lo = r.hi = hi_limit;
    r.exact = true;
    return r;
  }
  if (chain.count_halfopen(lo_limit, hi_limit) == 0) return std::nullopt;

  Rational a = lo_limit, b = hi_limit;
  int var_b = chain.variations_at(b);
  Rational tol(rel_tol);
  RootBracket r;
  // Invariant: at least one root in (a, b], none in (b, hi_limit].
  while (true) {
    Rational scale = abs(b);
    if (scale < 1) scale = 1;
    if (b - a <= tol * scale) break;
    ++r.iterations;
    Rational m = (a + b) / 2;
    if (f.sign_at(m) == 0) {
      int var_m = chain.variations_at(m);
      if (var_m - var_b == 0) {  // nothing above m: the root at m is the largest
        r.lo = r.hi = m;
        r.exact = true;
        return r;
      }
      a = m;
      continue;
    }
    int var_m = chain.variations_at(m);
    if (var_m - var_b > 0) {
      a = m;
    } else {
      b = m;
      var_b = var_m;
    }
    if (r.iterations > 4096) raise("InternalError", "root isolation failed to converge");
  }
  r.lo = a;
  r.hi = b;
  return r;
}

}  // namespace escrate
