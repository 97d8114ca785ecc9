#include "escrate/correlation_algebra.hpp"

namespace escrate {

PolyMatrix correlation_matrix(const WordCollection& g) {
  if (g.empty()) raise("EmptyCollection", "correlation matrix of an empty collection");
  const int t = g.size();
  PolyMatrix m(t);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) m.at(i, j) = correlation(g.words()[static_cast<size_t>(j)],
                                                         g.words()[static_cast<size_t>(i)]);
  return m;
}

RFunction r_function(const WordCollection& g) {
  PolyMatrix m = correlation_matrix(g);
  RFunction r;
  r.delta = determinant(m);
  if (r.delta.is_zero())
    raise("SingularCorrelationMatrix", "correlation matrix has zero determinant");
  r.adj_sum = adjugate_sum(m);
  r.paper_form = RationalFunction(r.adj_sum, r.delta);
  r.reduced = r.paper_form.canonical();
  return r;
}

IntPolynomial survivor_char_poly(const WordCollection& g, int q) {
  const IntPolynomial z_minus_q =
      IntPolynomial::variable() - IntPolynomial::constant(q);
  if (g.empty()) return z_minus_q;
  RFunction r = r_function(g);
  return z_minus_q * r.reduced.den + r.reduced.num;
}

}  // namespace escrate
