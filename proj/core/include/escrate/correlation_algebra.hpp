#pragma once

#include "escrate/polynomial.hpp"
#include "escrate/words.hpp"

namespace escrate {

// Correlation matrix M(z) with M[i][j] = (w_j, w_i)_z. Only the determinant
// and the adjugate sum are consumed downstream, both transpose-invariant.
PolyMatrix correlation_matrix(const WordCollection& g);

struct RFunction {
  RationalFunction paper_form;  // S(z) / Delta(z) as computed, unreduced
  RationalFunction reduced;     // gcd-free canonical form
  IntPolynomial delta;          // det M
  IntPolynomial adj_sum;        // sum of adjugate entries
};

// r(z) = sum of the entries of M(z)^{-1} = S(z)/Delta(z).
// Raises SingularCorrelationMatrix when Delta is identically zero.
RFunction r_function(const WordCollection& g);

// Characteristic polynomial of the survivor set's generating function:
// numerator of (z - q) + r(z) over the reduced denominator. Its largest real
// root in [1, q] is the Perron root of the avoidance subshift. For an empty
// collection this is z - q.
IntPolynomial survivor_char_poly(const WordCollection& g, int q);

}  // namespace escrate
