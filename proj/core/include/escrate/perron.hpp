#pragma once

#include <string>
#include <vector>

#include "escrate/automaton.hpp"
#include "escrate/correlation_algebra.hpp"
#include "escrate/numeric.hpp"
#include "escrate/sturm.hpp"

namespace escrate {

struct PerronResult {
  double value = 0.0;
  Rational lo, hi;          // certified bracket, lo <= root <= hi
  std::string method;       // "matrix", "polynomial" or "exact"
  long iterations = 0;
  int recurrent_components = 0;  // matrix engine diagnostic
  bool irreducible = false;      // exactly one recurrent component
  std::vector<std::string> notes;

  Rational width() const { return hi - lo; }
};

// Perron root of a nonnegative integer matrix. Power iteration on T + I per
// strongly connected component, certified by exact Collatz-Wielandt brackets
// min_i (Tx)_i/x_i <= theta <= max_i (Tx)_i/x_i on positive integer iterates;
// the overall root is the maximum over components. Raises NonConvergence
// after the iteration cap.
PerronResult spectral_radius(const TransferMatrix& t, double tol = 1e-12);

// Largest real root of (z - q) * Delta(z) + S(z) in [1, q] over the reduced
// r-form, located by Sturm-certified bisection with exact rational sign
// evaluation. Raises NoRealRootFound for degenerate instances (the matrix
// engine is the fallback).
PerronResult perron_root_poly(const WordCollection& g, int q, double tol = 1e-12);
PerronResult perron_root_of_char_poly(const IntPolynomial& char_poly, int q, double tol);

struct EntropyResult {
  double value = 0.0;  // ln theta
  PerronResult theta;
};

// ln of the spectral radius of the avoidance automaton's transfer matrix.
// Raises EmptySubshift when the automaton has no recurrent part.
EntropyResult topological_entropy(const WordCollection& forbidden, int q,
                                  double tol = 1e-12);

}  // namespace escrate
