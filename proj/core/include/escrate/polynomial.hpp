#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "escrate/errors.hpp"
#include "escrate/numeric.hpp"

namespace escrate {

// Dense integer-coefficient polynomial, coefficient of z^k at index k.
// Canonical form: no trailing zero coefficient; the zero polynomial has an
// empty coefficient vector and degree() == -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPolynomial(std::initializer_list<long> ascending) {
    for (long v : ascending) c_.emplace_back(v);
    trim();
  }

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial constant(BigInt v);
  static IntPolynomial monomial(BigInt coeff, int exponent);
  static IntPolynomial variable() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const BigInt& leading() const;
  BigInt coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : BigInt(0);
  }
  const std::vector<BigInt>& coefficients() const { return c_; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  IntPolynomial operator-() const;
  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator*(const BigInt& s) const;
  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

  IntPolynomial derivative() const;

  Rational eval(const Rational& x) const;
  BigInt eval_int(const BigInt& x) const;
  int sign_at(const Rational& x) const;

  // Exponent -> coefficient map (zero coefficients omitted).
  std::map<long, BigInt> to_map() const;
  static IntPolynomial from_map(const std::map<long, BigInt>& m);

  // Human-readable form, e.g. "2z^2+z" or "z^4-z-1"; "0" for the zero poly.
  std::string str(const std::string& var = "z") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

// gcd of all coefficients, always >= 0; content of the zero polynomial is 0.
BigInt content(const IntPolynomial& p);
// p / content(p); sign of the leading coefficient is preserved.
IntPolynomial primitive_part(const IntPolynomial& p);

// Integer polynomial gcd, including the integer content: the result has
// positive leading coefficient and divides both arguments exactly.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

// Exact division; raises InternalError if b does not divide a.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

// Remainder of a mod b over Q, rescaled by a positive rational to a primitive
// integer polynomial (sign structure preserved).
IntPolynomial remainder_primitive(const IntPolynomial& a, const IntPolynomial& b);

// 1 + max_k |a_k / a_lead| over non-leading coefficients; every complex root
// of f has modulus <= this value.
Rational lagrange_bound(const IntPolynomial& f);

// Coefficients f(0..n_max) of num(z)/den(z) expanded in powers of 1/z.
// Requires den monic (up to overall sign) with deg num <= deg den;
// raises NonExpandable otherwise.
std::vector<BigInt> series_coefficients(const IntPolynomial& num, const IntPolynomial& den,
                                        int n_max);

// Square polynomial matrix, row-major.
class PolyMatrix {
 public:
  explicit PolyMatrix(int order) : n_(order), m_(static_cast<size_t>(order) * order) {}
  int order() const { return n_; }
  IntPolynomial& at(int i, int j) { return m_[static_cast<size_t>(i) * n_ + j]; }
  const IntPolynomial& at(int i, int j) const { return m_[static_cast<size_t>(i) * n_ + j]; }
  PolyMatrix transposed() const;

 private:
  int n_;
  std::vector<IntPolynomial> m_;
};

// Cofactor expansion for order <= 5, fraction-free elimination above; the
// two routes are exposed separately for cross-checking.
IntPolynomial determinant(const PolyMatrix& m);
IntPolynomial determinant_cofactor(const PolyMatrix& m);
IntPolynomial determinant_bareiss(const PolyMatrix& m);

// Sum of the entries of the adjugate. adjugate_sum_rank1 uses
// det(M + J) - det(M) with J the all-ones matrix.
IntPolynomial adjugate_sum(const PolyMatrix& m);
IntPolynomial adjugate_sum_cofactor(const PolyMatrix& m);
IntPolynomial adjugate_sum_rank1(const PolyMatrix& m);

// Quotient of integer polynomials. Equality and r-class identification go
// through canonical(): gcd removed, denominator leading coefficient positive.
struct RationalFunction {
  IntPolynomial num;
  IntPolynomial den;

  RationalFunction() : num(), den(IntPolynomial::constant(1)) {}
  RationalFunction(IntPolynomial n, IntPolynomial d);

  RationalFunction canonical() const;
  Rational eval(const Rational& x) const;  // raises DivisionByZero at a pole
  std::string str(const std::string& var = "z") const;

  bool equivalent(const RationalFunction& o) const;
};

}  // namespace escrate
