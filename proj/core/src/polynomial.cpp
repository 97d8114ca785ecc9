#include "escrate/polynomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace escrate {

IntPolynomial IntPolynomial::constant(BigInt v) {
  std::vector<BigInt> c;
  if (v != 0) c.push_back(std::move(v));
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::monomial(BigInt coeff, int exponent) {
  if (coeff == 0) return IntPolynomial();
  std::vector<BigInt> c(static_cast<size_t>(exponent) + 1, BigInt(0));
  c.back() = std::move(coeff);
  return IntPolynomial(std::move(c));
}

const BigInt& IntPolynomial::leading() const {
  if (c_.empty()) raise("InternalError", "leading coefficient of the zero polynomial");
  return c_.back();
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> c(c_);
  for (auto& v : c) v = -v;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<BigInt> c(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<BigInt> c(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return IntPolynomial();
  std::vector<BigInt> c(c_.size() + o.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const BigInt& s) const {
  std::vector<BigInt> c(c_);
  for (auto& v : c) v *= s;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return IntPolynomial();
  std::vector<BigInt> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * BigInt(static_cast<long>(i));
  return IntPolynomial(std::move(c));
}

Rational IntPolynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

BigInt IntPolynomial::eval_int(const BigInt& x) const {
  BigInt acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int IntPolynomial::sign_at(const Rational& x) const {
  // Horner on the numerator only: for x = u/v, sign(p(x)) = sign(sum c_i u^i v^{d-i}).
  if (c_.empty()) return 0;
  const BigInt& u = x.get_num();
  const BigInt& v = x.get_den();
  BigInt acc = c_.back();
  BigInt vpow(1);
  for (auto it = c_.rbegin() + 1; it != c_.rend(); ++it) {
    vpow *= v;
    acc = acc * u + *it * vpow;
  }
  return sign_of(acc);
}

std::map<long, BigInt> IntPolynomial::to_map() const {
  std::map<long, BigInt> m;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) m[static_cast<long>(i)] = c_[i];
  return m;
}

IntPolynomial IntPolynomial::from_map(const std::map<long, BigInt>& m) {
  long deg = -1;
  for (const auto& [e, c] : m) {
    if (e < 0) raise("InternalError", "negative exponent in polynomial map");
    if (c != 0) deg = std::max(deg, e);
  }
  std::vector<BigInt> c(static_cast<size_t>(deg + 1), BigInt(0));
  for (const auto& [e, v] : m)
    if (v != 0) c[static_cast<size_t>(e)] = v;
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& v = c_[static_cast<size_t>(k)];
    if (v == 0) continue;
    BigInt a = abs(v);
    if (first) {
      if (v < 0) out << "-";
      first = false;
    } else {
      out << (v < 0 ? "-" : "+");
    }
    if (k == 0 || a != 1) out << a.get_str();
    if (k > 0) {
      out << var;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

BigInt content(const IntPolynomial& p) {
  BigInt g(0);
  for (const auto& c : p.coefficients()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  BigInt g = content(p);
  std::vector<BigInt> c(p.coefficients());
  for (auto& v : c) v /= g;
  return IntPolynomial(std::move(c));
}

namespace {

// Division over Q; returns {quotient, remainder} with rational coefficients.
struct QPoly {
  std::vector<Rational> c;
  int degree() const { return static_cast<int>(c.size()) - 1; }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
};

QPoly to_q(const IntPolynomial& p) {
  QPoly q;
  q.c.reserve(p.coefficients().size());
  for (const auto& v : p.coefficients()) q.c.emplace_back(v);
  return q;
}

void q_divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
  rem = a;
  quot.c.assign(a.c.size(), Rational(0));
  const int db = b.degree();
  while (rem.degree() >= db && !rem.c.empty()) {
    const int k = rem.degree() - db;
    Rational f = rem.c.back() / b.c.back();
    quot.c[static_cast<size_t>(k)] = f;
    for (int i = 0; i <= db; ++i) rem.c[static_cast<size_t>(k + i)] -= f * b.c[static_cast<size_t>(i)];
    rem.trim();
  }
  quot.trim();
}

// Rescale a rational polynomial by the positive factor that makes it a
// primitive integer polynomial.
IntPolynomial q_to_primitive(const QPoly& p) {
  if (p.c.empty()) return IntPolynomial();
  BigInt l(1);
  for (const auto& v : p.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<BigInt> c;
  c.reserve(p.c.size());
  for (const auto& v : p.c) {
    Rational s = v * Rational(l);
    s.canonicalize();
    c.push_back(s.get_num());
  }
  return primitive_part(IntPolynomial(std::move(c)));
}

}  // namespace

IntPolynomial remainder_primitive(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) raise("InternalError", "polynomial remainder by zero");
  QPoly q, r;
  q_divmod(to_q(a), to_q(b), q, r);
  return q_to_primitive(r);
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() && b.is_zero()) return IntPolynomial();
  if (a.is_zero()) return b.leading() < 0 ? -b : b;
  if (b.is_zero()) return a.leading() < 0 ? -a : a;

  BigInt cg;
  mpz_gcd(cg.get_mpz_t(), content(a).get_mpz_t(), content(b).get_mpz_t());

  IntPolynomial x = primitive_part(a);
  IntPolynomial y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = remainder_primitive(x, y);
    x = y;
    y = r;
  }
  if (x.leading() < 0) x = -x;
  return x * cg;
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) raise("InternalError", "exact division by the zero polynomial");
  if (a.is_zero()) return IntPolynomial();
  QPoly q, r;
  q_divmod(to_q(a), to_q(b), q, r);
  if (!r.c.empty()) raise("InternalError", "exact polynomial division has a remainder");
  std::vector<BigInt> c;
  c.reserve(q.c.size());
  for (auto& v : q.c) {
    v.canonicalize();
    if (v.get_den() != 1) raise("InternalError", "exact polynomial division is not integral");
    c.push_back(v.get_num());
  }
  return IntPolynomial(std::move(c));
}

Rational lagrange_bound(const IntPolynomial& f) {
  if (f.is_zero()) raise("InternalError", "Lagrange bound of the zero polynomial");
  Rational best(0);
  BigInt lead = abs(f.leading());
  for (int k = 0; k < f.degree(); ++k) {
    Rational r(abs(f.coeff(k)), lead);
    r.canonicalize();
    if (r > best) best = r;
  }
  return best + 1;
}

std::vector<BigInt> series_coefficients(const IntPolynomial& num, const IntPolynomial& den,
                                        int n_max) {
  if (den.is_zero()) raise("NonExpandable", "zero denominator");
  IntPolynomial n = num, d = den;
  if (d.leading() == -1) {
    n = -n;
    d = -d;
  }
  if (!d.is_monic()) raise("NonExpandable", "denominator is not monic");
  if (n.degree() > d.degree())
    raise("NonExpandable", "numerator degree exceeds denominator degree");

  // With w = 1/z: N~(w)/D~(w), reversed coefficients, D~(0) = 1.
  const int dd = d.degree();
  std::vector<BigInt> f;
  f.reserve(static_cast<size_t>(n_max) + 1);
  for (int k = 0; k <= n_max; ++k) {
    BigInt v = n.coeff(dd - k);  // N~_k, zero once k exceeds the shifted range
    for (int j = 1; j <= std::min(k, dd); ++j) v -= d.coeff(dd - j) * f[static_cast<size_t>(k - j)];
    f.push_back(std::move(v));
  }
  return f;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntPolynomial determinant_cofactor(const PolyMatrix& m) {
  const int n = m.order();
  if (n == 0) return IntPolynomial::constant(1);
  if (n == 1) return m.at(0, 0);
  IntPolynomial det;
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    PolyMatrix minor(n - 1);
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int k = 0; k < n; ++k) {
        if (k == j) continue;
        minor.at(i - 1, cc++) = m.at(i, k);
      }
    }
    IntPolynomial term = m.at(0, j) * determinant_cofactor(minor);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

IntPolynomial determinant_bareiss(const PolyMatrix& m) {
  const int n = m.order();
  if (n == 0) return IntPolynomial::constant(1);
  PolyMatrix a = m;
  IntPolynomial prev = IntPolynomial::constant(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k).is_zero()) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (!a.at(i, k).is_zero()) {
          pivot = i;
          break;
        }
      if (pivot < 0) return IntPolynomial();
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = divide_exact(a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j), prev);
    prev = a.at(k, k);
  }
  IntPolynomial det = a.at(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

IntPolynomial determinant(const PolyMatrix& m) {
  return m.order() <= 5 ? determinant_cofactor(m) : determinant_bareiss(m);
}

IntPolynomial adjugate_sum_cofactor(const PolyMatrix& m) {
  const int n = m.order();
  if (n == 1) return IntPolynomial::constant(1);
  IntPolynomial sum;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      PolyMatrix minor(n - 1);
      int rr = 0;
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        int cc = 0;
        for (int c = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(rr, cc++) = m.at(r, c);
        }
        ++rr;
      }
      IntPolynomial cof = determinant_cofactor(minor);
      sum = ((i + j) % 2 == 0) ? sum + cof : sum - cof;
    }
  }
  return sum;
}

IntPolynomial adjugate_sum_rank1(const PolyMatrix& m) {
  // Matrix determinant lemma with the all-ones rank-1 update:
  // det(M + J) = det(M) + 1^T adj(M) 1.
  PolyMatrix shifted = m;
  const IntPolynomial one = IntPolynomial::constant(1);
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j) shifted.at(i, j) = shifted.at(i, j) + one;
  return determinant_bareiss(shifted) - determinant_bareiss(m);
}

IntPolynomial adjugate_sum(const PolyMatrix& m) {
  return m.order() <= 5 ? adjugate_sum_cofactor(m) : adjugate_sum_rank1(m);
}

RationalFunction::RationalFunction(IntPolynomial n, IntPolynomial d)
    : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) raise("InternalError", "rational function with zero denominator");
}

RationalFunction RationalFunction::canonical() const {
  if (num.is_zero()) return RationalFunction(IntPolynomial(), IntPolynomial::constant(1));
  IntPolynomial g = poly_gcd(num, den);
  IntPolynomial n = divide_exact(num, g);
  IntPolynomial d = divide_exact(den, g);
  if (d.leading() < 0) {
    n = -n;
    d = -d;
  }
  return RationalFunction(std::move(n), std::move(d));
}

Rational RationalFunction::eval(const Rational& x) const {
  Rational d = den.eval(x);
  if (d == 0) {
    RationalFunction c = canonical();
    d = c.den.eval(x);
    if (d == 0) raise("DivisionByZero", "rational function evaluated at a pole");
    return c.num.eval(x) / d;
  }
  return num.eval(x) / d;
}

std::string RationalFunction::str(const std::string& var) const {
  return "(" + num.str(var) + ")/(" + den.str(var) + ")";
}

bool RationalFunction::equivalent(const RationalFunction& o) const {
  RationalFunction a = canonical(), b = o.canonical();
  return a.num == b.num && a.den == b.den;
}

}  // namespace escrate
