#include <doctest.h>

#include "escrate/automaton.hpp"
#include "escrate/correlation_algebra.hpp"
#include "escrate/sturm.hpp"

using namespace escrate;

namespace {

IntPolynomial P(std::initializer_list<long> ascending) { return IntPolynomial(ascending); }

WordCollection abstract(const std::string& csv, int q) {
  return WordCollection::parse(csv, q, ParseMode::Abstract);
}

// Polynomial with prescribed integer roots (oracle for root bounds).
IntPolynomial from_roots(const std::vector<long>& roots) {
  IntPolynomial p = IntPolynomial::constant(1);
  for (long r : roots) p = p * (IntPolynomial::variable() - IntPolynomial::constant(r));
  return p;
}

PolyMatrix random_matrix(Rng& rng, int order, int max_deg) {
  PolyMatrix m(order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      std::map<long, BigInt> coeffs;
      int deg = rng.range(0, max_deg);
      for (int k = 0; k <= deg; ++k) coeffs[k] = rng.range(-3, 3);
      m.at(i, j) = IntPolynomial::from_map(coeffs);
    }
  return m;
}

WordCollection random_equal_length(Rng& rng, int q, int p, int t) {
  std::vector<Word> ws;
  while (static_cast<int>(ws.size()) < t) {
    std::vector<int> s;
    for (int j = 0; j < p; ++j) s.push_back(rng.range(0, q - 1));
    Word w{std::move(s)};
    bool dup = false;
    for (const auto& o : ws) dup = dup || o == w;
    if (!dup) ws.push_back(std::move(w));
  }
  return WordCollection(q, std::move(ws));
}

}  // namespace

TEST_CASE("polynomial arithmetic and canonical form") {
  IntPolynomial z = IntPolynomial::variable();
  CHECK((z * z - z * z).is_zero());
  CHECK(IntPolynomial().degree() == -1);
  CHECK(P({1, 2, 0, 0}).degree() == 1);  // trailing zeros trimmed
  CHECK((P({1, 1}) * P({-1, 1})) == P({-1, 0, 1}));
  CHECK(P({2, 3}).str() == "3z+2");
  CHECK(P({-1, -1, 0, 0, 1}).str() == "z^4-z-1");
  CHECK(P({1, 2, 2}).eval(Rational(1, 2)) == Rational(5, 2));
  CHECK(P({2, -3, 1}).sign_at(Rational(3, 2)) == -1);
  CHECK(P({2, -3, 1}).sign_at(Rational(2)) == 0);
  CHECK(P({2, -3, 1}).sign_at(Rational(3)) == 1);
}

TEST_CASE("gcd, exact division, primitive parts") {
  IntPolynomial a = P({-1, 0, 1});  // (z-1)(z+1)
  IntPolynomial b = P({1, 2, 1});   // (z+1)^2
  CHECK(poly_gcd(a, b) == P({1, 1}));
  CHECK(divide_exact(b, P({1, 1})) == P({1, 1}));
  CHECK(content(P({2, 4, 6})) == 2);
  CHECK(primitive_part(P({2, 4, 6})) == P({1, 2, 3}));
  CHECK(poly_gcd(P({2, 2}), P({0, 4, 4})) == P({2, 2}));  // content participates
}

TEST_CASE("correlation matrices of the worked collections") {
  PolyMatrix m1 = correlation_matrix(abstract("aa,bb", 2));
  CHECK(m1.at(0, 0) == P({1, 1}));
  CHECK(m1.at(1, 1) == P({1, 1}));
  CHECK(m1.at(0, 1).is_zero());
  CHECK(m1.at(1, 0).is_zero());
  CHECK(determinant(m1) == P({1, 2, 1}));
  CHECK(adjugate_sum(m1) == P({2, 2}));

  PolyMatrix m2 = correlation_matrix(abstract("aaa,aba", 2));
  CHECK(determinant(m2) == P({0, 1, 2, 1, 1}));  // z^4+z^3+2z^2+z
  CHECK(adjugate_sum(m2) == P({0, 1, 2}));       // 2z^2+z

  PolyMatrix m3 = correlation_matrix(abstract("aba", 2));
  CHECK(m3.order() == 1);
  CHECK(determinant(m3) == P({1, 0, 1}));
  CHECK(adjugate_sum(m3) == IntPolynomial::constant(1));
}

TEST_CASE("r_function reduced forms match the published ones") {
  auto reduced = [](const std::string& csv, int q) { return r_function(abstract(csv, q)).reduced; };
  CHECK(reduced("aa,bb", 2).equivalent(RationalFunction(P({2}), P({1, 1}))));
  CHECK(reduced("aaa,aba", 2).equivalent(RationalFunction(P({1, 2}), P({1, 2, 1, 1}))));
  CHECK(reduced("aba,aca", 3).equivalent(RationalFunction(P({2}), P({2, 0, 1}))));
  CHECK(reduced("bb", 2).equivalent(RationalFunction(P({1}), P({1, 1}))));  // single word
  CHECK(reduced("ab,ba", 2).equivalent(reduced("aa,bb", 2)));  // same reduced class
}

TEST_CASE("zero-cross collections: r equals the sum of autocorrelation reciprocals") {
  Rng rng(7);
  int checked = 0;
  while (checked < 25) {
    int q = rng.range(2, 4), p = rng.range(2, 4), t = rng.range(1, 3);
    WordCollection g = random_equal_length(rng, q, p, t);
    if (!has_zero_cross_correlations(g)) continue;
    ++checked;
    IntPolynomial num, den = IntPolynomial::constant(1);
    for (const auto& w : g.words()) den = den * correlation(w, w);
    for (const auto& w : g.words()) num = num + divide_exact(den, correlation(w, w));
    CHECK(r_function(g).reduced.equivalent(RationalFunction(num, den)));
  }
}

TEST_CASE("exact rational evaluation") {
  RFunction r1 = r_function(abstract("aa,bb", 2));
  CHECK(r1.paper_form.eval(Rational(2)) == Rational(2, 3));
  CHECK(r1.reduced.eval(Rational(2)) == Rational(2, 3));
  RFunction r2 = r_function(abstract("ab,cd", 4));
  CHECK(r2.reduced.eval(Rational(2)) == Rational(1));
  CHECK(P({7, 1, 4}).eval(Rational(0)) == Rational(7));  // constant term at 0
  CHECK_THROWS_AS(RationalFunction(P({1}), P({-1, 1})).eval(Rational(1)), Error);
}

TEST_CASE("Lagrange bound") {
  CHECK(lagrange_bound(P({2, -3, 1})) == Rational(4));
  CHECK(lagrange_bound(IntPolynomial::monomial(1, 9)) == Rational(1));
  Rng rng(11);
  for (int it = 0; it < 50; ++it) {
    std::vector<long> roots;
    long biggest = 0;
    for (int i = 0, n = rng.range(1, 5); i < n; ++i) {
      long r = rng.range(-9, 9);
      roots.push_back(r);
      biggest = std::max(biggest, std::labs(r));
    }
    CHECK(lagrange_bound(from_roots(roots)) >= Rational(biggest));
  }
}

TEST_CASE("series expansion of the avoidance generating function") {
  {
    WordCollection g = abstract("bb", 2);  // golden-mean: Fibonacci counts
    RFunction r = r_function(g);
    IntPolynomial num = IntPolynomial::variable() * r.reduced.den;
    auto f = series_coefficients(num, survivor_char_poly(g, 2), 5);
    std::vector<long> want{1, 2, 3, 5, 8, 13};
    REQUIRE(f.size() == want.size());
    for (size_t i = 0; i < want.size(); ++i) CHECK(f[i] == want[i]);
  }
  {
    WordCollection g = abstract("aa,bb", 2);  // only the two alternating words survive
    RFunction r = r_function(g);
    IntPolynomial num = IntPolynomial::variable() * r.reduced.den;
    auto f = series_coefficients(num, survivor_char_poly(g, 2), 8);
    CHECK(f[0] == 1);
    for (size_t i = 1; i < f.size(); ++i) CHECK(f[i] == 2);
  }
  CHECK_THROWS_AS(series_coefficients(P({0, 0, 1}), P({1, 1}), 3), Error);  // deg num > deg den
  CHECK_THROWS_AS(series_coefficients(P({1}), P({1, 2}), 3), Error);        // not monic
}

TEST_CASE("determinant routes agree on random matrices up to order 5") {
  Rng rng(23);
  for (int it = 0; it < 30; ++it) {
    PolyMatrix m = random_matrix(rng, rng.range(1, 5), 3);
    CHECK(determinant_cofactor(m) == determinant_bareiss(m));
    CHECK(adjugate_sum_cofactor(m) == adjugate_sum_rank1(m));
  }
}

TEST_CASE("r is invariant under transposing the correlation matrix") {
  Rng rng(29);
  for (int it = 0; it < 20; ++it) {
    WordCollection g = random_equal_length(rng, rng.range(2, 4), rng.range(2, 4), rng.range(2, 3));
    PolyMatrix m = correlation_matrix(g);
    PolyMatrix mt = m.transposed();
    IntPolynomial d1 = determinant(m), d2 = determinant(mt);
    if (d1.is_zero()) continue;
    CHECK(RationalFunction(adjugate_sum(m), d1).equivalent(RationalFunction(adjugate_sum(mt), d2)));
  }
}

TEST_CASE("degree laws and coefficient bounds for equal-length collections") {
  Rng rng(31);
  for (int it = 0; it < 40; ++it) {
    int p = rng.range(2, 5), t = rng.range(2, 3);
    WordCollection g = random_equal_length(rng, rng.range(2, 4), p, t);
    RFunction r = r_function(g);
    CHECK(r.delta.degree() == t * (p - 1));
    CHECK(r.delta.is_monic());
    CHECK(r.adj_sum.degree() == (t - 1) * (p - 1));
    CHECK(r.adj_sum.leading() == t);
    if (t == 2) {
      for (int k = 0; k <= r.delta.degree(); ++k) {
        long cap = (k <= p - 1) ? (k + 1) : (2 * p - (k + 1));
        CHECK(abs(r.delta.coeff(k)) <= cap);
      }
      for (int k = 0; k <= r.adj_sum.degree(); ++k) CHECK(abs(r.adj_sum.coeff(k)) <= 2);
    }
  }
}

TEST_CASE("Delta stays positive on [4, 12] for small two-word collections") {
  for (int q = 2; q <= 4; ++q)
    for (int p = 2; p <= 4; ++p) {
      std::vector<std::vector<int>> words;
      std::vector<int> w(static_cast<size_t>(p), 0);
      while (true) {
        words.push_back(w);
        int pos = p - 1;
        while (pos >= 0 && w[static_cast<size_t>(pos)] == q - 1) w[static_cast<size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++w[static_cast<size_t>(pos)];
      }
      for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = i + 1; j < words.size(); ++j) {
          WordCollection g(q, {Word(words[i]), Word(words[j])});
          IntPolynomial delta = r_function(g).delta;
          for (Rational x(4); x <= 12; x += Rational(1, 2)) CHECK(delta.sign_at(x) > 0);
        }
    }
}

TEST_CASE("Sturm chains count and isolate real roots") {
  IntPolynomial p = from_roots({1, 2, 5});
  SturmChain chain(p);
  CHECK(chain.count_halfopen(Rational(0), Rational(6)) == 3);
  CHECK(chain.count_halfopen(Rational(1), Rational(6)) == 2);  // left-end root excluded
  CHECK(chain.count_halfopen(Rational(0), Rational(2)) == 2);  // right-end root included
  CHECK(chain.count_above(Rational(3)) == 1);

  IntPolynomial sq = P({1, -2, 1}) * P({-5, 1});  // (z-1)^2 (z-5): distinct roots counted
  CHECK(SturmChain(sq).count_halfopen(Rational(0), Rational(6)) == 2);

  auto b = largest_root_in(p, Rational(0), Rational(10), 1e-12);
  REQUIRE(b.has_value());
  CHECK(b->lo <= 5);
  CHECK(b->hi >= 5);
  CHECK(b->hi - b->lo <= Rational(1, 1000000));

  auto e = largest_root_in(P({2, -3, 1}), Rational(0), Rational(4), 1e-12);
  REQUIRE(e.has_value());
  CHECK(e->exact);
  CHECK(e->lo == 2);

  CHECK_FALSE(largest_root_in(P({1, 0, 1}), Rational(0), Rational(10), 1e-12).has_value());
}

TEST_CASE("series coefficients match brute-force counts for a mixed-length collection") {
  WordCollection g(2, {parse_word("01", 2, ParseMode::Digit), parse_word("100", 2, ParseMode::Digit)});
  RFunction r = r_function(g);
  IntPolynomial num = IntPolynomial::variable() * r.reduced.den;
  auto f = series_coefficients(num, survivor_char_poly(g, 2), 10);
  for (int n = 0; n <= 10; ++n) CHECK(f[static_cast<size_t>(n)] == brute_force_count(g, 2, n));
}
