#include <algorithm>

#include "escrate/escape.hpp"

namespace escrate {

BigInt d_threshold_two_words(int p) {
  if (p < 2) raise("BadArgument", "word length must be >= 2");
  return BigInt(3) * p * p + 2;
}

BigInt d_threshold_mixed(int p1, int p2) {
  if (p1 < 2 || p2 < 2) raise("BadArgument", "word lengths must be >= 2");
  return BigInt(3) * p1 * p2 + 2;
}

BigInt d_threshold_generic(int t, int p) {
  if (t < 1 || p < 2) raise("BadArgument", "need t >= 1 and p >= 2");
  BigInt f = factorial(static_cast<unsigned long>(t));
  return BigInt(2) * t * t * f * f * int_pow(BigInt(p), static_cast<unsigned long>(2 * t - 2)) + 1;
}

namespace {

// Largest |coefficient| below the given degree (0 when there is none).
BigInt max_abs_below(const IntPolynomial& p, int degree) {
  BigInt best(0);
  for (int k = 0; k < degree; ++k) best = std::max(best, BigInt(abs(p.coeff(k))));
  return best;
}

}  // namespace

BigInt d_instance(const WordCollection& g1, const WordCollection& g2) {
  if (g1.size() != g2.size())
    raise("BadArgument", "collections must have the same number of words");
  const int t = g1.size();
  int p = g1.words()[0].length();
  for (const auto& w : g1.words())
    if (w.length() != p) raise("BadArgument", "words must have equal length");
  for (const auto& w : g2.words())
    if (w.length() != p) raise("BadArgument", "words must have equal length");

  auto ab = [&](const WordCollection& g) {
    RFunction r = r_function(g);
    BigInt a = max_abs_below(r.delta, r.delta.degree());
    BigInt b = std::max(max_abs_below(r.adj_sum, r.adj_sum.degree()),
                        BigInt(abs(r.adj_sum.leading())));
    b = std::max(b, BigInt(t));
    return std::make_pair(a, b);
  };
  auto [a1, b1] = ab(g1);
  auto [a2, b2] = ab(g2);
  return (a1 * b2 + a2 * b1) * t * p + 1;
}

bool gen_period_condition(int q, int t) {
  if (q < 2 || t < 2) raise("BadArgument", "need q >= 2 and t >= 2");
  // (q-1)(t+1) - t q (1 + 1/q)^(t-1) >= 0, evaluated exactly after clearing
  // the q^(t-2) denominator: (q-1)(t+1) q^(t-2) - t (q+1)^(t-1) >= 0.
  BigInt lhs = BigInt(q - 1) * (t + 1) * int_pow(BigInt(q), static_cast<unsigned long>(t - 2));
  BigInt rhs = BigInt(t) * int_pow(BigInt(q + 1), static_cast<unsigned long>(t - 1));
  return lhs >= rhs;
}

std::pair<Word, Word> extremal_words(const Word& w, int q) {
  const int p = w.length();
  const int first = w.at(0), last = w.at(p - 1);
  std::vector<int> eligible;
  for (int a = 0; a < q; ++a)
    if (a != first && a != last) eligible.push_back(a);
  if (eligible.size() < 2)
    raise("InsufficientAlphabet",
          "need two symbols outside {first, last} of \"" + w.str() + "\"");
  const int a = eligible[0], b = eligible[1];
  std::vector<int> u0(static_cast<size_t>(p), a);
  std::vector<int> u1(static_cast<size_t>(p), b);
  u1[0] = a;
  return {Word(std::move(u0)), Word(std::move(u1))};
}

}  // namespace escrate
