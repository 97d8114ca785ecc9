#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace escrate {

using BigInt = mpz_class;
using Rational = mpq_class;

inline double to_double(const Rational& x) { return x.get_d(); }

inline int sign_of(const Rational& x) { return sgn(x); }
inline int sign_of(const BigInt& x) { return sgn(x); }

// "num/den" with den omitted when 1.
inline std::string rational_str(const Rational& x) {
  Rational c(x);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline BigInt int_pow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Rational rational_pow(const Rational& base, unsigned long exp) {
  Rational r;
  mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), exp);
  mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), exp);
  r.canonicalize();
  return r;
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// Deterministic RNG for sampled suites. std::mt19937_64 output is pinned by
// the standard; bounded draws use rejection so sequences are portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next_u64() {
    // splitmix64; tiny, stable, and good enough for instance sampling.
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n), n >= 1.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % n;
  }

  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

}  // namespace escrate
