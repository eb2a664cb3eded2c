#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace wildcount {

using Rational = boost::rational<std::int64_t>;

inline std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// p^e for any integer e (negative exponents give 1/p^-e).
inline Rational rpow(std::int64_t p, int e) {
  return e >= 0 ? Rational(ipow(p, e)) : Rational(1, ipow(p, -e));
}

inline std::int64_t floor_of(const Rational& x) {
  std::int64_t q = x.numerator() / x.denominator();
  if (x.numerator() < 0 && q * x.denominator() != x.numerator()) --q;
  return q;
}

inline std::int64_t ceil_of(const Rational& x) {
  std::int64_t f = floor_of(x);
  return Rational(f) == x ? f : f + 1;
}

// p-adic valuation of a nonzero integer.
inline int valuation(std::int64_t n, std::int64_t p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// Smallest e >= 0 with p^e >= n.
inline int ceil_log(std::int64_t n, std::int64_t p) {
  int e = 0;
  std::int64_t pe = 1;
  while (pe < n) {
    pe *= p;
    ++e;
  }
  return e;
}

// "num/den", always with the denominator.
inline std::string to_fraction(const Rational& x) {
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

// "num/den", or just "num" for integers.
inline std::string to_compact(const Rational& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return to_fraction(x);
}

// Parses "a", "a/b".
Rational parse_rational(const std::string& s);

}  // namespace wildcount
