#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace weylpol {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
  return r;
}

/// Subset-counting binomial: C(n, 0) = 1 for every n; 0 when k < 0 or
/// k > n (in particular for negative n with k > 0).
inline Integer binomial(long n, long k) {
  if (k == 0) return Integer(1);
  if (k < 0 || k > n || n < 0) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

/// Generalized binomial C(x, s) = x(x-1)...(x-s+1)/s! for rational x,
/// integer s >= 0; C(x, s) = 0 for s < 0. Handles negative tops,
/// e.g. C(-1, 2) = 1.
inline Rational binomial_general(const Rational& x, long s) {
  if (s < 0) return Rational(0);
  Rational num(1);
  for (long t = 0; t < s; ++t) num *= x - t;
  return num / Rational(factorial(s));
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

}  // namespace weylpol
