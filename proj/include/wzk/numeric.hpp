#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace wzk {

using Rational = mpq_class;

// Weight coefficients are plain 64-bit integers.  Every arithmetic step that
// could wrap goes through a checked helper and throws instead of producing a
// silently wrong value; derived rational quantities use mpq_class throughout.

inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in weight arithmetic");
  return r;
}

inline long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in weight arithmetic");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in weight arithmetic");
  return r;
}

inline long long checked_pow(long long base, long long exp) {
  if (exp < 0) throw std::invalid_argument("checked_pow: negative exponent");
  long long r = 1;
  for (long long e = 0; e < exp; ++e) r = checked_mul(r, base);
  return r;
}

// gmpxx has no long long overloads; go through long, which has the same
// width here.
static_assert(sizeof(long) == sizeof(long long), "64-bit long required");
inline Rational to_rational(long long v) { return Rational(static_cast<long>(v)); }

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

/// floor of an exact rational, as a machine integer.
inline long long rational_floor(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  if (!f.fits_slong_p())
    throw std::overflow_error("rational floor exceeds machine range");
  return f.get_si();
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace wzk
