#pragma once

#include "grouprings/algebra.hpp"

#include <set>

namespace gring {

namespace detail {

// strip all factors of p; returns the exponent
inline int strip(Int& v, const Int& p) {
  int k = 0;
  while (v % p == 0) { v /= p; ++k; }
  return k;
}

inline int legendre(Int a, const Int& p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  Int r = 1, base = a, e = (p - 1) / 2, mod = p;
  while (e > 0) {
    if (e % 2 == 1) r = r * base % mod;
    base = base * base % mod;
    e /= 2;
  }
  return r == 1 ? 1 : -1;
}

} // namespace detail

/// Local Hilbert symbol (a,b)_p over Q; p = 0 encodes the infinite place.
inline int hilbert_symbol(const Rat& aq, const Rat& bq, const Int& p) {
  if (aq.is_zero() || bq.is_zero()) throw group_error("hilbert_symbol: zero argument");
  // clear squares: (a,b) depends on a,b modulo squares, so numerator*denominator
  Int a = rat_num(aq) * rat_den(aq);
  Int b = rat_num(bq) * rat_den(bq);
  if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
  if (p == 2) {
    int alpha = detail::strip(a, 2), beta = detail::strip(b, 2);
    auto eps = [](const Int& u) { return int(((u - 1) / 2) % 2 ? 1 : 0); };
    auto omega = [](const Int& u) { return int(((u * u - 1) / 8) % 2 ? 1 : 0); };
    int e = eps(a) * eps(b) + alpha * omega(b) + beta * omega(a);
    return (e % 2) ? -1 : 1;
  }
  int alpha = detail::strip(a, p), beta = detail::strip(b, p);
  int e = (alpha % 2) * (beta % 2) * int(((p - 1) / 2) % 2);
  int s = 1;
  if (e % 2) s = -s;
  if (beta % 2) s *= detail::legendre(a, p);
  if (alpha % 2) s *= detail::legendre(b, p);
  return s;
}

/// The quaternion algebra (a,b)_Q splits iff every local symbol is +1;
/// only the infinite place, 2 and the odd primes dividing a or b can ramify.
inline bool quaternion_splits_over_Q(const Rat& a, const Rat& b) {
  if (hilbert_symbol(a, b, 0) == -1) return false;
  if (hilbert_symbol(a, b, 2) == -1) return false;
  std::set<Int> primes;
  for (Int v : {rat_num(a), rat_den(a), rat_num(b), rat_den(b)}) {
    if (v < 0) v = -v;
    for (Int d = 3; d * d <= v; d += 2)
      while (v % d == 0) { primes.insert(d); v /= d; }
    if (v > 2) primes.insert(v);
  }
  for (const Int& p : primes)
    if (hilbert_symbol(a, b, p) == -1) return false;
  return true;
}

} // namespace gring
