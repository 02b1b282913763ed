#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "afrft/errors.hpp"

namespace afrft {

using i64 = std::int64_t;

// All moduli are <= 2^31, so reduced operands multiply without overflow
// in 64-bit arithmetic as long as every product is reduced immediately.
inline constexpr i64 kMaxModulus = i64{1} << 31;

inline bool is_prime(i64 p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (i64 d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

// Prime-power modulus N = p^n.
struct Modulus {
  i64 N = 1;
  i64 p = 1;
  int n = 0;

  Modulus() = default;
  Modulus(i64 prime, int exponent) : p(prime), n(exponent) {
    if (!is_prime(prime))
      throw InvalidModulus("p = " + std::to_string(prime) + " is not prime");
    if (exponent < 1)
      throw InvalidModulus("n = " + std::to_string(exponent) + " must be >= 1");
    N = 1;
    for (int i = 0; i < exponent; ++i) {
      N *= prime;
      if (N > kMaxModulus)
        throw InvalidModulus("p^n exceeds 2^31");
    }
  }

  i64 reduce(i64 v) const {
    v %= N;
    return v < 0 ? v + N : v;
  }

  friend bool operator==(const Modulus&, const Modulus&) = default;
};

inline i64 mod_add(i64 a, i64 b, const Modulus& m) {
  return m.reduce(m.reduce(a) + m.reduce(b));
}

inline i64 mod_sub(i64 a, i64 b, const Modulus& m) {
  return m.reduce(m.reduce(a) - m.reduce(b));
}

inline i64 mod_mul(i64 a, i64 b, const Modulus& m) {
  return m.reduce(m.reduce(a) * m.reduce(b));
}

inline i64 mod_pow(i64 base, i64 exp, const Modulus& m) {
  if (exp < 0) throw IndexRange("mod_pow exponent must be >= 0");
  i64 r = m.reduce(1);
  i64 b = m.reduce(base);
  while (exp > 0) {
    if (exp & 1) r = m.reduce(r * b);
    b = m.reduce(b * b);
    exp >>= 1;
  }
  return r;
}

// Extended Euclid; throws NotInvertible carrying the offending gcd.
inline i64 mod_inv(i64 a, const Modulus& m) {
  i64 v = m.reduce(a);
  i64 g = std::gcd(v, m.N);
  if (g != 1) throw NotInvertible(v, m.N, g);
  i64 r0 = m.N, r1 = v;
  i64 t0 = 0, t1 = 1;
  while (r1 != 0) {
    i64 q = r0 / r1;
    i64 r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    i64 t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  return m.reduce(t0);
}

// The residue h with 2h = 1 (mod N); only exists for odd N.
inline i64 half_mod(const Modulus& m) {
  if (m.N % 2 == 0)
    throw EvenModulus("1/2 does not exist mod " + std::to_string(m.N));
  return (m.N + 1) / 2;
}

// lambda = g * p^s with gcd(g, p) = 1.
struct PAdicSplit {
  i64 g = 1;
  int s = 0;
};

inline PAdicSplit p_adic_split(i64 lambda, i64 p) {
  if (lambda < 1)
    throw IndexRange("p_adic_split requires a positive integer, got " +
                     std::to_string(lambda));
  if (!is_prime(p))
    throw InvalidModulus("p = " + std::to_string(p) + " is not prime");
  PAdicSplit r{lambda, 0};
  while (r.g % p == 0) {
    r.g /= p;
    ++r.s;
  }
  return r;
}

}  // namespace afrft
