#pragma once

#include <random>
#include <string>
#include <vector>

#include "afrft/modnum.hpp"

namespace afrft {

// Row-major 2x2 matrix over Z_N.
struct Mat2Z {
  i64 a = 1, b = 0, c = 0, d = 1;
  Modulus mod;

  static Mat2Z make(i64 a, i64 b, i64 c, i64 d, const Modulus& m) {
    return Mat2Z{m.reduce(a), m.reduce(b), m.reduce(c), m.reduce(d), m};
  }
  static Mat2Z identity(const Modulus& m) { return make(1, 0, 0, 1, m); }
  // epsilon: the order-4 rotation (0,-1;1,0), the group-level Fourier element.
  static Mat2Z epsilon(const Modulus& m) { return make(0, -1, 1, 0, m); }

  i64 det() const { return mod.reduce(mod.reduce(a * d) - mod.reduce(b * c)); }
  bool is_sl2() const { return det() == mod.reduce(1); }
  bool is_identity() const {
    return a == mod.reduce(1) && b == 0 && c == 0 && d == mod.reduce(1);
  }

  friend bool operator==(const Mat2Z&, const Mat2Z&) = default;
};

inline Mat2Z mat2_mul(const Mat2Z& x, const Mat2Z& y) {
  if (!(x.mod == y.mod))
    throw ModulusMismatch("mat2_mul over different moduli");
  const Modulus& m = x.mod;
  return Mat2Z::make(x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                     x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d, m);
}

inline Mat2Z mat2_pow(const Mat2Z& x, i64 e) {
  if (e < 0) throw IndexRange("mat2_pow exponent must be >= 0");
  Mat2Z r = Mat2Z::identity(x.mod);
  Mat2Z b = x;
  while (e > 0) {
    if (e & 1) r = mat2_mul(r, b);
    b = mat2_mul(b, b);
    e >>= 1;
  }
  return r;
}

// Multiplicative order by iteration, defensively capped.
inline i64 element_order(const Mat2Z& x) {
  constexpr i64 kOrderCap = 10'000'000;
  Mat2Z w = x;
  for (i64 m = 1; m <= kOrderCap; ++m) {
    if (w.is_identity()) return m;
    w = mat2_mul(w, x);
  }
  throw SearchExhausted("element_order cap exceeded");
}

// Element of SO2[Z_N]: pair (a,b) with a^2 + b^2 = 1, realized as the
// matrix (a,-b;b,a). The group law is multiplication of a+bi.
struct SO2Element {
  i64 a = 1, b = 0;
  Modulus mod;

  static SO2Element make(i64 a, i64 b, const Modulus& m) {
    SO2Element e{m.reduce(a), m.reduce(b), m};
    if (mod_add(mod_mul(e.a, e.a, m), mod_mul(e.b, e.b, m), m) != m.reduce(1))
      throw InvalidElement("a^2 + b^2 != 1 mod " + std::to_string(m.N) +
                           " for (" + std::to_string(e.a) + ", " +
                           std::to_string(e.b) + ")");
    return e;
  }
  static SO2Element identity(const Modulus& m) { return make(1, 0, m); }
  static SO2Element epsilon(const Modulus& m) { return make(0, 1, m); }

  Mat2Z to_mat() const { return Mat2Z::make(a, -b, b, a, mod); }
  bool is_identity() const { return a == mod.reduce(1) && b == 0; }

  friend bool operator==(const SO2Element&, const SO2Element&) = default;
};

inline SO2Element so2_mul(const SO2Element& x, const SO2Element& y) {
  if (!(x.mod == y.mod))
    throw ModulusMismatch("so2_mul over different moduli");
  const Modulus& m = x.mod;
  SO2Element r;
  r.mod = m;
  r.a = mod_sub(mod_mul(x.a, y.a, m), mod_mul(x.b, y.b, m), m);
  r.b = mod_add(mod_mul(x.a, y.b, m), mod_mul(x.b, y.a, m), m);
  return r;
}

inline SO2Element so2_pow(const SO2Element& x, i64 e) {
  if (e < 0) throw IndexRange("so2_pow exponent must be >= 0");
  SO2Element r = SO2Element::identity(x.mod);
  SO2Element b = x;
  while (e > 0) {
    if (e & 1) r = so2_mul(r, b);
    b = so2_mul(b, b);
    e >>= 1;
  }
  return r;
}

// |SO2[Z_{p^n}]| = p^{n-1}(p+1) for p = 3 mod 4, p^{n-1}(p-1) for p = 1 mod 4.
inline i64 so2_group_order(const Modulus& m) {
  if (m.p == 2)
    throw UnsupportedModulus("SO2 group order is defined for odd p only");
  i64 o = (m.p % 4 == 3) ? m.p + 1 : m.p - 1;
  for (int i = 1; i < m.n; ++i) o *= m.p;
  return o;
}

namespace detail {
inline std::vector<i64> prime_factors(i64 v) {
  std::vector<i64> fs;
  for (i64 d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      fs.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) fs.push_back(v);
  return fs;
}

inline bool has_full_order(const SO2Element& g, i64 order,
                           const std::vector<i64>& factors) {
  if (!so2_pow(g, order).is_identity()) return false;
  for (i64 q : factors)
    if (so2_pow(g, order / q).is_identity()) return false;
  return true;
}
}  // namespace detail

enum class GeneratorStrategy { Exhaustive, Random };

// Cyclic-group generator of SO2[Z_{p^n}]. Exhaustive: lexicographically
// smallest (a, b); Random: seeded rejection sampling.
inline SO2Element find_generator(const Modulus& m,
                                 GeneratorStrategy strategy =
                                     GeneratorStrategy::Exhaustive,
                                 std::uint64_t seed = 0) {
  i64 order = so2_group_order(m);
  std::vector<i64> factors = detail::prime_factors(order);
  auto on_circle = [&](i64 a, i64 b) {
    return mod_add(mod_mul(a, a, m), mod_mul(b, b, m), m) == 1;
  };
  if (strategy == GeneratorStrategy::Exhaustive) {
    for (i64 a = 0; a < m.N; ++a)
      for (i64 b = 0; b < m.N; ++b)
        if (on_circle(a, b)) {
          SO2Element g{a, b, m};
          if (detail::has_full_order(g, order, factors)) return g;
        }
    throw SearchExhausted("no generator found by exhaustive scan");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<i64> dist(0, m.N - 1);
  constexpr int kAttempts = 1'000'000;
  for (int i = 0; i < kAttempts; ++i) {
    i64 a = dist(rng), b = dist(rng);
    if (!on_circle(a, b)) continue;
    SO2Element g{a, b, m};
    if (detail::has_full_order(g, order, factors)) return g;
  }
  throw SearchExhausted("random generator search exhausted its attempt budget");
}

// Minimal m >= 1 with g^m = epsilon, plus the ambient group order.
struct FourierPower {
  i64 m = 0;
  i64 group_order = 0;
};

inline FourierPower fourier_power(const SO2Element& g) {
  i64 order = so2_group_order(g.mod);
  SO2Element eps = SO2Element::epsilon(g.mod);
  SO2Element w = g;
  for (i64 m = 1; m <= order; ++m) {
    if (w == eps) return FourierPower{m, order};
    w = so2_mul(w, g);
  }
  throw NoFourierPower("no power of (" + std::to_string(g.a) + ", " +
                       std::to_string(g.b) + ") equals epsilon mod " +
                       std::to_string(g.mod.N));
}

// Factored form A = R(x) D(y) eps R(z) [eps], with
// R(x) = (1,x;0,1), D(y) = (y,0;0,y^-1), eps = (0,-1;1,0).
struct SL2Factor {
  enum class Kind { R, D, Eps };
  Kind kind = Kind::Eps;
  i64 param = 0;
};

struct Decomposition {
  std::vector<SL2Factor> factors;
  bool fallback_used = false;
  bool identity = false;
};

inline Mat2Z factor_matrix(const SL2Factor& f, const Modulus& m) {
  switch (f.kind) {
    case SL2Factor::Kind::R:
      return Mat2Z::make(1, f.param, 0, 1, m);
    case SL2Factor::Kind::D:
      return Mat2Z::make(f.param, 0, 0, mod_inv(f.param, m), m);
    case SL2Factor::Kind::Eps:
      return Mat2Z::epsilon(m);
  }
  throw DecompositionFailure("unreachable factor kind");
}

inline Mat2Z compose_factors(const Decomposition& dec, const Modulus& m) {
  Mat2Z r = Mat2Z::identity(m);
  for (const SL2Factor& f : dec.factors) r = mat2_mul(r, factor_matrix(f, m));
  return r;
}

inline Decomposition decompose_sl2(const Mat2Z& A) {
  const Modulus& m = A.mod;
  if (!A.is_sl2())
    throw DecompositionFailure("matrix is not in SL2 (det != 1)");
  Decomposition dec;
  if (A.is_identity()) {
    dec.identity = true;
    return dec;
  }
  auto main_branch = [&](i64 a, i64 c, i64 d) {
    i64 ci = mod_inv(c, m);
    dec.factors.push_back({SL2Factor::Kind::R, mod_mul(a, ci, m)});
    dec.factors.push_back({SL2Factor::Kind::D, ci});
    dec.factors.push_back({SL2Factor::Kind::Eps, 0});
    dec.factors.push_back({SL2Factor::Kind::R, mod_mul(d, ci, m)});
  };
  if (std::gcd(A.c, m.N) == 1) {
    main_branch(A.a, A.c, A.d);
  } else {
    // A = B * eps with B = (-b, a; -d, c); det 1 forces gcd(d, N) = 1 here.
    if (std::gcd(A.d, m.N) != 1)
      throw DecompositionFailure("both c and d are non-invertible");
    main_branch(m.reduce(-A.b), m.reduce(-A.d), A.c);
    dec.factors.push_back({SL2Factor::Kind::Eps, 0});
    dec.fallback_used = true;
  }
  if (!(compose_factors(dec, m) == A))
    throw DecompositionFailure("factor product does not reproduce the input");
  return dec;
}

inline Decomposition decompose_so2(const SO2Element& g) {
  return decompose_sl2(g.to_mat());
}

}  // namespace afrft
