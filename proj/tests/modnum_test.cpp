#include "afrft/modnum.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace afrft;

TEST(Modulus, ValidatesPrimePower) {
  Modulus m(3, 2);
  EXPECT_EQ(m.N, 9);
  EXPECT_EQ(m.p, 3);
  EXPECT_EQ(m.n, 2);
  EXPECT_THROW(Modulus(4, 1), InvalidModulus);
  EXPECT_THROW(Modulus(6, 2), InvalidModulus);
  EXPECT_THROW(Modulus(1, 1), InvalidModulus);
  EXPECT_THROW(Modulus(3, 0), InvalidModulus);
  EXPECT_THROW(Modulus(2, 32), InvalidModulus);
  EXPECT_EQ(Modulus(2, 31).N, i64{1} << 31);  // cap is inclusive
}

TEST(Modulus, ReduceNormalizesNegatives) {
  Modulus m(11, 1);
  EXPECT_EQ(m.reduce(-5), 6);
  EXPECT_EQ(m.reduce(-11), 0);
  EXPECT_EQ(m.reduce(22), 0);
  EXPECT_EQ(m.reduce(-1), 10);
}

TEST(ModInv, PinnedValues) {
  EXPECT_EQ(mod_inv(6, Modulus(11, 1)), 2);
  EXPECT_EQ(mod_inv(10, Modulus(11, 1)), 10);
  EXPECT_EQ(mod_inv(2, Modulus(3, 2)), 5);
  EXPECT_EQ(mod_inv(-5, Modulus(11, 1)), 2);  // -5 = 6 mod 11
}

TEST(ModInv, MatchesExhaustiveSearch) {
  for (Modulus m : {Modulus(11, 1), Modulus(3, 2), Modulus(2, 4),
                    Modulus(3, 3), Modulus(5, 2), Modulus(13, 1)}) {
    for (i64 a = 0; a < m.N; ++a) {
      if (std::gcd(a, m.N) != 1) {
        EXPECT_THROW(mod_inv(a, m), NotInvertible);
        continue;
      }
      i64 want = -1;
      for (i64 b = 0; b < m.N; ++b)
        if (mod_mul(a, b, m) == 1) {
          want = b;
          break;
        }
      EXPECT_EQ(mod_inv(a, m), want) << "a=" << a << " N=" << m.N;
    }
  }
}

TEST(ModInv, ReportsGcdOnFailure) {
  try {
    mod_inv(6, Modulus(3, 2));
    FAIL() << "expected NotInvertible";
  } catch (const NotInvertible& e) {
    EXPECT_EQ(e.gcd(), 3);
  }
}

TEST(ModInv, IsAnInvolution) {
  for (Modulus m : {Modulus(11, 1), Modulus(3, 3), Modulus(2, 5)}) {
    for (i64 a = 1; a < m.N; ++a) {
      if (std::gcd(a, m.N) != 1) continue;
      EXPECT_EQ(mod_inv(mod_inv(a, m), m), a);
    }
  }
}

TEST(HalfMod, PinnedValuesAndEvenRejection) {
  EXPECT_EQ(half_mod(Modulus(11, 1)), 6);
  EXPECT_EQ(half_mod(Modulus(3, 2)), 5);
  EXPECT_EQ(half_mod(Modulus(3, 1)), 2);
  EXPECT_THROW(half_mod(Modulus(2, 3)), EvenModulus);
}

TEST(HalfMod, DoublesToOne) {
  for (Modulus m : {Modulus(3, 1), Modulus(3, 4), Modulus(7, 2),
                    Modulus(11, 1), Modulus(13, 2)}) {
    EXPECT_EQ(mod_mul(2, half_mod(m), m), 1);
  }
}

TEST(ModPow, PinnedAndAgainstIteratedProduct) {
  EXPECT_EQ(mod_pow(2, 5, Modulus(11, 1)), 10);
  Modulus m(7, 2);
  for (i64 b = 0; b < m.N; b += 5) {
    i64 acc = 1;
    for (i64 e = 0; e < 12; ++e) {
      EXPECT_EQ(mod_pow(b, e, m), acc);
      acc = mod_mul(acc, b, m);
    }
  }
  EXPECT_THROW(mod_pow(2, -1, Modulus(11, 1)), IndexRange);
}

TEST(PAdicSplit, PinnedValues) {
  PAdicSplit r = p_adic_split(6, 3);
  EXPECT_EQ(r.g, 2);
  EXPECT_EQ(r.s, 1);
  r = p_adic_split(7, 3);
  EXPECT_EQ(r.g, 7);
  EXPECT_EQ(r.s, 0);
  r = p_adic_split(24, 2);
  EXPECT_EQ(r.g, 3);
  EXPECT_EQ(r.s, 3);
  EXPECT_THROW(p_adic_split(0, 3), IndexRange);
}

TEST(PAdicSplit, ReconstructsEveryInteger) {
  for (i64 p : {2, 3, 5, 7, 11}) {
    for (i64 lambda = 1; lambda <= 10'000; ++lambda) {
      PAdicSplit r = p_adic_split(lambda, p);
      EXPECT_NE(r.g % p, 0);
      i64 back = r.g;
      for (int i = 0; i < r.s; ++i) back *= p;
      EXPECT_EQ(back, lambda);
    }
  }
}

TEST(ModArith, ProductsStayReduced) {
  Modulus m(13, 2);  // N = 169
  EXPECT_EQ(mod_mul(-1, -1, m), 1);
  EXPECT_EQ(mod_add(168, 1, m), 0);
  EXPECT_EQ(mod_sub(0, 1, m), 168);
  // chained squarings never leave the reduced range
  i64 v = 167;
  for (int i = 0; i < 64; ++i) {
    v = mod_mul(v, v, m);
    EXPECT_GE(v, 0);
    EXPECT_LT(v, m.N);
  }
}
