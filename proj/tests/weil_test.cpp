#include "afrft/weil.hpp"

#include <gtest/gtest.h>

#include <random>

#include "afrft/reference_data.hpp"

using namespace afrft;

namespace {

const Modulus kM11(11, 1);

ExactPhaseMatrix shift_phase(ExactPhaseMatrix M, i64 t) {
  t = M.mod.reduce(t);
  for (auto& v : M.e)
    if (v != ExactPhaseMatrix::kZero)
      v = static_cast<std::int32_t>((v + t) % M.mod.N);
  return M;
}

DenseMatrix dense_pow(const DenseMatrix& M, i64 e) {
  DenseMatrix r = DenseMatrix::Identity(M.rows(), M.cols());
  DenseMatrix b = M;
  while (e > 0) {
    if (e & 1) r = (r * b).eval();
    b = (b * b).eval();
    e >>= 1;
  }
  return r;
}

std::vector<SO2Element> all_generators(const Modulus& m) {
  i64 order = so2_group_order(m);
  auto factors = detail::prime_factors(order);
  std::vector<SO2Element> gens;
  for (i64 a = 0; a < m.N; ++a)
    for (i64 b = 0; b < m.N; ++b) {
      if (mod_add(mod_mul(a, a, m), mod_mul(b, b, m), m) != 1) continue;
      SO2Element g{a, b, m};
      if (detail::has_full_order(g, order, factors)) gens.push_back(g);
    }
  return gens;
}

Mat2Z random_invertible_sl2(const Modulus& m, std::mt19937_64& rng) {
  std::uniform_int_distribution<i64> any(0, m.N - 1);
  i64 x = any(rng), z = any(rng), y;
  do y = any(rng);
  while (std::gcd(y, m.N) != 1);
  // R(x) D(y) eps R(z): its lower-left entry is y^{-1}, always invertible.
  Mat2Z A = mat2_mul(Mat2Z::make(1, x, 0, 1, m), Mat2Z::make(y, 0, 0, mod_inv(y, m), m));
  A = mat2_mul(A, Mat2Z::epsilon(m));
  return mat2_mul(A, Mat2Z::make(1, z, 0, 1, m));
}

}  // namespace

TEST(Golden11, FourierGrid) {
  ExactPhaseMatrix F = qft_matrix(kM11);
  EXPECT_EQ(F.scale_s, 1);
  for (i64 k = 0; k < 11; ++k)
    for (i64 l = 0; l < 11; ++l)
      EXPECT_EQ(F.at(k, l), reference::kQft11[k][l]) << k << "," << l;
}

TEST(Golden11, ModifiedFourierGrid) {
  ExactPhaseMatrix M = mqft_matrix(2, kM11);
  for (i64 k = 0; k < 11; ++k)
    for (i64 l = 0; l < 11; ++l)
      EXPECT_EQ(M.at(k, l), reference::kMqft2[k][l]) << k << "," << l;
}

TEST(Golden11, ChirpDiagonal) {
  ExactPhaseMatrix D = diag_gamma(8, kM11);
  EXPECT_EQ(D.scale_s, 0);
  for (i64 k = 0; k < 11; ++k)
    for (i64 l = 0; l < 11; ++l) {
      if (k == l)
        EXPECT_EQ(D.at(k, l), reference::kDiag8[k]);
      else
        EXPECT_EQ(D.at(k, l), ExactPhaseMatrix::kZero);
    }
}

TEST(Golden11, MultiplyBySixPermutation) {
  // Multiply-by-6 map is the torus image of 6^{-1} = 2.
  ExactPhaseMatrix M = u_mult(mod_inv(reference::kMultiplier, kM11), kM11);
  EXPECT_EQ(M.scale_s, 0);
  for (i64 k = 0; k < 11; ++k)
    for (i64 l = 0; l < 11; ++l) {
      i64 want = (k == reference::kMultiplier * l % 11) ? 0 : ExactPhaseMatrix::kZero;
      EXPECT_EQ(M.at(k, l), want) << k << "," << l;
    }
}

TEST(Golden11, FractionalFourierGrid) {
  ExactPhaseMatrix A = afrft_matrix(3, -5, kM11);
  EXPECT_EQ(A.scale_s, 1);
  for (i64 k = 0; k < 11; ++k)
    for (i64 l = 0; l < 11; ++l)
      EXPECT_EQ(A.at(k, l), reference::kAfrft35[k][l]) << k << "," << l;
}

TEST(Builders, GenericImageSpotValuesAndRotationForm) {
  Mat2Z R = SO2Element{3, kM11.reduce(-5), kM11}.to_mat();
  ExactPhaseMatrix U = u_generic(R);
  EXPECT_EQ(U.at(0, 0), 0);
  EXPECT_EQ(U.at(0, 1), 8);
  EXPECT_EQ(U.at(1, 1), 7);
  // On a rotation matrix the generic quadratic-phase image and the
  // fractional-Fourier builder coincide entry for entry.
  EXPECT_EQ(U, afrft_matrix(3, -5, kM11));
  // The quarter turn maps to the plain Fourier matrix.
  EXPECT_EQ(u_generic(Mat2Z::epsilon(kM11)), qft_matrix(kM11));
}

TEST(Builders, TorusImageConvention) {
  // u_mult(a)|l> = |a^{-1} l>: for a = 2 mod 11, column 1 holds row 6.
  ExactPhaseMatrix M = u_mult(2, kM11);
  EXPECT_EQ(M.at(6, 1), 0);
  EXPECT_EQ(M.at(1, 6), ExactPhaseMatrix::kZero);
}

TEST(Builders, UnipotentImageIsChirp) {
  for (i64 a = 0; a < 11; ++a)
    EXPECT_EQ(u_diag(a, kM11),
              diag_gamma(kM11.reduce(-mod_mul(half_mod(kM11), a, kM11)), kM11));
}

TEST(Builders, ChirpWorksForPowerOfTwoDimension) {
  Modulus m(2, 4);
  ExactPhaseMatrix D = diag_gamma(5, m);
  for (i64 k = 0; k < 16; ++k) EXPECT_EQ(D.at(k, k), 5 * k * k % 16);
}

TEST(Builders, ErrorTaxonomy) {
  EXPECT_THROW(weyl_j(1, 0, Modulus(2, 3)), EvenModulus);
  EXPECT_THROW(mqft_matrix(3, Modulus(3, 2)), NotInvertible);
  EXPECT_THROW(afrft_matrix(1, 0, kM11), DegenerateRotation);
  EXPECT_THROW(afrft_matrix(1, 3, Modulus(3, 2)), NotInvertible);
  EXPECT_THROW(u_generic(Mat2Z::make(1, 0, 3, 1, Modulus(3, 2))), NonInvertibleC);
}

TEST(Factorization, ChirpSandwichEqualsFractionalFourier) {
  // afrft(a,b) = diag(gamma) * mqft(b^{-1}) * diag(gamma), gamma = -a*half/b.
  auto check = [](const SO2Element& g) {
    const Modulus& m = g.mod;
    ASSERT_EQ(std::gcd(g.b, m.N), 1) << "generator with non-invertible b";
    i64 bi = mod_inv(g.b, m);
    i64 gamma = m.reduce(-mod_mul(g.a, mod_mul(half_mod(m), bi, m), m));
    auto inner = exact_mul(diag_gamma(gamma, m), mqft_matrix(bi, m));
    ASSERT_TRUE(inner.has_value());
    auto full = exact_mul(*inner, diag_gamma(gamma, m));
    ASSERT_TRUE(full.has_value());
    EXPECT_EQ(*full, afrft_matrix(g.a, g.b, m))
        << "(" << g.a << "," << g.b << ") mod " << m.N;
  };
  check(SO2Element{3, kM11.reduce(-5), kM11});
  for (Modulus m : {Modulus(7, 1), Modulus(3, 2), Modulus(5, 2), Modulus(3, 3)}) {
    auto gens = all_generators(m);
    ASSERT_FALSE(gens.empty());
    for (const SO2Element& g : gens) check(g);
  }
}

TEST(Magnetic, TranslationRelationsExact) {
  for (Modulus m : {Modulus(5, 1), Modulus(7, 1), Modulus(3, 2), Modulus(11, 1)}) {
    i64 h = half_mod(m);
    // J_{1,0} is the shift, J_{0,1} the clock.
    EXPECT_EQ(weyl_j(1, 0, m), shift(m));
    EXPECT_EQ(weyl_j(0, 1, m), clock(m));
    for (i64 r = 0; r < m.N; ++r)
      for (i64 s = 0; s < m.N; ++s) {
        ExactPhaseMatrix J = weyl_j(r, s, m);
        EXPECT_EQ(J.dagger(), weyl_j(-r, -s, m));
        auto JN = exact_pow(J, m.N);
        ASSERT_TRUE(JN.has_value());
        EXPECT_EQ(*JN, ExactPhaseMatrix::identity(m.N, m));
        for (i64 r2 = 0; r2 < m.N; ++r2)
          for (i64 s2 = 0; s2 < m.N; ++s2) {
            auto prod = exact_mul(J, weyl_j(r2, s2, m));
            ASSERT_TRUE(prod.has_value());
            i64 ph = mod_mul(h, mod_sub(mod_mul(s, r2, m), mod_mul(r, s2, m), m), m);
            EXPECT_EQ(*prod, shift_phase(weyl_j(r + r2, s + s2, m), ph));
          }
      }
  }
}

TEST(Magnetic, IntegerPowersScaleTheLabel) {
  Modulus m(7, 1);
  for (i64 r : {1, 2, 5})
    for (i64 s : {0, 3, 6}) {
      ExactPhaseMatrix J = weyl_j(r, s, m);
      for (i64 k = 0; k <= 2 * m.N; ++k) {
        auto p = exact_pow(J, k);
        ASSERT_TRUE(p.has_value());
        EXPECT_EQ(*p, weyl_j(k * r, k * s, m));
      }
    }
}

TEST(Magnetic, FourierIntertwinesClockAndShift) {
  for (Modulus m : {Modulus(5, 1), Modulus(11, 1), Modulus(3, 2)}) {
    auto QF = exact_mul(clock(m), qft_matrix(m));
    auto FP = exact_mul(qft_matrix(m), shift(m));
    ASSERT_TRUE(QF.has_value() && FP.has_value());
    EXPECT_EQ(*QF, *FP);
  }
}

TEST(Magnetic, PinnedCompositionPhase) {
  Modulus m(7, 1);
  auto prod = exact_mul(weyl_j(1, 0, m), weyl_j(0, 1, m));
  ASSERT_TRUE(prod.has_value());
  Cplx mu = projective_check(to_dense(*prod), to_dense(weyl_j(1, 1, m)), 1e-12);
  // omega^{-half} = omega^3 at N = 7.
  EXPECT_LT(std::abs(mu - std::polar(1.0, 2 * M_PI * 3 / 7)), 1e-12);
  EXPECT_THROW(
      projective_check(to_dense(qft_matrix(m)), to_dense(mqft_matrix(2, m)), 1e-9),
      NotProportional);
}

TEST(Covariance, QuarterTurnAndRandomElements) {
  std::mt19937_64 rng(2024);
  for (Modulus m : {Modulus(5, 1), Modulus(7, 1), Modulus(11, 1)}) {
    CovarianceReport eps = covariance_check(Mat2Z::epsilon(m), 1e-9);
    EXPECT_TRUE(eps.ok);
    EXPECT_EQ(eps.cases, m.N * m.N);
    for (int t = 0; t < 20; ++t) {
      Mat2Z A = random_invertible_sl2(m, rng);
      ASSERT_TRUE(A.is_sl2());
      CovarianceReport rep = covariance_check(A, 1e-9);
      EXPECT_TRUE(rep.ok) << "A=(" << A.a << "," << A.b << ";" << A.c << ","
                          << A.d << ") mod " << m.N
                          << " residual " << rep.max_residual;
    }
  }
}

TEST(RootsOfUnity, PinnedGeneratorPowers) {
  SO2Element g{3, kM11.reduce(-5), kM11};
  FourierPower fp = fourier_power(g);
  EXPECT_EQ(fp.m, 3);
  EXPECT_EQ(fp.group_order, 12);
  DenseMatrix U = to_dense(afrft_matrix(g.a, g.b, kM11));
  Cplx mu = projective_check(dense_pow(U, 3), to_dense(qft_matrix(kM11)), 1e-9);
  EXPECT_LT(std::abs(mu * mu * mu * mu - Cplx(1, 0)), 1e-9);
  DenseMatrix U12 = dense_pow(U, 12);
  EXPECT_LT(max_abs_diff(U12, DenseMatrix::Identity(11, 11)), 1e-9);
}

TEST(RootsOfUnity, GeneratorPowersAcrossModuli) {
  for (i64 p : {5, 7, 13})
    for (int n : {1, 2}) {
      Modulus m(p, n);
      SO2Element g = find_generator(m);
      FourierPower fp = fourier_power(g);
      DenseMatrix U = to_dense(afrft_matrix(g.a, g.b, m));
      Cplx mu = projective_check(dense_pow(U, fp.m), to_dense(qft_matrix(m)), 1e-9);
      EXPECT_LT(std::abs(std::pow(mu, 4) - Cplx(1, 0)), 1e-9) << "N=" << m.N;
      EXPECT_LT(max_abs_diff(dense_pow(U, 4 * fp.m),
                             DenseMatrix::Identity(m.N, m.N)),
                1e-9)
          << "N=" << m.N;
    }
}

TEST(Identities, ModifiedFourierFromMultiplierAndFourier) {
  for (Modulus m : {Modulus(11, 1), Modulus(3, 2)}) {
    for (i64 lambda = 1; lambda < m.N; ++lambda) {
      if (std::gcd(lambda, m.N) != 1) continue;
      i64 li = mod_inv(lambda, m);
      // mQFT_lambda = QFT * (multiply-by-lambda).
      auto post = exact_mul(qft_matrix(m), u_mult(li, m));
      ASSERT_TRUE(post.has_value());
      EXPECT_EQ(*post, mqft_matrix(lambda, m));
      // mQFT_{lambda^{-1}} = (multiply-by-lambda) * QFT.
      auto pre = exact_mul(u_mult(li, m), qft_matrix(m));
      ASSERT_TRUE(pre.has_value());
      EXPECT_EQ(*pre, mqft_matrix(li, m));
    }
  }
}
