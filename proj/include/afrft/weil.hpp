#pragma once

#include <string>

#include "afrft/matrix.hpp"
#include "afrft/modnum.hpp"
#include "afrft/sl2.hpp"

namespace afrft {

// Clock operator Q = diag(omega^l).
inline ExactPhaseMatrix clock(const Modulus& m) {
  ExactPhaseMatrix M = ExactPhaseMatrix::zeros(m.N, m);
  for (i64 l = 0; l < m.N; ++l) M.at(l, l) = static_cast<std::int32_t>(l);
  return M;
}

// Shift operator P: |l> -> |l+1>.
inline ExactPhaseMatrix shift(const Modulus& m) {
  ExactPhaseMatrix M = ExactPhaseMatrix::zeros(m.N, m);
  for (i64 l = 0; l < m.N; ++l) M.at((l + 1) % m.N, l) = 0;
  return M;
}

// Phase-space translation J_{r,s} = omega^{rs/2} P^r Q^s:
// J[k,l] = omega^{half*r*s + s*l} delta_{k, l+r}. Odd N only.
inline ExactPhaseMatrix weyl_j(i64 r, i64 s, const Modulus& m) {
  i64 h = half_mod(m);
  r = m.reduce(r);
  s = m.reduce(s);
  i64 base = mod_mul(h, mod_mul(r, s, m), m);
  ExactPhaseMatrix M = ExactPhaseMatrix::zeros(m.N, m);
  for (i64 l = 0; l < m.N; ++l)
    M.at((l + r) % m.N, l) =
        static_cast<std::int32_t>(mod_add(base, mod_mul(s, l, m), m));
  return M;
}

// Fourier matrix F[k,l] = omega^{kl} / sqrt(N).
inline ExactPhaseMatrix qft_matrix(const Modulus& m) {
  ExactPhaseMatrix M = ExactPhaseMatrix::zeros(m.N, m);
  M.scale_s = m.n;
  for (i64 k = 0; k < m.N; ++k)
    for (i64 l = 0; l < m.N; ++l)
      M.at(k, l) = static_cast<std::int32_t>(mod_mul(k, l, m));
  return M;
}

// Modified Fourier matrix with entries omega^{lambda k l} / sqrt(N).
inline ExactPhaseMatrix mqft_matrix(i64 lambda, const Modulus& m) {
  lambda = m.reduce(lambda);
  if (std::gcd(lambda, m.N) != 1)
    throw NotInvertible(lambda, m.N, std::gcd(lambda, m.N));
  ExactPhaseMatrix M = ExactPhaseMatrix::zeros(m.N, m);
  M.scale_s = m.n;
  for (i64 k = 0; k < m.N; ++k)
    for (i64 l = 0; l < m.N; ++l)
      M.at(k, l) = static_cast<std::int32_t>(mod_mul(lambda, mod_mul(k, l, m), m));
  return M;
}

// Quadratic chirp diag(omega^{gamma k^2}); defined for every N (p=2 too).
inline ExactPhaseMatrix diag_gamma(i64 gamma, const Modulus& m) {
  gamma = m.reduce(gamma);
  ExactPhaseMatrix M = ExactPhaseMatrix::zeros(m.N, m);
  for (i64 k = 0; k < m.N; ++k)
    M.at(k, k) = static_cast<std::int32_t>(mod_mul(gamma, mod_mul(k, k, m), m));
  return M;
}

// Image of the unipotent factor R(a): diag(omega^{-half a k^2}).
inline ExactPhaseMatrix u_diag(i64 a, const Modulus& m) {
  return diag_gamma(m.reduce(-mod_mul(half_mod(m), a, m)), m);
}

// Image of the torus factor D(a): the monomial map |l> -> |a^{-1} l>,
// i.e. U[k,l] = delta_{a k, l}. In particular u_mult(b^{-1}) is the
// multiply-by-b permutation.
inline ExactPhaseMatrix u_mult(i64 a, const Modulus& m) {
  a = m.reduce(a);
  if (std::gcd(a, m.N) != 1)
    throw NotInvertible(a, m.N, std::gcd(a, m.N));
  ExactPhaseMatrix M = ExactPhaseMatrix::zeros(m.N, m);
  for (i64 k = 0; k < m.N; ++k) M.at(k, mod_mul(a, k, m)) = 0;
  return M;
}

// Generic image of A = (a,b;c,d) with invertible c:
// U[k,l] = omega^{-half c^{-1} (a k^2 - 2 k l + d l^2)} / sqrt(N).
inline ExactPhaseMatrix u_generic(const Mat2Z& A) {
  const Modulus& m = A.mod;
  if (std::gcd(A.c, m.N) != 1)
    throw NonInvertibleC("matrix entry c = " + std::to_string(A.c) +
                         " is not invertible mod " + std::to_string(m.N));
  i64 h = half_mod(m);
  i64 ci = mod_inv(A.c, m);
  i64 f = m.reduce(-mod_mul(h, ci, m));
  ExactPhaseMatrix M = ExactPhaseMatrix::zeros(m.N, m);
  M.scale_s = m.n;
  for (i64 k = 0; k < m.N; ++k) {
    i64 ak2 = mod_mul(A.a, mod_mul(k, k, m), m);
    for (i64 l = 0; l < m.N; ++l) {
      i64 quad = mod_add(ak2, mod_mul(A.d, mod_mul(l, l, m), m), m);
      quad = mod_sub(quad, mod_mul(2, mod_mul(k, l, m), m), m);
      M.at(k, l) = static_cast<std::int32_t>(mod_mul(f, quad, m));
    }
  }
  return M;
}

// Fractional Fourier matrix for rotation parameters (a, b):
// entries omega^{-half b^{-1} (a (k^2 + l^2) - 2 k l)} / sqrt(N).
inline ExactPhaseMatrix afrft_matrix(i64 a, i64 b, const Modulus& m) {
  a = m.reduce(a);
  b = m.reduce(b);
  if (b == 0)
    throw DegenerateRotation(
        "b = 0 describes the degenerate rotation (+/- identity); use the "
        "monomial builders");
  i64 h = half_mod(m);
  i64 f = m.reduce(-mod_mul(h, mod_inv(b, m), m));
  ExactPhaseMatrix M = ExactPhaseMatrix::zeros(m.N, m);
  M.scale_s = m.n;
  for (i64 k = 0; k < m.N; ++k) {
    i64 k2 = mod_mul(k, k, m);
    for (i64 l = 0; l < m.N; ++l) {
      i64 quad = mod_add(mod_mul(a, mod_add(k2, mod_mul(l, l, m), m), m),
                         m.reduce(-mod_mul(2, mod_mul(k, l, m), m)), m);
      M.at(k, l) = static_cast<std::int32_t>(mod_mul(f, quad, m));
    }
  }
  return M;
}

// Covariance of the phase-space translations: U(A)^dag J_{r,s} U(A) must
// equal J_{(r,s)A} for every (r,s).
struct CovarianceReport {
  bool ok = false;
  i64 cases = 0;
  double max_residual = 0.0;
};

inline CovarianceReport covariance_check(const Mat2Z& A, double tol) {
  const Modulus& m = A.mod;
  DenseMatrix U = to_dense(u_generic(A));
  DenseMatrix Ud = U.adjoint();
  CovarianceReport rep;
  for (i64 r = 0; r < m.N; ++r)
    for (i64 s = 0; s < m.N; ++s) {
      DenseMatrix lhs = Ud * to_dense(weyl_j(r, s, m)) * U;
      i64 r2 = mod_add(mod_mul(r, A.a, m), mod_mul(s, A.c, m), m);
      i64 s2 = mod_add(mod_mul(r, A.b, m), mod_mul(s, A.d, m), m);
      double res = max_abs_diff(lhs, to_dense(weyl_j(r2, s2, m)));
      rep.max_residual = std::max(rep.max_residual, res);
      ++rep.cases;
    }
  rep.ok = rep.max_residual <= tol;
  return rep;
}

// Proportionality phase mu with M1 = mu * M2 (|mu| = 1); the cocycle of
// the projective representation. Throws NotProportional otherwise.
inline Cplx projective_check(const DenseMatrix& M1, const DenseMatrix& M2,
                             double tol) {
  PhaseMatch pm = global_phase_equal(M1, M2, tol);
  if (!pm.equal)
    throw NotProportional("matrices differ by more than a global phase "
                          "(residual " +
                          std::to_string(pm.residual) + ")");
  return pm.phase;
}

}  // namespace afrft
