#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "afrft/modnum.hpp"

namespace afrft {

using Cplx = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;

// d x d matrix whose entries are either 0 or scale * omega_N^e with
// omega_N = exp(2*pi*i/N) and scale = p^(-scale_s/2). Root order N is a
// prime power; the dimension d is independent (gate blocks are p x p or
// p^2 x p^2 while their phases live mod p^k).
struct ExactPhaseMatrix {
  i64 d = 0;
  Modulus mod;
  int scale_s = 0;
  std::vector<std::int32_t> e;

  static constexpr std::int32_t kZero = -1;

  static ExactPhaseMatrix zeros(i64 d, const Modulus& mod) {
    ExactPhaseMatrix m;
    m.d = d;
    m.mod = mod;
    m.e.assign(static_cast<size_t>(d) * d, kZero);
    return m;
  }
  static ExactPhaseMatrix identity(i64 d, const Modulus& mod) {
    ExactPhaseMatrix m = zeros(d, mod);
    for (i64 i = 0; i < d; ++i) m.at(i, i) = 0;
    return m;
  }

  std::int32_t at(i64 r, i64 c) const {
    return e[static_cast<size_t>(r) * d + c];
  }
  std::int32_t& at(i64 r, i64 c) { return e[static_cast<size_t>(r) * d + c]; }

  bool is_monomial() const {
    std::vector<int> col_hits(static_cast<size_t>(d), 0);
    for (i64 r = 0; r < d; ++r) {
      int row_hits = 0;
      for (i64 c = 0; c < d; ++c)
        if (at(r, c) != kZero) {
          ++row_hits;
          ++col_hits[static_cast<size_t>(c)];
        }
      if (row_hits != 1) return false;
    }
    for (int h : col_hits)
      if (h != 1) return false;
    return true;
  }

  bool is_uniform() const {
    for (std::int32_t v : e)
      if (v == kZero) return false;
    return true;
  }

  bool is_diagonal() const {
    for (i64 r = 0; r < d; ++r)
      for (i64 c = 0; c < d; ++c)
        if (r != c && at(r, c) != kZero) return false;
    return true;
  }

  ExactPhaseMatrix dagger() const {
    ExactPhaseMatrix m = zeros(d, mod);
    m.scale_s = scale_s;
    for (i64 r = 0; r < d; ++r)
      for (i64 c = 0; c < d; ++c) {
        std::int32_t v = at(r, c);
        m.at(c, r) = (v == kZero)
                         ? kZero
                         : static_cast<std::int32_t>((mod.N - v) % mod.N);
      }
    return m;
  }

  friend bool operator==(const ExactPhaseMatrix&,
                         const ExactPhaseMatrix&) = default;
};

namespace detail {

struct CollapseResult {
  i64 coeff = 0;  // 0 encodes the zero entry
  i64 expo = 0;
};

// Reduce an integer combination of N-th roots of unity (coefficient vector
// over omega^0..omega^{N-1}) to the power basis omega^0..omega^{(p-1)q-1},
// q = N/p, then recognize c * omega^e. The basis representation is unique,
// so the recognition is sound: a single positive coefficient, or the
// (p-1)-term negative pattern that un-reduces to an exponent >= (p-1)q.
inline std::optional<CollapseResult> cyclo_collapse(std::vector<i64>& v,
                                                    const Modulus& mod) {
  const i64 N = mod.N, p = mod.p;
  const i64 q = N / p;
  const i64 limit = (p - 1) * q;
  for (i64 e = N - 1; e >= limit; --e) {
    i64 c = v[static_cast<size_t>(e)];
    if (c == 0) continue;
    v[static_cast<size_t>(e)] = 0;
    for (i64 t = 1; t <= p - 1; ++t) v[static_cast<size_t>(e - t * q)] -= c;
  }
  i64 first = -1, count = 0;
  for (i64 e = 0; e < limit; ++e)
    if (v[static_cast<size_t>(e)] != 0) {
      if (first < 0) first = e;
      ++count;
    }
  if (count == 0) return CollapseResult{0, 0};
  if (count == 1 && v[static_cast<size_t>(first)] > 0)
    return CollapseResult{v[static_cast<size_t>(first)], first};
  if (count == p - 1 && first < q && v[static_cast<size_t>(first)] < 0) {
    i64 cc = -v[static_cast<size_t>(first)];
    bool ok = true;
    for (i64 t = 0; t < p - 1 && ok; ++t)
      ok = v[static_cast<size_t>(first + t * q)] == -cc;
    if (ok) return CollapseResult{cc, first + limit};
  }
  return std::nullopt;
}

}  // namespace detail

// Exact product, or nullopt when the result leaves the representable class
// (entries that are genuine sums of roots). Every collapse requires one
// global coefficient c = p^j across nonzero entries so the common scale
// stays a power of p^(1/2).
inline std::optional<ExactPhaseMatrix> exact_mul(const ExactPhaseMatrix& A,
                                                 const ExactPhaseMatrix& B) {
  if (A.d != B.d)
    throw DimensionMismatch("exact_mul dimensions differ");
  if (!(A.mod == B.mod))
    throw ModulusMismatch("exact_mul root orders differ");
  const i64 d = A.d, N = A.mod.N;
  ExactPhaseMatrix C = ExactPhaseMatrix::zeros(d, A.mod);

  if (A.is_monomial()) {
    C.scale_s = A.scale_s + B.scale_s;
    for (i64 i = 0; i < d; ++i) {
      i64 k = -1;
      std::int32_t ea = 0;
      for (i64 c = 0; c < d; ++c)
        if (A.at(i, c) != ExactPhaseMatrix::kZero) {
          k = c;
          ea = A.at(i, c);
          break;
        }
      for (i64 j = 0; j < d; ++j) {
        std::int32_t eb = B.at(k, j);
        C.at(i, j) = (eb == ExactPhaseMatrix::kZero)
                         ? ExactPhaseMatrix::kZero
                         : static_cast<std::int32_t>((ea + eb) % N);
      }
    }
    return C;
  }
  if (B.is_monomial()) {
    C.scale_s = A.scale_s + B.scale_s;
    for (i64 j = 0; j < d; ++j) {
      i64 k = -1;
      std::int32_t eb = 0;
      for (i64 r = 0; r < d; ++r)
        if (B.at(r, j) != ExactPhaseMatrix::kZero) {
          k = r;
          eb = B.at(r, j);
          break;
        }
      for (i64 i = 0; i < d; ++i) {
        std::int32_t ea = A.at(i, k);
        C.at(i, j) = (ea == ExactPhaseMatrix::kZero)
                         ? ExactPhaseMatrix::kZero
                         : static_cast<std::int32_t>((ea + eb) % N);
      }
    }
    return C;
  }

  std::vector<i64> counts(static_cast<size_t>(N), 0);
  i64 global_c = 0;
  for (i64 i = 0; i < d; ++i)
    for (i64 j = 0; j < d; ++j) {
      std::fill(counts.begin(), counts.end(), 0);
      bool any = false;
      for (i64 k = 0; k < d; ++k) {
        std::int32_t ea = A.at(i, k), eb = B.at(k, j);
        if (ea == ExactPhaseMatrix::kZero || eb == ExactPhaseMatrix::kZero)
          continue;
        ++counts[static_cast<size_t>((ea + eb) % N)];
        any = true;
      }
      if (!any) {
        C.at(i, j) = ExactPhaseMatrix::kZero;
        continue;
      }
      auto col = detail::cyclo_collapse(counts, A.mod);
      if (!col) return std::nullopt;
      if (col->coeff == 0) {
        C.at(i, j) = ExactPhaseMatrix::kZero;
        continue;
      }
      if (global_c == 0)
        global_c = col->coeff;
      else if (global_c != col->coeff)
        return std::nullopt;
      C.at(i, j) = static_cast<std::int32_t>(col->expo);
    }
  if (global_c == 0) global_c = 1;
  int two_j = 0;
  while (global_c % A.mod.p == 0) {
    global_c /= A.mod.p;
    two_j += 2;
  }
  if (global_c != 1) return std::nullopt;
  C.scale_s = A.scale_s + B.scale_s - two_j;
  return C;
}

inline std::optional<ExactPhaseMatrix> exact_pow(const ExactPhaseMatrix& A,
                                                 i64 e) {
  if (e < 0) throw IndexRange("exact_pow exponent must be >= 0");
  ExactPhaseMatrix r = ExactPhaseMatrix::identity(A.d, A.mod);
  ExactPhaseMatrix b = A;
  while (e > 0) {
    if (e & 1) {
      auto m = exact_mul(r, b);
      if (!m) return std::nullopt;
      r = *m;
    }
    e >>= 1;
    if (e > 0) {
      auto m = exact_mul(b, b);
      if (!m) return std::nullopt;
      b = *m;
    }
  }
  return r;
}

inline DenseMatrix to_dense(const ExactPhaseMatrix& A) {
  const i64 N = A.mod.N;
  std::vector<Cplx> roots(static_cast<size_t>(N));
  for (i64 t = 0; t < N; ++t)
    roots[static_cast<size_t>(t)] =
        std::polar(1.0, 2.0 * M_PI * static_cast<double>(t) /
                            static_cast<double>(N));
  double scale =
      std::pow(static_cast<double>(A.mod.p), -0.5 * static_cast<double>(A.scale_s));
  DenseMatrix M = DenseMatrix::Zero(A.d, A.d);
  for (i64 r = 0; r < A.d; ++r)
    for (i64 c = 0; c < A.d; ++c) {
      std::int32_t v = A.at(r, c);
      if (v != ExactPhaseMatrix::kZero)
        M(r, c) = scale * roots[static_cast<size_t>(v)];
    }
  return M;
}

// Tolerance policy shared by all float comparisons.
inline double default_tol(i64 N) { return N <= 2048 ? 1e-9 : 1e-12 * N; }

inline double max_abs_diff(const DenseMatrix& A, const DenseMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols())
    throw DimensionMismatch("matrix shapes differ");
  return (A - B).cwiseAbs().maxCoeff();
}

inline double unitarity_residual(const DenseMatrix& A) {
  DenseMatrix I = DenseMatrix::Identity(A.rows(), A.cols());
  return max_abs_diff(A.adjoint() * A, I);
}

struct PhaseMatch {
  bool equal = false;
  Cplx phase{1.0, 0.0};
  double residual = 0.0;
};

// M1 == mu * M2 for a unimodular mu picked from the first entry of M2
// exceeding tol in modulus (row-major scan).
inline PhaseMatch global_phase_equal(const DenseMatrix& M1,
                                     const DenseMatrix& M2, double tol) {
  if (M1.rows() != M2.rows() || M1.cols() != M2.cols())
    throw DimensionMismatch("global_phase_equal shapes differ");
  Cplx mu{1.0, 0.0};
  bool found = false;
  for (Eigen::Index r = 0; r < M2.rows() && !found; ++r)
    for (Eigen::Index c = 0; c < M2.cols() && !found; ++c)
      if (std::abs(M2(r, c)) > tol) {
        mu = M1(r, c) / M2(r, c);
        found = true;
      }
  PhaseMatch pm;
  pm.phase = mu;
  pm.residual = max_abs_diff(M1, mu * M2);
  pm.equal = pm.residual <= tol && std::abs(std::abs(mu) - 1.0) <= tol;
  return pm;
}

}  // namespace afrft
