#pragma once

// Verification suites shared by the command-line tool and the acceptance
// harness.  Each suite runs a family of identity checks and returns a
// SuiteReport: the case count, the sorted ids of failing cases, and the
// largest residual observed.  Exact integer comparisons contribute a
// residual of 0 when they hold and 1 when they do not; tolerance-based
// comparisons contribute their measured residual.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "afrft/circuit.hpp"
#include "afrft/errors.hpp"
#include "afrft/matrix.hpp"
#include "afrft/modnum.hpp"
#include "afrft/reference_data.hpp"
#include "afrft/sl2.hpp"
#include "afrft/synth.hpp"
#include "afrft/weil.hpp"

namespace afrft {

struct SuiteOptions {
  i64 p = 11;
  int n = 1;
  double tol = 1e-9;
  std::uint64_t seed = 2024;
};

struct SuiteReport {
  std::string suite;
  i64 cases = 0;
  std::vector<std::string> failures;  // sorted case ids
  double max_residual = 0.0;
};

namespace detail {

struct Recorder {
  SuiteReport rep;

  explicit Recorder(std::string name) { rep.suite = std::move(name); }

  void note(const std::string& id, bool ok, double residual) {
    ++rep.cases;
    rep.max_residual = std::max(rep.max_residual, residual);
    if (!ok) rep.failures.push_back(id);
  }
  void exact(const std::string& id, bool ok) { note(id, ok, ok ? 0.0 : 1.0); }

  SuiteReport done() {
    std::sort(rep.failures.begin(), rep.failures.end());
    return rep;
  }
};

inline ExactPhaseMatrix with_global_phase(ExactPhaseMatrix M, i64 t) {
  for (auto& e : M.e)
    if (e != ExactPhaseMatrix::kZero) e = static_cast<std::int32_t>(M.mod.reduce(e + t));
  return M;
}

inline std::vector<SO2Element> all_circle_generators(const Modulus& m) {
  i64 order = so2_group_order(m);
  std::vector<i64> factors = prime_factors(order);
  std::vector<SO2Element> gens;
  for (i64 a = 0; a < m.N; ++a)
    for (i64 b = 0; b < m.N; ++b) {
      if (mod_add(mod_mul(a, a, m), mod_mul(b, b, m), m) != 1) continue;
      SO2Element g{a, b, m};
      if (has_full_order(g, order, factors)) gens.push_back(g);
    }
  return gens;
}

inline Mat2Z random_invertible_sl2(const Modulus& m, std::mt19937_64& rng) {
  std::uniform_int_distribution<i64> any(0, m.N - 1);
  i64 x = any(rng), z = any(rng), y;
  do y = any(rng);
  while (std::gcd(y, m.N) != 1);
  // R(x) D(y) eps R(z): lower-left entry y^{-1}, always invertible.
  Mat2Z A = mat2_mul(Mat2Z::make(1, x, 0, 1, m),
                     Mat2Z::make(y, 0, 0, mod_inv(y, m), m));
  A = mat2_mul(A, Mat2Z::epsilon(m));
  return mat2_mul(A, Mat2Z::make(1, z, 0, 1, m));
}

// Monomial matrix of the dit-order reversal |x> -> |rev_p(x)>.
inline ExactPhaseMatrix reversal_perm(const Modulus& m) {
  ExactPhaseMatrix R = ExactPhaseMatrix::zeros(m.N, m);
  for (i64 x = 0; x < m.N; ++x) {
    i64 y = 0, t = x;
    for (int w = 0; w < m.n; ++w) {
      y = y * m.p + t % m.p;
      t /= m.p;
    }
    R.at(y, x) = 0;
  }
  return R;
}

inline void require_odd(const std::string& suite, i64 p) {
  if (p == 2)
    throw EvenModulus("suite " + suite + " needs an odd prime modulus");
}

inline std::string tag(std::initializer_list<i64> xs) {
  std::string s = "(";
  bool first = true;
  for (i64 x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

}  // namespace detail

// Golden 11x11 matrices compared with exact integer equality.
inline SuiteReport verify_appendix_a(const SuiteOptions& = {}) {
  detail::Recorder rec("appendix-a");
  Modulus m(11, 1);

  auto grid_ok = [&](const ExactPhaseMatrix& M, auto want, int scale_s) {
    if (M.scale_s != scale_s || M.d != 11) return false;
    for (i64 k = 0; k < 11; ++k)
      for (i64 l = 0; l < 11; ++l)
        if (M.at(k, l) != want(k, l)) return false;
    return true;
  };

  rec.exact("afrft-grid",
            grid_ok(afrft_matrix(3, m.reduce(-5), m),
                    [](i64 k, i64 l) { return reference::kAfrft35[k][l]; }, 1));
  rec.exact("diag-grid",
            grid_ok(diag_gamma(8, m),
                    [](i64 k, i64 l) {
                      return k == l ? reference::kDiag8[k]
                                    : ExactPhaseMatrix::kZero;
                    },
                    0));
  rec.exact("modmulc-grid",
            grid_ok(u_mult(mod_inv(reference::kMultiplier, m), m),
                    [](i64 k, i64 l) {
                      return k == reference::kMultiplier * l % 11
                                 ? 0
                                 : ExactPhaseMatrix::kZero;
                    },
                    0));
  rec.exact("qft-grid",
            grid_ok(qft_matrix(m),
                    [](i64 k, i64 l) { return reference::kQft11[k][l]; }, 1));
  rec.exact("mqft-grid",
            grid_ok(mqft_matrix(2, m),
                    [](i64 k, i64 l) { return reference::kMqft2[k][l]; }, 1));
  return rec.done();
}

// Phase-space translation algebra, checked on the exact backend.
inline SuiteReport verify_magnetic(const SuiteOptions& opt = {}) {
  detail::require_odd("magnetic", opt.p);
  detail::Recorder rec("magnetic");
  Modulus m(opt.p, opt.n);
  i64 h = half_mod(m);

  rec.exact("clock-shift-identification", weyl_j(1, 0, m) == shift(m) &&
                                              weyl_j(0, 1, m) == clock(m));
  {
    auto QF = exact_mul(clock(m), qft_matrix(m));
    auto FP = exact_mul(qft_matrix(m), shift(m));
    rec.exact("fourier-intertwines-clock-shift",
              QF.has_value() && FP.has_value() && *QF == *FP);
  }

  for (i64 r = 0; r < m.N; ++r)
    for (i64 s = 0; s < m.N; ++s) {
      ExactPhaseMatrix J = weyl_j(r, s, m);
      rec.exact("dagger" + detail::tag({r, s}),
                J.dagger() == weyl_j(-r, -s, m));
      auto JN = exact_pow(J, m.N);
      rec.exact("period" + detail::tag({r, s}),
                JN.has_value() && *JN == ExactPhaseMatrix::identity(m.N, m));
    }

  // Composition relation: full sweep when small, seeded sample otherwise.
  auto compose_case = [&](i64 r, i64 s, i64 r2, i64 s2) {
    auto prod = exact_mul(weyl_j(r, s, m), weyl_j(r2, s2, m));
    i64 ph = mod_mul(h, mod_sub(mod_mul(s, r2, m), mod_mul(r, s2, m), m), m);
    rec.exact("compose" + detail::tag({r, s, r2, s2}),
              prod.has_value() &&
                  *prod == detail::with_global_phase(
                               weyl_j(r + r2, s + s2, m), ph));
  };
  if (m.N <= 11) {
    for (i64 r = 0; r < m.N; ++r)
      for (i64 s = 0; s < m.N; ++s)
        for (i64 r2 = 0; r2 < m.N; ++r2)
          for (i64 s2 = 0; s2 < m.N; ++s2) compose_case(r, s, r2, s2);
  } else {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<i64> any(0, m.N - 1);
    for (int t = 0; t < 300; ++t)
      compose_case(any(rng), any(rng), any(rng), any(rng));
  }
  return rec.done();
}

// Covariance of the translations under conjugation by Weil images.
inline SuiteReport verify_covariance(const SuiteOptions& opt = {}) {
  detail::require_odd("covariance", opt.p);
  detail::Recorder rec("covariance");
  Modulus m(opt.p, opt.n);
  std::mt19937_64 rng(opt.seed);

  auto check_element = [&](const std::string& id, const Mat2Z& A) {
    DenseMatrix U = to_dense(u_generic(A));
    DenseMatrix Ud = U.adjoint();
    double worst = 0.0;
    auto one_pair = [&](i64 r, i64 s) {
      DenseMatrix lhs = Ud * to_dense(weyl_j(r, s, m)) * U;
      i64 r2 = mod_add(mod_mul(r, A.a, m), mod_mul(s, A.c, m), m);
      i64 s2 = mod_add(mod_mul(r, A.b, m), mod_mul(s, A.d, m), m);
      worst = std::max(worst, max_abs_diff(lhs, to_dense(weyl_j(r2, s2, m))));
    };
    if (m.N <= 16) {
      for (i64 r = 0; r < m.N; ++r)
        for (i64 s = 0; s < m.N; ++s) one_pair(r, s);
    } else {
      std::uniform_int_distribution<i64> any(0, m.N - 1);
      for (int t = 0; t < 64; ++t) one_pair(any(rng), any(rng));
    }
    rec.note(id, worst <= opt.tol, worst);
  };

  check_element("epsilon", Mat2Z::epsilon(m));
  for (int t = 0; t < 20; ++t) {
    Mat2Z A = detail::random_invertible_sl2(m, rng);
    check_element("A" + detail::tag({A.a, A.b, A.c, A.d}), A);
  }
  return rec.done();
}

// Fractional-root property of the circle generator.
inline SuiteReport verify_roots(const SuiteOptions& opt = {}) {
  detail::require_odd("roots", opt.p);
  detail::Recorder rec("roots");
  Modulus m(opt.p, opt.n);
  DenseMatrix F = to_dense(qft_matrix(m));

  SO2Element g0 = find_generator(m);
  FourierPower fp = fourier_power(g0);
  DenseMatrix U = to_dense(afrft_matrix(g0.a, g0.b, m));
  DenseMatrix P = DenseMatrix::Identity(m.N, m.N);
  for (i64 t = 0; t < fp.m; ++t) P = U * P;
  PhaseMatch pm = global_phase_equal(P, F, opt.tol);
  rec.note("fractional-power-hits-fourier", pm.equal, pm.residual);

  for (i64 t = fp.m; t < 4 * fp.m; ++t) P = U * P;
  double res = max_abs_diff(P, DenseMatrix::Identity(m.N, m.N));
  rec.note("full-period-identity", res <= opt.tol, res);

  if (m.N == 11) {
    DenseMatrix V = to_dense(afrft_matrix(3, m.reduce(-5), m));
    PhaseMatch cube = global_phase_equal(V * V * V, F, opt.tol);
    rec.note("pinned-generator-cube", cube.equal, cube.residual);
  }
  return rec.done();
}

// Synthesized circuits against their target matrices.
inline SuiteReport verify_circuits(const SuiteOptions& opt = {}) {
  detail::Recorder rec("circuits");
  Modulus m(opt.p, opt.n);

  auto exact_unitary = [&](const Circuit& c) {
    auto U = circuit_unitary_exact(c);
    if (!U.has_value())
      throw NotProportional("circuit did not fold on the exact backend");
    return *U;
  };

  if (opt.p != 2) {
    rec.exact("qft-cascade",
              exact_unitary(synth_qft(opt.p, opt.n)) == qft_matrix(m));
    std::vector<SO2Element> gens =
        m.N <= 27 ? detail::all_circle_generators(m)
                  : std::vector<SO2Element>{find_generator(m)};
    for (const SO2Element& g : gens) {
      Circuit c = synth_qafrft(g.a, g.b, opt.p, opt.n);
      PhaseMatch pm = global_phase_equal(
          circuit_unitary(c), to_dense(afrft_matrix(g.a, g.b, m)), opt.tol);
      rec.note("qafrft" + detail::tag({g.a, g.b}), pm.equal, pm.residual);
    }
  }

  std::vector<i64> lambdas;
  for (i64 l = 2; l < m.N && (m.N <= 32 || lambdas.size() < 8); ++l)
    if (std::gcd(l, m.N) == 1) lambdas.push_back(l);
  for (i64 l : lambdas) {
    Circuit c = synth_modmulc(l, opt.p, opt.n);
    rec.exact("modmulc" + detail::tag({l}),
              exact_unitary(c) == u_mult(mod_inv(l, m), m));
    if (l == lambdas.front())
      rec.exact("mqft-cascade" + detail::tag({l}),
                exact_unitary(synth_mqft(l, opt.p, opt.n)) ==
                    mqft_matrix(l, m));
  }

  std::vector<i64> gammas;
  if (m.N <= 32)
    for (i64 g = 0; g < m.N; ++g) gammas.push_back(g);
  else
    gammas = {1, 2, opt.p, m.N - 1};
  ExactPhaseMatrix rev = detail::reversal_perm(m);
  for (i64 g : gammas) {
    Circuit prod = synth_diag(g, opt.p, opt.n, DiagOrientation::Standard,
                              /*lnn=*/false);
    rec.exact("diag" + detail::tag({g}),
              exact_unitary(prod) == diag_gamma(g, m));
    // The nearest-neighbor wave lands with reversed dit order.
    auto want = exact_mul(rev, diag_gamma(g, m));
    Circuit wave = synth_diag(g, opt.p, opt.n);
    rec.exact("diag-wave" + detail::tag({g}),
              want.has_value() && exact_unitary(wave) == *want);
  }
  return rec.done();
}

// Depth/cost formulas for the nearest-neighbor schedules and the
// elementary-gate estimator table.
inline SuiteReport verify_metrics(const SuiteOptions& opt = {}) {
  detail::require_odd("metrics", opt.p);
  detail::Recorder rec("metrics");
  const i64 p = opt.p, n = opt.n;

  Metrics qft = circuit_metrics(synth_qft(p, static_cast<int>(n)));
  rec.exact("qft-depth", qft.depth == 2 * n - 1);
  rec.exact("qft-cost", qft.cost == n * (n + 1) / 2);

  Metrics mul = circuit_metrics(synth_modmulc(2, p, static_cast<int>(n)));
  rec.exact("modmulc-depth", mul.depth == 4 * n - 1);
  rec.exact("modmulc-cost", mul.cost == n * (n + 1));

  if (n >= 2) {
    Metrics dia = circuit_metrics(synth_diag(1, p, static_cast<int>(n)));
    rec.exact("diag-depth", dia.depth == 2 * n - 3);
    rec.exact("diag-cost", dia.cost == (n * n + 1) / 2);
  }

  SO2Element g0 = find_generator(Modulus(p, static_cast<int>(n)));
  Metrics frac =
      circuit_metrics(synth_qafrft(g0.a, g0.b, p, static_cast<int>(n)));
  rec.exact("qafrft-depth-bound", frac.depth <= 4 * n + 3);

  auto estimate_case = [&](const std::string& id, EstimateKind kind, i64 cost,
                           i64 depth) {
    Metrics est = elementary_estimates(kind, p, static_cast<int>(n));
    rec.exact(id, est.elementary_cost == cost &&
                      est.elementary_depth == depth && est.width == n &&
                      est.approximate);
  };
  estimate_case("estimate-qafrft", EstimateKind::Qafrft, 6 * p * p * n * n,
                16 * p * p * n);
  estimate_case("estimate-mqft", EstimateKind::Mqft, 2 * p * p * n * n,
                8 * p * p * n);
  estimate_case("estimate-modmulc", EstimateKind::Modmulc, 4 * p * p * n * n,
                16 * p * p * n);
  estimate_case("estimate-diag", EstimateKind::Diag, 2 * p * p * n * n,
                8 * p * p * n);
  return rec.done();
}

// Named dispatch used by the CLI; "all" aggregates every suite at the
// given parameters with suite-prefixed case ids.
inline SuiteReport run_suite(const std::string& name,
                             const SuiteOptions& opt = {}) {
  if (name == "appendix-a") return verify_appendix_a(opt);
  if (name == "magnetic") return verify_magnetic(opt);
  if (name == "covariance") return verify_covariance(opt);
  if (name == "roots") return verify_roots(opt);
  if (name == "circuits") return verify_circuits(opt);
  if (name == "metrics") return verify_metrics(opt);
  if (name == "all") {
    detail::Recorder rec("all");
    for (const char* sub : {"appendix-a", "magnetic", "covariance", "roots",
                            "circuits", "metrics"}) {
      SuiteReport r = run_suite(sub, opt);
      rec.rep.cases += r.cases;
      rec.rep.max_residual = std::max(rec.rep.max_residual, r.max_residual);
      for (const std::string& f : r.failures)
        rec.rep.failures.push_back(std::string(sub) + ":" + f);
    }
    return rec.done();
  }
  throw IndexRange("unknown verification suite '" + name + "'");
}

}  // namespace afrft
