#include "afrft/sim.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "afrft/synth.hpp"
#include "afrft/weil.hpp"

namespace afrft {
namespace {

Cplx root(i64 e, i64 N) {
  return std::polar(1.0, 2.0 * M_PI * static_cast<double>(e) /
                             static_cast<double>(N));
}

// Deterministic normalized state with no zero amplitudes.
StateVector probe_state(i64 p, int n) {
  StateVector psi = basis_state(p, n, 0);
  for (i64 k = 0; k < psi.dim(); ++k)
    psi.amps(k) = std::polar(1.0 + 0.1 * static_cast<double>(k),
                             0.37 * static_cast<double>(k));
  psi.amps.normalize();
  return psi;
}

double column_gap(const StateVector& psi, const DenseMatrix& U, i64 col) {
  double worst = 0.0;
  for (i64 r = 0; r < psi.dim(); ++r)
    worst = std::max(worst, std::abs(psi.amps(r) - U(r, col)));
  return worst;
}

TEST(BasisState, PinnedIndexAndDigits) {
  StateVector psi = basis_state(3, 2, 4);  // dits (1,1)
  EXPECT_EQ(psi.dim(), 9);
  for (i64 k = 0; k < 9; ++k)
    EXPECT_EQ(psi.amps(k), k == 4 ? Cplx(1.0) : Cplx(0.0));
}

TEST(BasisState, RejectsOutOfRangeIndex) {
  EXPECT_THROW(basis_state(3, 2, 9), IndexRange);
  EXPECT_THROW(basis_state(3, 2, -1), IndexRange);
  EXPECT_NO_THROW(basis_state(3, 2, 0));
}

TEST(SingleGate, HadamardSpreadsUniformly) {
  StateVector psi = basis_state(3, 1, 0);
  apply_gate(psi, gate_h(0));
  for (i64 k = 0; k < 3; ++k)
    EXPECT_NEAR(std::abs(psi.amps(k) - Cplx(1.0 / std::sqrt(3.0))), 0.0,
                1e-12);

  // On wire 1 of a two-dit register only the high dit spreads.
  StateVector phi = basis_state(3, 2, 0);
  apply_gate(phi, gate_h(1));
  for (i64 k = 0; k < 9; ++k) {
    Cplx want = (k % 3 == 0) ? Cplx(1.0 / std::sqrt(3.0)) : Cplx(0.0);
    EXPECT_NEAR(std::abs(phi.amps(k) - want), 0.0, 1e-12);
  }
}

TEST(SingleGate, PermRelabelsDigits) {
  StateVector psi = basis_state(5, 1, 3);
  apply_gate(psi, gate_perm(2, 0));  // |d> -> |2d mod 5>, so |3> -> |1>
  EXPECT_NEAR(std::abs(psi.amps(1) - Cplx(1.0)), 0.0, 1e-15);
  EXPECT_NEAR(psi.amps.norm(), 1.0, 1e-15);
}

TEST(SingleGate, PairRotationPhases) {
  StateVector psi = basis_state(3, 2, 4);  // |1,1>
  apply_gate(psi, gate_rk2(1, 0, 1, 1));
  EXPECT_NEAR(std::abs(psi.amps(4) - root(1, 3)), 0.0, 1e-12);

  StateVector phi = basis_state(3, 2, 4);
  apply_gate(phi, gate_sk(1, 0, 1, 1));  // doubled exponent
  EXPECT_NEAR(std::abs(phi.amps(4) - root(2, 3)), 0.0, 1e-12);

  StateVector rho = basis_state(3, 2, 4);
  apply_gate(rho, gate_rk1(2, 0, 2));  // omega_9^{2*1*1}
  EXPECT_NEAR(std::abs(rho.amps(4) - root(2, 9)), 0.0, 1e-12);
}

TEST(SingleGate, SwapExchangesWires) {
  StateVector psi = basis_state(3, 2, 1);  // dits (d0,d1) = (1,0)
  apply_gate(psi, gate_swap(0, 1));
  EXPECT_NEAR(std::abs(psi.amps(3) - Cplx(1.0)), 0.0, 1e-15);

  // Involution on a generic state.
  StateVector phi = probe_state(3, 2);
  StateVector chi = phi;
  apply_gate(chi, gate_swap(0, 1));
  apply_gate(chi, gate_swap(1, 0));
  EXPECT_NEAR((chi.amps - phi.amps).norm(), 0.0, 1e-12);
}

TEST(Run, MultiplierPermutesBasis) {
  Circuit c = synth_modmulc(6, 11, 1);
  StateVector out = run(c, basis_state(11, 1, 2));
  EXPECT_NEAR(std::abs(out.amps(1) - Cplx(1.0)), 0.0, 1e-10);  // 6*2 = 12 = 1
  for (i64 x = 0; x < 11; ++x) {
    StateVector y = run(c, basis_state(11, 1, x));
    EXPECT_NEAR(std::abs(y.amps(6 * x % 11) - Cplx(1.0)), 0.0, 1e-10);
  }
}

TEST(Run, EmptyCircuitIsIdentity) {
  Circuit c;
  c.p = 3;
  c.n = 2;
  c.msq_in = 1;
  c.msq_out = 1;
  StateVector psi = probe_state(3, 2);
  StateVector out = run(c, psi);
  EXPECT_NEAR((out.amps - psi.amps).norm(), 0.0, 0.0);
}

TEST(Run, FractionalColumnPinned) {
  // First column of the fractional transform for the order-12 generator
  // at N = 11, frozen as explicit root powers.
  const i64 pins[11] = {0, 8, 10, 6, 7, 2, 2, 7, 6, 10, 8};
  StateVector out = run(synth_qafrft(3, -5, 11, 1), basis_state(11, 1, 0));
  const double s = 1.0 / std::sqrt(11.0);
  for (i64 r = 0; r < 11; ++r)
    EXPECT_NEAR(std::abs(out.amps(r) - s * root(pins[r], 11)), 0.0, 1e-10)
        << "row " << r;

  Modulus m(11, 1);
  DenseMatrix U = to_dense(afrft_matrix(3, m.reduce(-5), m));
  EXPECT_LT(column_gap(out, U, 0), 1e-10);
}

TEST(Run, ColumnsMatchCircuitUnitary) {
  std::vector<Circuit> circuits;
  circuits.push_back(synth_qft(3, 2));
  circuits.push_back(synth_mqft(2, 3, 2, /*lnn=*/false));
  circuits.push_back(synth_diag(2, 3, 2));
  circuits.push_back(synth_modmulc(5, 2, 4));
  circuits.push_back(synth_qafrft(3, -5, 11, 1));
  {
    Modulus m(5, 2);
    SO2Element g = find_generator(m);
    circuits.push_back(synth_qafrft(g.a, g.b, 5, 2));
  }
  for (const Circuit& c : circuits) {
    DenseMatrix U = circuit_unitary(c);
    for (i64 k = 0; k < c.dim(); ++k) {
      StateVector out = run(c, basis_state(c.p, c.n, k));
      EXPECT_NEAR(out.amps.norm(), 1.0, 1e-10);
      EXPECT_LT(column_gap(out, U, k), 1e-10)
          << "p=" << c.p << " n=" << c.n << " column " << k;
    }
  }
}

TEST(Run, NormPreservedOnDeepRegister) {
  Modulus m(3, 6);  // dimension 729
  SO2Element g = find_generator(m);
  Circuit c = synth_qafrft(g.a, g.b, 3, 6);
  StateVector out = run(c, probe_state(3, 6));
  EXPECT_NEAR(out.amps.norm(), 1.0, 1e-10);
}

TEST(Run, FractionalChainClosesProjectively) {
  // The pinned generator has order 12 = 4m with m = 3: twelve applications
  // return any state up to a global phase.
  Circuit c = synth_qafrft(3, -5, 11, 1);
  StateVector psi = probe_state(11, 1);
  StateVector out = psi;
  for (int t = 0; t < 12; ++t) out = run(c, out);
  Cplx overlap = psi.amps.dot(out.amps);
  EXPECT_NEAR(std::abs(overlap), 1.0, 1e-9);

  // Three applications give the plain Fourier transform up to phase.
  StateVector three = psi;
  for (int t = 0; t < 3; ++t) three = run(c, three);
  StateVector fourier = run(synth_qft(11, 1), psi);
  Cplx cross = fourier.amps.dot(three.amps);
  EXPECT_NEAR(std::abs(cross), 1.0, 1e-9);
}

TEST(Run, ShapeAndCapErrors) {
  Circuit c = synth_qft(3, 2);
  EXPECT_THROW(run(c, basis_state(3, 3, 0)), DimensionMismatch);
  EXPECT_THROW(run(c, basis_state(5, 2, 0)), DimensionMismatch);

  StateVector bent = basis_state(3, 2, 0);
  bent.amps = Eigen::VectorXcd::Zero(8);
  EXPECT_THROW(run(c, bent), DimensionMismatch);

  EXPECT_THROW(run(c, basis_state(3, 2, 0), /*dim_cap=*/5), DimensionCap);
  EXPECT_NO_THROW(run(c, basis_state(3, 2, 0)));
}

}  // namespace
}  // namespace afrft
