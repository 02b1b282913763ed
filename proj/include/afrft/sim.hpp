#pragma once

// Dense statevector simulator.  Gates act through stride arithmetic over the
// p-ary index decomposition (no full-matrix tensor expansion), keeping
// dimensions up to the default cap interactive.  Wire 0 is the least
// significant dit.

#include <cmath>
#include <complex>
#include <vector>

#include "afrft/circuit.hpp"
#include "afrft/errors.hpp"
#include "afrft/matrix.hpp"
#include "afrft/modnum.hpp"

namespace afrft {

struct StateVector {
  i64 p = 2;
  int n = 1;
  Eigen::VectorXcd amps;

  i64 dim() const { return detail::pow_i64(p, n); }
};

inline StateVector basis_state(i64 p, int n, i64 k) {
  Modulus m(p, n);
  if (k < 0 || k >= m.N)
    throw IndexRange("basis index " + std::to_string(k) +
                     " outside [0, " + std::to_string(m.N) + ")");
  StateVector psi;
  psi.p = p;
  psi.n = n;
  psi.amps = Eigen::VectorXcd::Zero(m.N);
  psi.amps(k) = 1.0;
  return psi;
}

namespace detail {

inline Cplx unit_phase(i64 e, i64 grid) {
  return std::polar(1.0, 2.0 * M_PI * static_cast<double>(e) /
                             static_cast<double>(grid));
}

}  // namespace detail

// Apply one gate in place.  Diagonal kinds multiply phases, permutation
// kinds move amplitudes within each wire fiber, and the Hadamard performs
// the p-point transform fiber by fiber.
inline void apply_gate(StateVector& psi, const Gate& g) {
  const i64 p = psi.p;
  const i64 N = psi.dim();
  switch (g.kind) {
    case GateKind::Hadamard: {
      const i64 s = detail::pow_i64(p, static_cast<int>(g.wires[0]));
      const double scale = 1.0 / std::sqrt(static_cast<double>(p));
      std::vector<Cplx> fiber(static_cast<std::size_t>(p));
      for (i64 x = 0; x < N; ++x) {
        if ((x / s) % p != 0) continue;
        for (i64 d = 0; d < p; ++d)
          fiber[static_cast<std::size_t>(d)] = psi.amps(x + d * s);
        for (i64 e = 0; e < p; ++e) {
          Cplx acc = 0;
          for (i64 d = 0; d < p; ++d)
            acc += detail::unit_phase(e * d % p, p) *
                   fiber[static_cast<std::size_t>(d)];
          psi.amps(x + e * s) = scale * acc;
        }
      }
      return;
    }
    case GateKind::Perm: {
      const i64 s = detail::pow_i64(p, static_cast<int>(g.wires[0]));
      std::vector<Cplx> fiber(static_cast<std::size_t>(p));
      for (i64 x = 0; x < N; ++x) {
        if ((x / s) % p != 0) continue;
        for (i64 d = 0; d < p; ++d)
          fiber[static_cast<std::size_t>(d)] = psi.amps(x + d * s);
        for (i64 d = 0; d < p; ++d)
          psi.amps(x + (g.mu * d % p) * s) = fiber[static_cast<std::size_t>(d)];
      }
      return;
    }
    case GateKind::RkSingle: {
      const i64 s = detail::pow_i64(p, static_cast<int>(g.wires[0]));
      const i64 grid = detail::pow_i64(p, g.k);
      for (i64 x = 0; x < N; ++x) {
        i64 d = (x / s) % p;
        psi.amps(x) *= detail::unit_phase(g.mult * d * d % grid, grid);
      }
      return;
    }
    case GateKind::RkTwo:
    case GateKind::Sk: {
      const i64 s1 = detail::pow_i64(p, static_cast<int>(g.wires[0]));
      const i64 s2 = detail::pow_i64(p, static_cast<int>(g.wires[1]));
      const i64 grid = detail::pow_i64(p, g.k);
      const i64 f = g.kind == GateKind::Sk ? 2 : 1;
      for (i64 x = 0; x < N; ++x) {
        i64 d1 = (x / s1) % p, d2 = (x / s2) % p;
        psi.amps(x) *=
            detail::unit_phase(f * g.mult % grid * d1 % grid * d2 % grid, grid);
      }
      return;
    }
    case GateKind::Swap: {
      const i64 s1 = detail::pow_i64(p, static_cast<int>(g.wires[0]));
      const i64 s2 = detail::pow_i64(p, static_cast<int>(g.wires[1]));
      for (i64 x = 0; x < N; ++x) {
        i64 d1 = (x / s1) % p, d2 = (x / s2) % p;
        if (d1 >= d2) continue;
        i64 y = x + (d2 - d1) * s1 + (d1 - d2) * s2;
        std::swap(psi.amps(x), psi.amps(y));
      }
      return;
    }
  }
  throw InvalidGate("unknown gate kind");
}

// Run the whole circuit on a copy of the state, layer by layer.
inline StateVector run(const Circuit& c, StateVector psi,
                       i64 dim_cap = kDefaultDimCap) {
  validate_circuit(c);
  if (psi.p != c.p || psi.n != c.n)
    throw DimensionMismatch("state is " + std::to_string(psi.p) + "^" +
                            std::to_string(psi.n) + ", circuit wants " +
                            std::to_string(c.p) + "^" + std::to_string(c.n));
  if (psi.amps.size() != psi.dim())
    throw DimensionMismatch("state length does not match its declared shape");
  if (c.dim() > dim_cap)
    throw DimensionCap("dimension " + std::to_string(c.dim()) +
                       " exceeds cap " + std::to_string(dim_cap));
  for (const Layer& layer : c.layers)
    for (const Gate& g : layer) apply_gate(psi, g);
  return psi;
}

}  // namespace afrft
