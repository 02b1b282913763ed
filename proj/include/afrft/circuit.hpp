#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "afrft/matrix.hpp"
#include "afrft/modnum.hpp"

namespace afrft {

// Gate alphabet over p-dit wires. Phase gates carry a precision k and act
// by omega_{p^k} powers; Perm is the classical multiply-by-mu map on one
// dit; Swap exchanges two wires.
enum class GateKind { Hadamard, RkTwo, RkSingle, Sk, Perm, Swap };

inline const char* kind_name(GateKind k) {
  switch (k) {
    case GateKind::Hadamard: return "H";
    case GateKind::RkTwo: return "Rk2";
    case GateKind::RkSingle: return "Rk1";
    case GateKind::Sk: return "Sk";
    case GateKind::Perm: return "Perm";
    case GateKind::Swap: return "SWAP";
  }
  return "?";
}

struct Gate {
  GateKind kind = GateKind::Hadamard;
  std::vector<i64> wires;
  int k = 0;     // phase precision: acts mod p^k
  i64 mult = 1;  // phase multiplier, reduced mod p^k
  i64 mu = 1;    // Perm multiplier, in [1, p)

  friend bool operator==(const Gate&, const Gate&) = default;
};

inline Gate gate_h(i64 w) { return Gate{GateKind::Hadamard, {w}, 0, 1, 1}; }
inline Gate gate_rk1(int k, i64 w, i64 mult) {
  return Gate{GateKind::RkSingle, {w}, k, mult, 1};
}
inline Gate gate_rk2(int k, i64 w1, i64 w2, i64 mult) {
  return Gate{GateKind::RkTwo, {w1, w2}, k, mult, 1};
}
inline Gate gate_sk(int k, i64 w1, i64 w2, i64 mult) {
  return Gate{GateKind::Sk, {w1, w2}, k, mult, 1};
}
inline Gate gate_perm(i64 mu, i64 w) { return Gate{GateKind::Perm, {w}, 0, 1, mu}; }
inline Gate gate_swap(i64 w1, i64 w2) {
  return Gate{GateKind::Swap, {w1, w2}, 0, 1, 1};
}

using Layer = std::vector<Gate>;

// Layered circuit on n wires of a p-dit register; wire 0 is the least
// significant dit. msq_in / msq_out name the wire holding the most
// significant dit at the boundary (wire-reversing networks differ).
struct Circuit {
  i64 p = 2;
  int n = 1;
  bool lnn = true;
  i64 msq_in = 0;
  i64 msq_out = 0;
  std::vector<Layer> layers;

  i64 dim() const {
    i64 d = 1;
    for (int i = 0; i < n; ++i) d *= p;
    return d;
  }

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

inline constexpr i64 kDefaultDimCap = 59049;

namespace detail {

inline i64 pow_i64(i64 b, int e) {
  i64 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline i64 digit(i64 x, i64 stride, i64 p) { return (x / stride) % p; }

}  // namespace detail

// Structural well-formedness: wire ranges, per-kind arity and parameter
// domains, and the layering invariant that simultaneous gates form
// interaction groups spanning at most two distinct wires, pairwise disjoint.
inline void validate_circuit(const Circuit& c) {
  if (c.p < 2 || !is_prime(c.p))
    throw InvalidModulus("circuit base " + std::to_string(c.p) +
                         " is not prime");
  if (c.n < 1) throw InvalidModulus("circuit needs at least one wire");
  Modulus grid(c.p, c.n);  // also enforces the representable-size bound
  if (c.msq_in < 0 || c.msq_in >= c.n || c.msq_out < 0 || c.msq_out >= c.n)
    throw InvalidGate("msq wire out of range");
  for (size_t t = 0; t < c.layers.size(); ++t) {
    std::vector<int> gid(static_cast<size_t>(c.n), -1);
    std::vector<std::vector<i64>> members;
    for (const Gate& g : c.layers[t]) {
      bool two_wire = g.kind == GateKind::RkTwo || g.kind == GateKind::Sk ||
                      g.kind == GateKind::Swap;
      std::string where = std::string(kind_name(g.kind)) + " in layer " +
                          std::to_string(t);
      if (g.wires.size() != (two_wire ? 2u : 1u))
        throw InvalidGate(where + ": wrong wire count");
      for (i64 w : g.wires)
        if (w < 0 || w >= c.n)
          throw InvalidGate(where + ": wire " + std::to_string(w) +
                            " out of range");
      if (two_wire && g.wires[0] == g.wires[1])
        throw InvalidGate(where + ": wires must be distinct");
      bool phase = g.kind == GateKind::RkTwo || g.kind == GateKind::RkSingle ||
                   g.kind == GateKind::Sk;
      if (phase) {
        if (g.k < 1 || g.k > c.n)
          throw InvalidGate(where + ": precision k out of range");
        i64 pk = detail::pow_i64(c.p, g.k);
        if (g.mult < 0 || g.mult >= pk)
          throw InvalidGate(where + ": mult outside [0, p^k)");
      }
      if (g.kind == GateKind::Perm && (g.mu < 1 || g.mu >= c.p))
        throw InvalidGate(where + ": mu outside [1, p)");
      // interaction-group bookkeeping
      int tag = -1;
      for (i64 w : g.wires)
        if (gid[static_cast<size_t>(w)] >= 0) {
          int t2 = gid[static_cast<size_t>(w)];
          if (tag >= 0 && tag != t2) {
            // merge groups t2 into tag
            for (i64 mw : members[static_cast<size_t>(t2)]) {
              gid[static_cast<size_t>(mw)] = tag;
              members[static_cast<size_t>(tag)].push_back(mw);
            }
            members[static_cast<size_t>(t2)].clear();
          } else {
            tag = t2;
          }
        }
      if (tag < 0) {
        tag = static_cast<int>(members.size());
        members.emplace_back();
      }
      for (i64 w : g.wires)
        if (gid[static_cast<size_t>(w)] != tag) {
          gid[static_cast<size_t>(w)] = tag;
          members[static_cast<size_t>(tag)].push_back(w);
        }
      if (members[static_cast<size_t>(tag)].size() > 2)
        throw InvalidGate("layer " + std::to_string(t) +
                          ": interaction group spans more than two wires");
    }
  }
  (void)grid;
}

// Standalone block matrix of one gate, with phases expressed in the root
// grid omega_{p^m}; m defaults to the gate's own precision (1 for the
// non-phase kinds) and may be raised to embed into a larger grid.
inline ExactPhaseMatrix gate_unitary(const Gate& g, i64 p, int grid_exp = -1) {
  if (p < 2 || !is_prime(p))
    throw InvalidModulus("gate base " + std::to_string(p) + " is not prime");
  bool phase = g.kind == GateKind::RkTwo || g.kind == GateKind::RkSingle ||
               g.kind == GateKind::Sk;
  int k = phase ? g.k : 1;
  if (phase && k < 1) throw InvalidGate("phase gate needs k >= 1");
  int m = grid_exp < 0 ? k : grid_exp;
  if (m < k)
    throw InvalidGate("root grid p^" + std::to_string(m) +
                      " too coarse for precision k = " + std::to_string(k));
  Modulus grid(p, m);
  i64 shift = grid.N / detail::pow_i64(p, k);  // p^{m-k}
  switch (g.kind) {
    case GateKind::Hadamard: {
      ExactPhaseMatrix M = ExactPhaseMatrix::zeros(p, grid);
      M.scale_s = 1;
      i64 unit = grid.N / p;
      for (i64 r = 0; r < p; ++r)
        for (i64 c = 0; c < p; ++c)
          M.at(r, c) = static_cast<std::int32_t>(r * c % p * unit);
      return M;
    }
    case GateKind::Perm: {
      if (g.mu < 1 || g.mu >= p) throw InvalidGate("Perm mu outside [1, p)");
      ExactPhaseMatrix M = ExactPhaseMatrix::zeros(p, grid);
      for (i64 x = 0; x < p; ++x) M.at(g.mu * x % p, x) = 0;
      return M;
    }
    case GateKind::Swap: {
      ExactPhaseMatrix M = ExactPhaseMatrix::zeros(p * p, grid);
      for (i64 a = 0; a < p; ++a)
        for (i64 b = 0; b < p; ++b) M.at(b * p + a, a * p + b) = 0;
      return M;
    }
    case GateKind::RkSingle: {
      ExactPhaseMatrix M = ExactPhaseMatrix::zeros(p, grid);
      i64 pk = detail::pow_i64(p, k);
      for (i64 x = 0; x < p; ++x)
        M.at(x, x) = static_cast<std::int32_t>(g.mult * x % pk * x % pk * shift);
      return M;
    }
    case GateKind::RkTwo:
    case GateKind::Sk: {
      ExactPhaseMatrix M = ExactPhaseMatrix::zeros(p * p, grid);
      i64 pk = detail::pow_i64(p, k);
      i64 f = g.kind == GateKind::Sk ? 2 : 1;
      for (i64 a = 0; a < p; ++a)
        for (i64 b = 0; b < p; ++b)
          M.at(a * p + b, a * p + b) =
              static_cast<std::int32_t>(f * g.mult % pk * a % pk * b % pk * shift);
      return M;
    }
  }
  throw InvalidGate("unknown gate kind");
}

namespace detail {

// Phase picked up by basis state x under a diagonal gate, expressed in the
// full register grid p^n.
inline i64 diag_phase(const Gate& g, i64 x, i64 p, const Modulus& grid) {
  i64 pk = pow_i64(p, g.k);
  i64 unit = grid.N / pk;
  if (g.kind == GateKind::RkSingle) {
    i64 d = digit(x, pow_i64(p, static_cast<int>(g.wires[0])), p);
    return g.mult * d % pk * d % pk * unit;
  }
  i64 d1 = digit(x, pow_i64(p, static_cast<int>(g.wires[0])), p);
  i64 d2 = digit(x, pow_i64(p, static_cast<int>(g.wires[1])), p);
  i64 f = g.kind == GateKind::Sk ? 2 : 1;
  return f * g.mult % pk * d1 % pk * d2 % pk * unit;
}

// Row index after the classical permutation of Perm / Swap.
inline i64 perm_dest(const Gate& g, i64 x, i64 p) {
  if (g.kind == GateKind::Perm) {
    i64 s = pow_i64(p, static_cast<int>(g.wires[0]));
    i64 d = digit(x, s, p);
    return x + (g.mu * d % p - d) * s;
  }
  i64 s1 = pow_i64(p, static_cast<int>(g.wires[0]));
  i64 s2 = pow_i64(p, static_cast<int>(g.wires[1]));
  i64 d1 = digit(x, s1, p), d2 = digit(x, s2, p);
  return x + (d2 - d1) * s1 + (d1 - d2) * s2;
}

// Collapse a gathered sum of at most p unit roots (exponents mod N) to
// c * omega^e. Complete over prime-power root orders: the only vanishing
// subsets are full p-orbits {f, f+q, .., f+(p-1)q}, so with <= p terms the
// outcomes are: empty, all terms equal (c = multiplicity), one full orbit
// (zero), or irreducible.
inline std::optional<CollapseResult> collapse_small(std::vector<i64>& terms,
                                                    const Modulus& grid) {
  if (terms.empty()) return CollapseResult{0, 0};
  std::sort(terms.begin(), terms.end());
  if (terms.front() == terms.back())
    return CollapseResult{static_cast<i64>(terms.size()), terms.front()};
  if (static_cast<i64>(terms.size()) == grid.p) {
    i64 q = grid.N / grid.p;
    bool orbit = true;
    for (size_t t = 1; t < terms.size() && orbit; ++t)
      orbit = terms[t] == terms[0] + static_cast<i64>(t) * q;
    if (orbit) return CollapseResult{0, 0};
  }
  return std::nullopt;
}

// One in-place exact fold step P <- U_g * P. Hadamard is the only kind that
// can fail (irreducible root sums); everything else always succeeds.
inline bool fold_gate_exact(ExactPhaseMatrix& P, const Gate& g, i64 p,
                            const Modulus& grid) {
  const i64 N = grid.N;
  switch (g.kind) {
    case GateKind::RkSingle:
    case GateKind::RkTwo:
    case GateKind::Sk: {
      for (i64 x = 0; x < N; ++x) {
        i64 t = diag_phase(g, x, p, grid);
        if (t == 0) continue;
        std::int32_t* row = &P.e[static_cast<size_t>(x) * N];
        for (i64 l = 0; l < N; ++l)
          if (row[l] != ExactPhaseMatrix::kZero)
            row[l] = static_cast<std::int32_t>((row[l] + t) % N);
      }
      return true;
    }
    case GateKind::Perm:
    case GateKind::Swap: {
      std::vector<std::int32_t> out(P.e.size());
      for (i64 x = 0; x < N; ++x) {
        i64 y = perm_dest(g, x, p);
        std::copy_n(P.e.begin() + static_cast<size_t>(x) * N, N,
                    out.begin() + static_cast<size_t>(y) * N);
      }
      P.e.swap(out);
      return true;
    }
    case GateKind::Hadamard: {
      i64 s = pow_i64(p, static_cast<int>(g.wires[0]));
      i64 unit = N / p;  // omega_p in the full grid
      std::vector<std::int32_t> out(P.e.size(), ExactPhaseMatrix::kZero);
      i64 global_c = 0;
      std::vector<i64> terms;
      terms.reserve(static_cast<size_t>(p));
      for (i64 x = 0; x < N; ++x) {
        if (digit(x, s, p) != 0) continue;  // enumerate bases once
        for (i64 l = 0; l < N; ++l) {
          bool any = false;
          for (i64 d = 0; d < p && !any; ++d)
            any = P.at(x + d * s, l) != ExactPhaseMatrix::kZero;
          if (!any) continue;
          for (i64 c = 0; c < p; ++c) {
            terms.clear();
            for (i64 d = 0; d < p; ++d) {
              std::int32_t e = P.at(x + d * s, l);
              if (e != ExactPhaseMatrix::kZero)
                terms.push_back((e + c * d % p * unit) % N);
            }
            auto col = collapse_small(terms, grid);
            if (!col) return false;
            if (col->coeff == 0) continue;
            if (global_c == 0)
              global_c = col->coeff;
            else if (global_c != col->coeff)
              return false;
            out[static_cast<size_t>(x + c * s) * N + l] =
                static_cast<std::int32_t>(col->expo);
          }
        }
      }
      if (global_c == 0) global_c = 1;
      int two_j = 0;
      while (global_c % p == 0) {
        global_c /= p;
        two_j += 2;
      }
      if (global_c != 1) return false;
      P.e.swap(out);
      P.scale_s += 1 - two_j;
      return true;
    }
  }
  return false;
}

}  // namespace detail

// Exact circuit unitary, or nullopt when some partial product leaves the
// single-root entry class even after stash-and-recombine.
inline std::optional<ExactPhaseMatrix> circuit_unitary_exact(
    const Circuit& c, i64 cap = kDefaultDimCap) {
  validate_circuit(c);
  Modulus grid(c.p, c.n);
  if (grid.N > cap)
    throw DimensionCap("dimension " + std::to_string(grid.N) +
                       " exceeds the cap " + std::to_string(cap));
  ExactPhaseMatrix P = ExactPhaseMatrix::identity(grid.N, grid);
  std::vector<ExactPhaseMatrix> stash;
  for (const Layer& layer : c.layers)
    for (const Gate& g : layer)
      if (!detail::fold_gate_exact(P, g, c.p, grid)) {
        stash.push_back(std::move(P));
        P = ExactPhaseMatrix::identity(grid.N, grid);
        if (!detail::fold_gate_exact(P, g, c.p, grid)) return std::nullopt;
      }
  for (auto it = stash.rbegin(); it != stash.rend(); ++it) {
    auto m = exact_mul(P, *it);
    if (!m) return std::nullopt;
    P = std::move(*m);
  }
  return P;
}

// Dense fold; always succeeds (within float tolerance).
inline DenseMatrix circuit_unitary_dense(const Circuit& c,
                                         i64 cap = kDefaultDimCap) {
  validate_circuit(c);
  Modulus grid(c.p, c.n);
  if (grid.N > cap)
    throw DimensionCap("dimension " + std::to_string(grid.N) +
                       " exceeds the cap " + std::to_string(cap));
  const i64 N = grid.N, p = c.p;
  DenseMatrix U = DenseMatrix::Identity(N, N);
  std::vector<Cplx> roots(static_cast<size_t>(N));
  for (i64 t = 0; t < N; ++t)
    roots[static_cast<size_t>(t)] = std::polar(
        1.0, 2.0 * M_PI * static_cast<double>(t) / static_cast<double>(N));
  for (const Layer& layer : c.layers)
    for (const Gate& g : layer) {
      switch (g.kind) {
        case GateKind::RkSingle:
        case GateKind::RkTwo:
        case GateKind::Sk:
          for (i64 x = 0; x < N; ++x) {
            i64 t = detail::diag_phase(g, x, p, grid);
            if (t) U.row(x) *= roots[static_cast<size_t>(t)];
          }
          break;
        case GateKind::Perm:
        case GateKind::Swap: {
          DenseMatrix V(N, N);
          for (i64 x = 0; x < N; ++x)
            V.row(detail::perm_dest(g, x, p)) = U.row(x);
          U = std::move(V);
          break;
        }
        case GateKind::Hadamard: {
          i64 s = detail::pow_i64(p, static_cast<int>(g.wires[0]));
          double inv = 1.0 / std::sqrt(static_cast<double>(p));
          i64 unit = N / p;
          DenseMatrix V = DenseMatrix::Zero(N, N);
          for (i64 x = 0; x < N; ++x) {
            if (detail::digit(x, s, p) != 0) continue;
            for (i64 cdig = 0; cdig < p; ++cdig)
              for (i64 d = 0; d < p; ++d)
                V.row(x + cdig * s) +=
                    inv * roots[static_cast<size_t>(cdig * d % p * unit)] *
                    U.row(x + d * s);
          }
          U = std::move(V);
          break;
        }
      }
    }
  return U;
}

// Preferred entry point: exact when representable, dense otherwise.
inline DenseMatrix circuit_unitary(const Circuit& c, i64 cap = kDefaultDimCap) {
  if (auto ex = circuit_unitary_exact(c, cap)) return to_dense(*ex);
  return circuit_unitary_dense(c, cap);
}

// Inverse network in the same gate alphabet. Layers and in-layer order
// reverse; phase gates negate their multiplier; Perm inverts mu; the
// Hadamard (self-inverse up to the parity map) re-emits itself followed by
// the parity Perm, which rides forward to the front of the next layer
// touching that wire (a trailing layer collects any that never land).
// For p = 2 the parity map is the identity and is elided.
inline Circuit circuit_inverse(const Circuit& c) {
  validate_circuit(c);
  Circuit inv;
  inv.p = c.p;
  inv.n = c.n;
  inv.lnn = c.lnn;
  inv.msq_in = c.msq_out;
  inv.msq_out = c.msq_in;
  struct Item {
    bool parity = false;
    i64 wire = 0;
    Gate g;
  };
  std::vector<std::vector<Item>> staged;
  for (auto lt = c.layers.rbegin(); lt != c.layers.rend(); ++lt) {
    std::vector<Item> nl;
    for (auto gt = lt->rbegin(); gt != lt->rend(); ++gt) {
      const Gate& g = *gt;
      switch (g.kind) {
        case GateKind::Hadamard:
          nl.push_back({false, 0, g});
          if (c.p != 2) nl.push_back({true, g.wires[0], Gate{}});
          break;
        case GateKind::Perm:
          nl.push_back({false, 0, gate_perm(mod_inv(g.mu, Modulus(c.p, 1)),
                                            g.wires[0])});
          break;
        case GateKind::Swap:
          nl.push_back({false, 0, g});
          break;
        default: {
          Gate g2 = g;
          i64 pk = detail::pow_i64(c.p, g.k);
          g2.mult = (pk - g.mult % pk) % pk;
          nl.push_back({false, 0, g2});
          break;
        }
      }
    }
    staged.push_back(std::move(nl));
  }
  std::vector<Layer> out(staged.size());
  std::vector<i64> carries;
  for (size_t i = 0; i < staged.size(); ++i) {
    std::vector<i64> fresh;
    for (Item& item : staged[i]) {
      if (item.parity)
        fresh.push_back(item.wire);
      else
        out[i].push_back(std::move(item.g));
    }
    for (size_t ci = 0; ci < carries.size();) {
      i64 w = carries[ci];
      bool touches = false;
      for (const Gate& g : out[i])
        for (i64 gw : g.wires) touches = touches || gw == w;
      if (touches) {
        out[i].insert(out[i].begin(), gate_perm(c.p - 1, w));
        carries.erase(carries.begin() + static_cast<std::ptrdiff_t>(ci));
      } else {
        ++ci;
      }
    }
    carries.insert(carries.end(), fresh.begin(), fresh.end());
  }
  for (Layer& l : out)
    if (!l.empty()) inv.layers.push_back(std::move(l));
  if (!carries.empty()) {
    Layer last;
    for (i64 w : carries) last.push_back(gate_perm(c.p - 1, w));
    inv.layers.push_back(std::move(last));
  }
  return inv;
}

// Canonical gate order inside each layer: stable sort by lowest touched
// wire. Stability keeps the temporal order within an interaction group.
inline Circuit canonicalize(Circuit c) {
  for (Layer& layer : c.layers)
    std::stable_sort(layer.begin(), layer.end(),
                     [](const Gate& a, const Gate& b) {
                       return *std::min_element(a.wires.begin(), a.wires.end()) <
                              *std::min_element(b.wires.begin(), b.wires.end());
                     });
  return c;
}

// Depth = layer count. Cost counts H and rotations at 1; Perm is free; a
// Swap is free exactly when a rotation on the same wire pair shares its
// layer (the pair merges into one two-dit primitive).
struct Metrics {
  i64 depth = 0;
  i64 cost = 0;
  i64 width = 0;
  i64 perm_count = 0;
  i64 elementary_cost = 0;
  i64 elementary_depth = 0;
  bool approximate = true;  // elementary figures are order-of-magnitude
};

inline Metrics circuit_metrics(const Circuit& c) {
  validate_circuit(c);
  Metrics m;
  m.depth = static_cast<i64>(c.layers.size());
  m.width = c.n;
  for (const Layer& layer : c.layers) {
    std::vector<std::pair<i64, i64>> rot_pairs;
    for (const Gate& g : layer)
      if (g.kind == GateKind::RkTwo || g.kind == GateKind::Sk)
        rot_pairs.emplace_back(std::min(g.wires[0], g.wires[1]),
                               std::max(g.wires[0], g.wires[1]));
    for (const Gate& g : layer) {
      switch (g.kind) {
        case GateKind::Hadamard:
        case GateKind::RkSingle:
        case GateKind::RkTwo:
        case GateKind::Sk:
          ++m.cost;
          break;
        case GateKind::Perm:
          ++m.perm_count;
          break;
        case GateKind::Swap: {
          std::pair<i64, i64> key{std::min(g.wires[0], g.wires[1]),
                                  std::max(g.wires[0], g.wires[1])};
          if (std::find(rot_pairs.begin(), rot_pairs.end(), key) ==
              rot_pairs.end())
            ++m.cost;
          break;
        }
      }
    }
  }
  m.elementary_cost = 4 * c.p * c.p * m.cost + c.p * m.perm_count;
  m.elementary_depth = 4 * c.p * c.p * m.depth;
  return m;
}

}  // namespace afrft
