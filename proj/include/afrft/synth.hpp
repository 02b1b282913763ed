#pragma once

// Circuit synthesis passes: Fourier and modified-Fourier cascades, in-place
// modular multipliers, quadratic diagonals, the fractional-Fourier block
// composition, and the widening general multiplier.  All linear-architecture
// variants use only adjacent-wire interactions; wire 0 is the least
// significant dit throughout.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "afrft/circuit.hpp"
#include "afrft/errors.hpp"
#include "afrft/modnum.hpp"
#include "afrft/sl2.hpp"

namespace afrft {

enum class InverseMode { None, Flip, Negate };
enum class InverseChoice { Direct, Flip, Negate, Reciprocal };
enum class DiagOrientation { Standard, Flipped };
enum class EstimateKind { Qafrft, Mqft, Modmulc, Diag };

// ---------------------------------------------------------------------------
// structural helpers

// Relabel every wire (and the msq annotations) through f.
inline Circuit remap_wires(const Circuit& c,
                           const std::function<i64(i64)>& f) {
  Circuit out = c;
  for (Layer& layer : out.layers)
    for (Gate& g : layer)
      for (i64& w : g.wires) w = f(w);
  out.msq_in = f(c.msq_in);
  out.msq_out = f(c.msq_out);
  return out;
}

// Left-right mirror of the circuit diagram: layer order and in-layer order
// reverse, gates are kept as-is (used for diagonal circuits, where every gate
// is self-transposing), and the dit-order annotations swap ends.
inline Circuit flip_circuit(const Circuit& c) {
  Circuit out = c;
  std::reverse(out.layers.begin(), out.layers.end());
  for (Layer& layer : out.layers) std::reverse(layer.begin(), layer.end());
  std::swap(out.msq_in, out.msq_out);
  return out;
}

namespace detail {

inline Circuit concat(const Circuit& a, const Circuit& b) {
  if (a.p != b.p || a.n != b.n)
    throw DimensionMismatch("cannot concatenate circuits of different shape");
  if (a.msq_out != b.msq_in)
    throw InvalidGate("dit-order annotations do not chain: msq_out=" +
                      std::to_string(a.msq_out) +
                      " feeds msq_in=" + std::to_string(b.msq_in));
  Circuit out = a;
  out.lnn = a.lnn && b.lnn;
  out.layers.insert(out.layers.end(), b.layers.begin(), b.layers.end());
  out.msq_out = b.msq_out;
  return out;
}

}  // namespace detail

// Greedy as-soon-as-possible re-layering.  Each layer is first split into its
// interaction groups; groups are then placed at the earliest layer where all
// their wires are free.  Per-wire gate order is preserved, so the unitary is
// unchanged while idle time between composed blocks is squeezed out.
inline Circuit asap_merge(const Circuit& c) {
  std::vector<std::vector<Gate>> groups;
  for (const Layer& layer : c.layers) {
    std::map<i64, std::size_t> used;
    std::vector<std::vector<Gate>> gs;
    for (const Gate& g : layer) {
      std::size_t tag = static_cast<std::size_t>(-1);
      for (i64 w : g.wires)
        if (auto it = used.find(w); it != used.end()) tag = it->second;
      if (tag == static_cast<std::size_t>(-1)) {
        tag = gs.size();
        gs.push_back({g});
      } else {
        gs[tag].push_back(g);
      }
      for (i64 w : g.wires) used[w] = tag;
    }
    for (auto& grp : gs) groups.push_back(std::move(grp));
  }
  std::vector<i64> avail(static_cast<std::size_t>(c.n), 0);
  std::map<i64, std::vector<std::vector<Gate>>> sched;
  for (auto& grp : groups) {
    std::set<i64> ws;
    for (const Gate& g : grp)
      for (i64 w : g.wires) ws.insert(w);
    i64 t = 0;
    for (i64 w : ws) t = std::max(t, avail[static_cast<std::size_t>(w)]);
    for (i64 w : ws) avail[static_cast<std::size_t>(w)] = t + 1;
    sched[t].push_back(std::move(grp));
  }
  Circuit out = c;
  out.layers.clear();
  for (auto& [t, grps] : sched) {
    Layer layer;
    for (auto& grp : grps)
      for (Gate& g : grp) layer.push_back(std::move(g));
    out.layers.push_back(std::move(layer));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fourier cascades

namespace detail {

// Nearest-neighbour cascade: the Hadamard always fires on the top wire at odd
// layers; the pair (n-2-j, n-1-j) carries its rotation-plus-swap at layers
// t = j+2, j+4, ..., 2(n-1)-j.  Net unitary: the (modified) Fourier matrix
// with dits in standard order at both ends.  Depth 2n-1, cost n(n+1)/2.
inline Circuit fourier_lnn(i64 p, int n, i64 lambda, bool with_perm) {
  Circuit c;
  c.p = p;
  c.n = n;
  c.lnn = true;
  c.msq_in = c.msq_out = n - 1;
  int L = 2 * n - 1;
  c.layers.assign(static_cast<std::size_t>(L), {});
  i64 top = n - 1;
  i64 mu = with_perm ? mod_inv(lambda % p, Modulus(p, 1)) : 1;
  int nh = 0;
  for (int t = 1; t <= L; ++t) {
    Layer& layer = c.layers[static_cast<std::size_t>(t - 1)];
    if (t % 2 == 1 && nh < n) {
      layer.push_back(gate_h(top));
      if (with_perm && mu != 1) layer.push_back(gate_perm(mu, top));
      ++nh;
    }
    for (int j = 0; j + 1 < n; ++j) {
      if (t >= j + 2 && t <= 2 * (n - 1) - j && (t - j) % 2 == 0) {
        int k = j + 2;
        i64 hi = n - 1 - j;
        i64 mult = with_perm ? lambda % pow_i64(p, k) : 1;
        layer.push_back(gate_rk2(k, hi - 1, hi, mult));
        layer.push_back(gate_swap(hi - 1, hi));
      }
    }
  }
  return c;
}

// Unconstrained product form: per wire (most significant first) a Hadamard
// followed by its rotation chain down to every lower wire.  Net unitary: the
// (modified) Fourier matrix with the output dits in reversed wire order,
// recorded by msq_out = 0.
inline Circuit fourier_product(i64 p, int n, i64 lambda, bool with_perm) {
  Circuit c;
  c.p = p;
  c.n = n;
  c.lnn = false;
  c.msq_in = n - 1;
  c.msq_out = 0;
  i64 mu = with_perm ? mod_inv(lambda % p, Modulus(p, 1)) : 1;
  for (int w = n - 1; w >= 0; --w) {
    Layer h{gate_h(w)};
    if (with_perm && mu != 1) h.push_back(gate_perm(mu, w));
    c.layers.push_back(std::move(h));
    for (int j = w - 1; j >= 0; --j) {
      int k = w - j + 1;
      i64 mult = with_perm ? lambda % pow_i64(p, k) : 1;
      c.layers.push_back({gate_rk2(k, j, w, mult)});
    }
  }
  return asap_merge(c);
}

}  // namespace detail

inline Circuit synth_qft(i64 p, int n, bool lnn = true) {
  Modulus guard(p, n);
  (void)guard;
  return lnn ? detail::fourier_lnn(p, n, 1, false)
             : detail::fourier_product(p, n, 1, false);
}

// Fourier cascade with every rotation raised to the lambda-th power and a
// one-dit multiplier correction after each Hadamard (elided when it is the
// identity).  lambda = 1 degenerates to synth_qft's layer structure.
inline Circuit synth_mqft(i64 lambda, i64 p, int n, bool lnn = true,
                          InverseMode mode = InverseMode::None) {
  Modulus m(p, n);
  lambda = m.reduce(lambda);
  (void)mod_inv(lambda, m);  // NotInvertible unless gcd(lambda, p^n) = 1
  switch (mode) {
    case InverseMode::None:
      return lnn ? detail::fourier_lnn(p, n, lambda, true)
                 : detail::fourier_product(p, n, lambda, true);
    case InverseMode::Flip:
      return circuit_inverse(synth_mqft(lambda, p, n, lnn, InverseMode::None));
    case InverseMode::Negate:
      return synth_mqft(mod_sub(0, lambda, m), p, n, lnn, InverseMode::None);
  }
  throw InvalidGate("unknown inverse mode");
}

// In-place modular multiplier |x> -> |lambda x mod p^n>: modified Fourier
// cascade followed by the inverse Fourier cascade.  The inverse choices all
// realize the division |x> -> |lambda^{-1} x>: flip mirrors the whole
// circuit, negate composes a plain Fourier with the negated-multiplier
// cascade, reciprocal synthesizes the direct circuit for lambda^{-1}.
inline Circuit synth_modmulc(i64 lambda, i64 p, int n,
                             InverseChoice choice = InverseChoice::Direct,
                             bool lnn = true) {
  Modulus m(p, n);
  lambda = m.reduce(lambda);
  (void)mod_inv(lambda, m);
  switch (choice) {
    case InverseChoice::Direct:
      return detail::concat(synth_mqft(lambda, p, n, lnn),
                            circuit_inverse(synth_qft(p, n, lnn)));
    case InverseChoice::Flip:
      return circuit_inverse(
          synth_modmulc(lambda, p, n, InverseChoice::Direct, lnn));
    case InverseChoice::Negate:
      // On the linear architecture the negated cascade composes directly; in
      // product form its reversed output order requires the mirrored cascade
      // instead (same unitary, Fourier-inverse realization).
      return lnn ? detail::concat(
                       synth_qft(p, n, lnn),
                       synth_mqft(lambda, p, n, lnn, InverseMode::Negate))
                 : detail::concat(
                       synth_qft(p, n, lnn),
                       synth_mqft(lambda, p, n, lnn, InverseMode::Flip));
    case InverseChoice::Reciprocal:
      return synth_modmulc(mod_inv(lambda, m), p, n, InverseChoice::Direct,
                           lnn);
  }
  throw InvalidGate("unknown inverse choice");
}

// ---------------------------------------------------------------------------
// quadratic diagonal

namespace detail {

// Emit the two-dit quadratic rotation for digit pair (lo, hi) at level k.
// At p = 2 the doubled rotation collapses one level (S_k = R_{k-1}); a
// level-1 doubled rotation, and any rotation whose multiple vanishes at its
// grid, is the identity and is elided.
inline void emit_pair_rot(Layer& layer, i64 p, int k, i64 gamma, i64 lo,
                          i64 hi) {
  if (p == 2) {
    if (k < 2) return;
    i64 mult = gamma % pow_i64(2, k - 1);
    if (mult != 0) layer.push_back(gate_rk2(k - 1, lo, hi, mult));
  } else {
    i64 mult = gamma % pow_i64(p, k);
    if (mult != 0) layer.push_back(gate_sk(k, lo, hi, mult));
  }
}

// Unconstrained quadratic diagonal: layer l carries the level-(n-l) pair
// rotations on (j, l-j) plus, for even l, the single-dit rotation at wire
// l/2.  Net unitary: exactly the quadratic phase diag_gamma.
inline Circuit diag_product(i64 p, int n, i64 gamma) {
  Circuit c;
  c.p = p;
  c.n = n;
  c.lnn = false;
  c.msq_in = c.msq_out = n - 1;
  for (int l = 0; l < n; ++l) {
    Layer layer;
    int k = n - l;
    for (i64 j = 0; j < (l + 1) / 2; ++j)
      emit_pair_rot(layer, p, k, gamma, j, l - j);
    if (l % 2 == 0) {
      i64 mult = gamma % pow_i64(p, k);
      if (mult != 0) layer.push_back(gate_rk1(k, l / 2, mult));
    }
    if (!layer.empty()) c.layers.push_back(std::move(layer));
  }
  return c;
}

// Nearest-neighbour quadratic diagonal: dits descend in mirrored waves,
// rotating with every partner whose digit-weight sum stays on the grid and
// bare-swapping past the rest; single-dit rotations are slotted into idle
// wires.  The waves reverse the dit order, so the net unitary is the
// reversal permutation times diag_gamma (msq_out = 0).  Depth 2n-3 for
// n >= 2, cost ceil(n^2 / 2).
inline Circuit diag_lnn(i64 p, int n, i64 gamma) {
  Circuit c;
  c.p = p;
  c.n = n;
  c.lnn = true;
  c.msq_in = n - 1;
  c.msq_out = 0;
  if (n == 1) {
    c.msq_in = c.msq_out = 0;
    i64 mult = gamma % p;
    if (mult != 0) c.layers.push_back({gate_rk1(1, 0, mult)});
    return c;
  }
  int L = 2 * n - 3;
  c.layers.assign(static_cast<std::size_t>(L), {});
  std::vector<i64> pos(static_cast<std::size_t>(n));
  std::iota(pos.begin(), pos.end(), 0);  // dit -> wire
  std::vector<std::vector<i64>> pos_at{pos};
  std::map<int, std::vector<int>> events;  // layer -> pair offsets j
  for (int w = 1; w < n; ++w)
    for (int j = 0; j < n - w; ++j) events[2 * w - 1 + j].push_back(j);
  for (int t = 1; t <= L; ++t) {
    std::vector<i64> arr(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) arr[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])] = i;
    Layer& layer = c.layers[static_cast<std::size_t>(t - 1)];
    if (auto it = events.find(t); it != events.end()) {
      for (int j : it->second) {
        i64 hi = n - 1 - j, lo = n - 2 - j;
        i64 D = arr[static_cast<std::size_t>(hi)];
        i64 A = arr[static_cast<std::size_t>(lo)];
        if (D + A <= n - 1)
          emit_pair_rot(layer, p, static_cast<int>(n - D - A), gamma, lo, hi);
        layer.push_back(gate_swap(lo, hi));
        pos[static_cast<std::size_t>(D)] = lo;
        pos[static_cast<std::size_t>(A)] = hi;
      }
    }
    pos_at.push_back(pos);
  }
  // single-dit rotations: dit a carries level n-2a, placed at the earliest
  // layer where its wire is idle, else riding just after its first swap
  for (int a = 0; a < n; ++a) {
    int k = n - 2 * a;
    if (k < 1) continue;
    i64 mult = gamma % pow_i64(p, k);
    if (mult == 0) continue;
    bool placed = false;
    for (int t = 1; t <= L && !placed; ++t) {
      i64 wa = pos_at[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(a)];
      std::set<i64> busy;
      for (const Gate& g : c.layers[static_cast<std::size_t>(t - 1)])
        for (i64 w : g.wires) busy.insert(w);
      if (!busy.count(wa)) {
        c.layers[static_cast<std::size_t>(t - 1)].push_back(
            gate_rk1(k, wa, mult));
        placed = true;
      }
    }
    if (!placed)
      c.layers[0].push_back(
          gate_rk1(k, pos_at[1][static_cast<std::size_t>(a)], mult));
  }
  for (int i = 0; i < n; ++i)
    if (pos[static_cast<std::size_t>(i)] != n - 1 - i)
      throw DecompositionFailure("diagonal wave cascade did not reverse");
  return c;
}

}  // namespace detail

// Quadratic-phase diagonal for any residue gamma.  Standard orientation in
// product form equals diag_gamma exactly; the linear-architecture form lands
// dits reversed (see msq annotations); Flipped mirrors the diagram.
inline Circuit synth_diag(i64 gamma, i64 p, int n,
                          DiagOrientation orientation = DiagOrientation::Standard,
                          bool lnn = true) {
  Modulus m(p, n);
  gamma = m.reduce(gamma);
  Circuit c = lnn ? detail::diag_lnn(p, n, gamma)
                  : detail::diag_product(p, n, gamma);
  return orientation == DiagOrientation::Flipped ? flip_circuit(c) : c;
}

// ---------------------------------------------------------------------------
// fractional Fourier composition

// Three-block synthesis on the linear architecture: standard diagonal, the
// modified Fourier cascade flipped upside-down (wire reindexing, no gates),
// and the mirrored diagonal, greedily re-layered so the blocks interleave.
// Requires an odd prime power and an invertible b.
inline Circuit synth_qafrft(i64 a, i64 b, i64 p, int n) {
  Modulus m(p, n);
  a = m.reduce(a);
  b = m.reduce(b);
  (void)SO2Element::make(a, b, m);  // InvalidElement unless a^2 + b^2 = 1
  if (std::gcd(b, m.N) != 1)
    throw NonCoprimeB("rotation parameter b=" + std::to_string(b) +
                      " shares a factor with N=" + std::to_string(m.N) +
                      "; only the matrix builder covers this element");
  i64 h = half_mod(m);  // EvenModulus at p = 2
  i64 bi = mod_inv(b, m);
  i64 gamma = mod_mul(mod_sub(0, mod_mul(a, h, m), m), bi, m);
  Circuit blk1 = synth_diag(gamma, p, n, DiagOrientation::Standard, true);
  Circuit blk2 = remap_wires(synth_mqft(bi, p, n, true),
                             [n](i64 w) { return n - 1 - w; });
  Circuit blk3 = synth_diag(gamma, p, n, DiagOrientation::Flipped, true);
  return asap_merge(detail::concat(detail::concat(blk1, blk2), blk3));
}

// ---------------------------------------------------------------------------
// widening general multiplier

// Multiplier without the invertibility requirement: splits lambda = g * p^s
// with gcd(g, p) = 1, multiplies by g in place on the low n1 + n2 wires
// (n2 = ceil(log_p lambda); the upper wires must be |0> by contract), then
// shifts by p^s via s upward wire-rotation passes of adjacent swaps.
// Basis action |x> -> |lambda x> for all x < p^{n1}.
inline Circuit synth_mulc(i64 lambda, i64 p, int n1) {
  Modulus guard(p, 1);
  (void)guard;
  if (lambda < 1 || lambda > kMaxModulus)
    throw IndexRange("multiplier must be in [1, 2^31], got " +
                     std::to_string(lambda));
  if (n1 < 1) throw IndexRange("register width must be positive");
  PAdicSplit split = p_adic_split(lambda, p);
  int n2 = 0;
  while (detail::pow_i64(p, n2) < lambda) ++n2;
  int s = static_cast<int>(split.s);
  int width = n1 + n2 + s;
  Circuit c;
  c.p = p;
  c.n = width;
  c.lnn = true;
  c.msq_in = c.msq_out = width - 1;
  if (split.g != 1) {
    Circuit mm = synth_modmulc(split.g, p, n1 + n2);
    c.layers = std::move(mm.layers);
  }
  for (int pass = 0; pass < s; ++pass)
    for (i64 w = width - 1; w >= 1; --w)
      c.layers.push_back({gate_swap(w - 1, w)});
  return c;
}

// ---------------------------------------------------------------------------
// elementary-gate estimates

// Coarse elementary-gate figures for the standard circuit families, in units
// of two-level qudit gates (about 4p^2 per rotation, p per one-dit
// multiplier); width is the wire count.  These are order-of-magnitude
// estimates, flagged approximate.
inline Metrics elementary_estimates(EstimateKind kind, i64 p, int n) {
  Modulus guard(p, n);
  (void)guard;
  Metrics m;
  m.width = n;
  m.approximate = true;
  i64 p2 = p * p;
  i64 nn = static_cast<i64>(n);
  switch (kind) {
    case EstimateKind::Qafrft:
      m.elementary_cost = 6 * p2 * nn * nn;
      m.elementary_depth = 16 * p2 * nn;
      break;
    case EstimateKind::Mqft:
    case EstimateKind::Diag:
      m.elementary_cost = 2 * p2 * nn * nn;
      m.elementary_depth = 8 * p2 * nn;
      break;
    case EstimateKind::Modmulc:
      m.elementary_cost = 4 * p2 * nn * nn;
      m.elementary_depth = 16 * p2 * nn;
      break;
  }
  return m;
}

}  // namespace afrft
