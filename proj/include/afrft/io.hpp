#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "afrft/circuit.hpp"
#include "afrft/matrix.hpp"

namespace afrft {

using nlohmann::json;

// Shared parse wrapper: converts the library's byte offset into 1-based
// line / column coordinates.
inline json json_parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    size_t byte = e.byte ? e.byte - 1 : 0;
    if (byte > text.size()) byte = text.size();
    i64 line = 1, col = 1;
    for (size_t i = 0; i < byte; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(e.what(), line, col);
  }
}

namespace detail {

inline const json& require_key(const json& j, const char* key,
                               const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string(what) + " is missing \"" + key + "\"", 0, 0);
  return j.at(key);
}

inline i64 require_int(const json& j, const char* key, const char* what) {
  const json& v = require_key(j, key, what);
  if (!v.is_number_integer())
    throw ParseError(std::string(what) + " field \"" + key +
                         "\" must be an integer",
                     0, 0);
  return v.get<i64>();
}

// Recover the prime-power structure of a serialized dimension.
inline Modulus modulus_from_dim(i64 N) {
  if (N < 2) throw ParseError("dimension must be a prime power >= 2", 0, 0);
  i64 p = N;
  for (i64 d = 2; d * d <= N; ++d)
    if (N % d == 0) {
      p = d;
      break;
    }
  int n = 0;
  i64 v = N;
  while (v % p == 0) {
    v /= p;
    ++n;
  }
  if (v != 1)
    throw ParseError("dimension " + std::to_string(N) + " is not a prime power",
                     0, 0);
  return Modulus(p, n);
}

}  // namespace detail

inline json gate_to_json(const Gate& g) {
  json j;
  j["kind"] = kind_name(g.kind);
  j["wires"] = g.wires;
  switch (g.kind) {
    case GateKind::RkTwo:
    case GateKind::RkSingle:
    case GateKind::Sk:
      j["k"] = g.k;
      j["mult"] = g.mult;
      break;
    case GateKind::Perm:
      j["mu"] = g.mu;
      break;
    default:
      break;
  }
  return j;
}

inline Gate gate_from_json(const json& j) {
  const json& kj = detail::require_key(j, "kind", "gate");
  if (!kj.is_string()) throw ParseError("gate \"kind\" must be a string", 0, 0);
  std::string kind = kj.get<std::string>();
  const json& wj = detail::require_key(j, "wires", "gate");
  if (!wj.is_array()) throw ParseError("gate \"wires\" must be an array", 0, 0);
  std::vector<i64> wires;
  for (const json& w : wj) {
    if (!w.is_number_integer())
      throw ParseError("gate wires must be integers", 0, 0);
    wires.push_back(w.get<i64>());
  }
  Gate g;
  g.wires = std::move(wires);
  if (kind == "H") {
    g.kind = GateKind::Hadamard;
  } else if (kind == "Rk2" || kind == "Rk1" || kind == "Sk") {
    g.kind = kind == "Rk2"   ? GateKind::RkTwo
             : kind == "Rk1" ? GateKind::RkSingle
                             : GateKind::Sk;
    g.k = static_cast<int>(detail::require_int(j, "k", "gate"));
    g.mult = detail::require_int(j, "mult", "gate");
  } else if (kind == "Perm") {
    g.kind = GateKind::Perm;
    g.mu = detail::require_int(j, "mu", "gate");
  } else if (kind == "SWAP") {
    g.kind = GateKind::Swap;
  } else {
    throw ParseError("unknown gate kind \"" + kind + "\"", 0, 0);
  }
  return g;
}

inline json circuit_to_json(const Circuit& c) {
  json j;
  j["p"] = c.p;
  j["n"] = c.n;
  j["lnn"] = c.lnn;
  j["msq_in"] = c.msq_in;
  j["msq_out"] = c.msq_out;
  json layers = json::array();
  for (const Layer& layer : c.layers) {
    json jl = json::array();
    for (const Gate& g : layer) jl.push_back(gate_to_json(g));
    layers.push_back(std::move(jl));
  }
  j["layers"] = std::move(layers);
  return j;
}

inline Circuit circuit_from_json(const json& j) {
  Circuit c;
  c.p = detail::require_int(j, "p", "circuit");
  c.n = static_cast<int>(detail::require_int(j, "n", "circuit"));
  const json& lj = detail::require_key(j, "lnn", "circuit");
  if (!lj.is_boolean()) throw ParseError("\"lnn\" must be a boolean", 0, 0);
  c.lnn = lj.get<bool>();
  c.msq_in = detail::require_int(j, "msq_in", "circuit");
  c.msq_out = detail::require_int(j, "msq_out", "circuit");
  const json& ls = detail::require_key(j, "layers", "circuit");
  if (!ls.is_array()) throw ParseError("\"layers\" must be an array", 0, 0);
  for (const json& jl : ls) {
    if (!jl.is_array())
      throw ParseError("each layer must be an array of gates", 0, 0);
    Layer layer;
    for (const json& jg : jl) layer.push_back(gate_from_json(jg));
    c.layers.push_back(std::move(layer));
  }
  validate_circuit(c);
  return c;
}

inline Circuit parse_circuit(const std::string& text) {
  return circuit_from_json(json_parse(text));
}

// Exact matrix document: phase exponents on the omega_N grid, null for
// structural zeros, common scale N^{-scale_pow/2}.
inline json matrix_to_json(const ExactPhaseMatrix& M) {
  json j;
  j["backend"] = "exact";
  j["N"] = M.mod.N;
  double pow_of_n =
      static_cast<double>(M.scale_s) / static_cast<double>(M.mod.n);
  if (M.scale_s % M.mod.n == 0)
    j["scale_pow"] = M.scale_s / M.mod.n;
  else
    j["scale_pow"] = pow_of_n;
  json rows = json::array();
  for (i64 r = 0; r < M.d; ++r) {
    json row = json::array();
    for (i64 c = 0; c < M.d; ++c) {
      std::int32_t e = M.at(r, c);
      if (e == ExactPhaseMatrix::kZero)
        row.push_back(nullptr);
      else
        row.push_back(e);
    }
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

// Dense matrix document: flat row-major [re, im] pairs.
inline json matrix_to_json(const DenseMatrix& M) {
  json j;
  j["backend"] = "dense";
  j["N"] = static_cast<i64>(M.rows());
  json entries = json::array();
  for (Eigen::Index r = 0; r < M.rows(); ++r)
    for (Eigen::Index c = 0; c < M.cols(); ++c)
      entries.push_back(json::array({M(r, c).real(), M(r, c).imag()}));
  j["entries"] = std::move(entries);
  return j;
}

struct MatrixDoc {
  std::optional<ExactPhaseMatrix> exact;
  DenseMatrix dense;
};

inline MatrixDoc matrix_from_json(const json& j) {
  std::string backend =
      detail::require_key(j, "backend", "matrix").get<std::string>();
  i64 N = detail::require_int(j, "N", "matrix");
  const json& entries = detail::require_key(j, "entries", "matrix");
  if (!entries.is_array())
    throw ParseError("matrix \"entries\" must be an array", 0, 0);
  MatrixDoc doc;
  if (backend == "exact") {
    Modulus m = detail::modulus_from_dim(N);
    const json& sp = detail::require_key(j, "scale_pow", "matrix");
    if (!sp.is_number())
      throw ParseError("\"scale_pow\" must be a number", 0, 0);
    double s_raw = sp.get<double>() * static_cast<double>(m.n);
    i64 s = static_cast<i64>(std::llround(s_raw));
    if (std::abs(s_raw - static_cast<double>(s)) > 1e-9)
      throw ParseError("\"scale_pow\" is not representable on this grid", 0, 0);
    if (static_cast<i64>(entries.size()) != N)
      throw ParseError("exact matrix needs N rows", 0, 0);
    ExactPhaseMatrix M = ExactPhaseMatrix::zeros(N, m);
    M.scale_s = static_cast<int>(s);
    for (i64 r = 0; r < N; ++r) {
      const json& row = entries.at(static_cast<size_t>(r));
      if (!row.is_array() || static_cast<i64>(row.size()) != N)
        throw ParseError("exact matrix rows need N entries", 0, 0);
      for (i64 c = 0; c < N; ++c) {
        const json& v = row.at(static_cast<size_t>(c));
        if (v.is_null()) continue;
        if (!v.is_number_integer())
          throw ParseError("exact entries must be integers or null", 0, 0);
        i64 e = v.get<i64>();
        if (e < 0 || e >= N)
          throw ParseError("exact exponent outside [0, N)", 0, 0);
        M.at(r, c) = static_cast<std::int32_t>(e);
      }
    }
    doc.dense = to_dense(M);
    doc.exact = std::move(M);
    return doc;
  }
  if (backend != "dense")
    throw ParseError("unknown matrix backend \"" + backend + "\"", 0, 0);
  if (static_cast<i64>(entries.size()) != N * N)
    throw ParseError("dense matrix needs N*N entries", 0, 0);
  doc.dense = DenseMatrix::Zero(N, N);
  for (i64 i = 0; i < N * N; ++i) {
    const json& v = entries.at(static_cast<size_t>(i));
    if (!v.is_array() || v.size() != 2 || !v.at(0).is_number() ||
        !v.at(1).is_number())
      throw ParseError("dense entries must be [re, im] pairs", 0, 0);
    doc.dense(i / N, i % N) = Cplx(v.at(0).get<double>(), v.at(1).get<double>());
  }
  return doc;
}

inline MatrixDoc parse_matrix(const std::string& text) {
  return matrix_from_json(json_parse(text));
}

inline json state_to_json(const Eigen::VectorXcd& v) {
  json j = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    j.push_back(json::array({v(i).real(), v(i).imag()}));
  return j;
}

inline Eigen::VectorXcd state_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("state must be an array", 0, 0);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) {
    const json& e = j.at(i);
    if (!e.is_array() || e.size() != 2 || !e.at(0).is_number() ||
        !e.at(1).is_number())
      throw ParseError("state entries must be [re, im] pairs", 0, 0);
    v(static_cast<Eigen::Index>(i)) =
        Cplx(e.at(0).get<double>(), e.at(1).get<double>());
  }
  return v;
}

}  // namespace afrft
