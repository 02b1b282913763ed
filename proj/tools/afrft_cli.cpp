// Command-line surface of the toolkit: group queries, matrix emission,
// circuit synthesis, statevector simulation, verification suites, and
// metrics tables.  stdout carries exactly one JSON document per run;
// human-readable diagnostics stay on stderr.  Exit codes: 0 success,
// 1 verification failure, 2 usage or module error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "afrft/io.hpp"
#include "afrft/sim.hpp"
#include "afrft/synth.hpp"
#include "afrft/verify.hpp"

namespace {

using namespace afrft;

i64 dim_cap_from_env() {
  const char* s = std::getenv("AFRFT_MAX_DIM");
  if (!s) return kDefaultDimCap;
  char* end = nullptr;
  long long v = std::strtoll(s, &end, 10);
  if (end == s || *end != '\0' || v < 1)
    throw Error("env-error", "AFRFT_MAX_DIM must be a positive integer");
  return static_cast<i64>(v);
}

void check_cap(i64 dim) {
  i64 cap = dim_cap_from_env();
  if (dim > cap)
    throw DimensionCap("dimension " + std::to_string(dim) + " exceeds cap " +
                       std::to_string(cap) + " (AFRFT_MAX_DIM)");
}

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("io-error", "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void emit(const json& doc, const std::string& out_path) {
  std::string text = doc.dump();
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw Error("io-error", "cannot write " + out_path);
    f << text << "\n";
  }
  std::cout << text << "\n";
}

json decomposition_json(const Decomposition& dec) {
  json arr = json::array();
  for (const SL2Factor& f : dec.factors) {
    json o;
    switch (f.kind) {
      case SL2Factor::Kind::R:
        o["type"] = "R";
        o["param"] = f.param;
        break;
      case SL2Factor::Kind::D:
        o["type"] = "D";
        o["param"] = f.param;
        break;
      case SL2Factor::Kind::Eps:
        o["type"] = "eps";
        break;
    }
    arr.push_back(o);
  }
  return json{{"factors", arr}, {"fallback_used", dec.fallback_used}};
}

json metrics_json(const Metrics& m) {
  return json{{"approximate", m.approximate},
              {"cost", m.cost},
              {"depth", m.depth},
              {"elementary_cost", m.elementary_cost},
              {"elementary_depth", m.elementary_depth},
              {"perm_count", m.perm_count},
              {"width", m.width}};
}

json suite_json(const SuiteReport& r) {
  return json{{"cases", r.cases},
              {"failures", r.failures},
              {"max_residual", r.max_residual},
              {"suite", r.suite}};
}

struct CommonArgs {
  i64 p = 3;
  int n = 1;
  i64 a = 0, b = 0, c = 0, d = 0;
  i64 gamma = 0, lambda = 1, r = 0, s = 0;
  std::string out;
};

InverseMode mqft_mode(const std::string& mode) {
  if (mode == "none" || mode == "direct") return InverseMode::None;
  if (mode == "flip") return InverseMode::Flip;
  if (mode == "negate") return InverseMode::Negate;
  throw Error("usage-error", "mqft has no inverse mode '" + mode + "'");
}

InverseChoice modmulc_choice(const std::string& mode) {
  if (mode == "none" || mode == "direct") return InverseChoice::Direct;
  if (mode == "flip") return InverseChoice::Flip;
  if (mode == "negate") return InverseChoice::Negate;
  if (mode == "reciprocal") return InverseChoice::Reciprocal;
  throw Error("usage-error", "modmulc has no inverse mode '" + mode + "'");
}

int cmd_group(const CommonArgs& g, const std::string& action,
              const std::string& strategy, std::uint64_t seed, bool have_ab) {
  Modulus m(g.p, g.n);
  json doc;
  if (action == "order") {
    doc = json{{"order", so2_group_order(m)}};
  } else if (action == "generator") {
    GeneratorStrategy st = strategy == "random" ? GeneratorStrategy::Random
                                                : GeneratorStrategy::Exhaustive;
    SO2Element gen = find_generator(m, st, seed);
    doc = json{{"a", gen.a}, {"b", gen.b}};
  } else {
    if (!have_ab)
      throw Error("usage-error", "group " + action + " needs --a and --b");
    SO2Element gen = SO2Element::make(g.a, g.b, m);
    if (action == "decompose") {
      doc = decomposition_json(decompose_so2(gen));
    } else {  // fourier-power
      doc = json{{"m", fourier_power(gen).m}};
    }
  }
  emit(doc, g.out);
  return 0;
}

int cmd_matrix(const CommonArgs& g, const std::string& kind,
               const std::string& backend) {
  Modulus m(g.p, g.n);
  check_cap(m.N);
  ExactPhaseMatrix M;
  if (kind == "afrft")
    M = afrft_matrix(m.reduce(g.a), m.reduce(g.b), m);
  else if (kind == "qft")
    M = qft_matrix(m);
  else if (kind == "mqft")
    M = mqft_matrix(g.lambda, m);
  else if (kind == "modmulc")
    M = u_mult(mod_inv(m.reduce(g.lambda), m), m);
  else if (kind == "diag")
    M = diag_gamma(m.reduce(g.gamma), m);
  else if (kind == "weyl-j")
    M = weyl_j(g.r, g.s, m);
  else  // u-generic
    M = u_generic(Mat2Z::make(g.a, g.b, g.c, g.d, m));
  emit(backend == "dense" ? matrix_to_json(to_dense(M)) : matrix_to_json(M),
       g.out);
  return 0;
}

int cmd_synth(const CommonArgs& g, const std::string& kind, bool lnn,
              const std::string& inverse_mode) {
  Modulus m(g.p, g.n);
  Circuit c;
  if (kind == "qafrft")
    c = synth_qafrft(g.a, g.b, g.p, g.n);
  else if (kind == "qft")
    c = synth_qft(g.p, g.n, lnn);
  else if (kind == "mqft")
    c = synth_mqft(m.reduce(g.lambda), g.p, g.n, lnn, mqft_mode(inverse_mode));
  else if (kind == "modmulc")
    c = synth_modmulc(m.reduce(g.lambda), g.p, g.n,
                      modmulc_choice(inverse_mode), lnn);
  else if (kind == "diag")
    c = synth_diag(m.reduce(g.gamma), g.p, g.n, DiagOrientation::Standard,
                   lnn);
  else  // mulc: --n names the input register width, --lambda is unreduced
    c = synth_mulc(g.lambda, g.p, g.n);
  check_cap(c.dim());
  emit(circuit_to_json(c), g.out);
  return 0;
}

int cmd_simulate(const std::string& circuit_path, const std::string& state,
                 const std::string& out) {
  Circuit c = parse_circuit(read_all(circuit_path));
  if (state.rfind("basis:", 0) != 0)
    throw Error("usage-error", "--state must look like basis:k");
  i64 k = 0;
  try {
    std::size_t used = 0;
    std::string digits = state.substr(6);
    k = std::stoll(digits, &used);
    if (used != digits.size()) throw std::invalid_argument(state);
  } catch (const std::exception&) {
    throw Error("usage-error", "--state must look like basis:k");
  }
  StateVector psi = basis_state(c.p, c.n, k);
  StateVector evolved = run(c, std::move(psi), dim_cap_from_env());
  emit(state_to_json(evolved.amps), out);
  return 0;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opt,
               const std::string& out) {
  check_cap(Modulus(opt.p, opt.n).N);
  SuiteReport rep = run_suite(suite, opt);
  emit(suite_json(rep), out);
  return rep.failures.empty() ? 0 : 1;
}

int cmd_metrics(const CommonArgs& g, const std::string& circuit_path,
                const std::string& kind) {
  if (circuit_path.empty() == kind.empty())
    throw Error("usage-error", "pass exactly one of --circuit or --kind");
  Metrics m;
  if (!circuit_path.empty()) {
    m = circuit_metrics(parse_circuit(read_all(circuit_path)));
  } else {
    EstimateKind ek;
    if (kind == "qafrft")
      ek = EstimateKind::Qafrft;
    else if (kind == "mqft")
      ek = EstimateKind::Mqft;
    else if (kind == "modmulc")
      ek = EstimateKind::Modmulc;
    else
      ek = EstimateKind::Diag;
    m = elementary_estimates(ek, g.p, g.n);
  }
  emit(metrics_json(m), g.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arithmetic fractional Fourier transform toolkit"};
  app.require_subcommand(1);

  CommonArgs ga, ma, sa, ka;  // group / matrix / synth / metrics stores

  // group ------------------------------------------------------------
  auto* grp = app.add_subcommand("group", "circle-group queries");
  std::string grp_action, grp_strategy = "exhaustive";
  std::uint64_t grp_seed = 0;
  grp->add_option("action", grp_action, "order|generator|decompose|fourier-power")
      ->required()
      ->check(CLI::IsMember({"order", "generator", "decompose", "fourier-power"}));
  grp->add_option("--p", ga.p, "prime base")->required();
  grp->add_option("--n", ga.n, "prime exponent");
  auto* grp_a = grp->add_option("--a", ga.a, "element entry a");
  auto* grp_b = grp->add_option("--b", ga.b, "element entry b");
  grp->add_option("--strategy", grp_strategy, "generator search strategy")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  grp->add_option("--seed", grp_seed, "random-strategy seed");
  grp->add_option("--out", ga.out, "also write the JSON document here");

  // matrix -----------------------------------------------------------
  auto* mat = app.add_subcommand("matrix", "emit an operator matrix");
  std::string mat_kind, mat_backend = "exact";
  mat->add_option("kind", mat_kind,
                  "afrft|qft|mqft|modmulc|diag|weyl-j|u-generic")
      ->required()
      ->check(CLI::IsMember(
          {"afrft", "qft", "mqft", "modmulc", "diag", "weyl-j", "u-generic"}));
  mat->add_option("--p", ma.p, "prime base")->required();
  mat->add_option("--n", ma.n, "prime exponent");
  mat->add_option("--a", ma.a, "rotation / SL2 entry a");
  mat->add_option("--b", ma.b, "rotation / SL2 entry b");
  mat->add_option("--c", ma.c, "SL2 entry c");
  mat->add_option("--d", ma.d, "SL2 entry d");
  mat->add_option("--gamma", ma.gamma, "chirp exponent");
  mat->add_option("--lambda", ma.lambda, "multiplier");
  mat->add_option("--r", ma.r, "translation label r");
  mat->add_option("--s", ma.s, "translation label s");
  mat->add_option("--backend", mat_backend, "exact|dense")
      ->check(CLI::IsMember({"exact", "dense"}));
  mat->add_option("--out", ma.out, "also write the JSON document here");

  // synth ------------------------------------------------------------
  auto* syn = app.add_subcommand("synth", "synthesize a circuit");
  std::string syn_kind, syn_mode = "none";
  bool syn_lnn = true;
  syn->add_option("kind", syn_kind, "qafrft|qft|mqft|modmulc|diag|mulc")
      ->required()
      ->check(CLI::IsMember(
          {"qafrft", "qft", "mqft", "modmulc", "diag", "mulc"}));
  syn->add_option("--p", sa.p, "prime base")->required();
  syn->add_option("--n", sa.n, "register width in dits");
  syn->add_option("--a", sa.a, "rotation entry a");
  syn->add_option("--b", sa.b, "rotation entry b");
  syn->add_option("--gamma", sa.gamma, "chirp exponent");
  syn->add_option("--lambda", sa.lambda, "multiplier");
  syn->add_flag("--lnn,!--no-lnn", syn_lnn,
                "nearest-neighbor schedule (default) or product form");
  syn->add_option("--inverse-mode", syn_mode,
                  "none|direct|flip|negate|reciprocal")
      ->check(CLI::IsMember({"none", "direct", "flip", "negate", "reciprocal"}));
  syn->add_option("--out", sa.out, "also write the JSON document here");

  // simulate ----------------------------------------------------------
  auto* sim = app.add_subcommand("simulate", "run a circuit on a basis state");
  std::string sim_circuit, sim_state = "basis:0", sim_out;
  sim->add_option("--circuit", sim_circuit, "circuit JSON path, or - for stdin")
      ->required();
  sim->add_option("--state", sim_state, "input state, basis:k");
  sim->add_option("--out", sim_out, "also write the JSON document here");

  // verify -------------------------------------------------------------
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  std::string ver_suite, ver_out;
  SuiteOptions ver_opt;
  ver->add_option("suite", ver_suite,
                  "appendix-a|covariance|magnetic|roots|circuits|metrics|all")
      ->required()
      ->check(CLI::IsMember({"appendix-a", "covariance", "magnetic", "roots",
                             "circuits", "metrics", "all"}));
  ver->add_option("--p", ver_opt.p, "prime base");
  ver->add_option("--n", ver_opt.n, "prime exponent");
  ver->add_option("--tol", ver_opt.tol, "tolerance for dense comparisons");
  ver->add_option("--seed", ver_opt.seed, "seed for sampled cases");
  ver->add_option("--out", ver_out, "also write the JSON document here");

  // metrics -------------------------------------------------------------
  auto* met = app.add_subcommand("metrics", "depth/cost table for a circuit");
  std::string met_circuit, met_kind;
  met->add_option("--circuit", met_circuit, "circuit JSON path, or - for stdin");
  auto* met_kind_opt =
      met->add_option("--kind", met_kind, "qafrft|mqft|modmulc|diag")
          ->check(CLI::IsMember({"qafrft", "mqft", "modmulc", "diag"}));
  auto* met_p = met->add_option("--p", ka.p, "prime base");
  auto* met_n = met->add_option("--n", ka.n, "register width in dits");
  met_kind_opt->needs(met_p)->needs(met_n);
  met->add_option("--out", ka.out, "also write the JSON document here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (grp->parsed())
      return cmd_group(ga, grp_action, grp_strategy, grp_seed,
                       grp_a->count() > 0 && grp_b->count() > 0);
    if (mat->parsed()) return cmd_matrix(ma, mat_kind, mat_backend);
    if (syn->parsed()) return cmd_synth(sa, syn_kind, syn_lnn, syn_mode);
    if (sim->parsed()) return cmd_simulate(sim_circuit, sim_state, sim_out);
    if (ver->parsed()) return cmd_verify(ver_suite, ver_opt, ver_out);
    if (met->parsed()) return cmd_metrics(ka, met_circuit, met_kind);
  } catch (const afrft::Error& e) {
    std::cerr << e.kind() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
