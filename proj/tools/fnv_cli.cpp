// Copyright 2026 The fnv Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line entry point: verify, estimate, oracle-check, make-instance,
// sample-trajectory, inspect-generator, sweep.

#include "CLI11.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fnv/io.hpp"

namespace {

using json = nlohmann::json;
using namespace fnv;

constexpr const char* kGenerator = "fnv";

struct Options {
  std::string instance;
  std::string witness;
  std::string out;
  std::string format = "json";
  std::string mode = "continuous";
  std::string numeric = "float";
  double t = 0.0;
  std::uint64_t M = 0;
  double delta = 0.0;
  std::uint64_t trials = 400;
  std::uint64_t seed = 0;
  bool record = false;
  // make-instance
  std::string family = "product";
  int n = 2;
  double epsilon = 0.5;
  std::string adversary = "honest_ground";
  // inspect-generator
  std::string x;
  std::string which = "G";
  // sweep
  std::string param;
  std::vector<std::string> values;
};

/// Usage and input problems: exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Loaded {
  Instance<double> instance;
  Witness<double> witness;
};

Loaded load(const Options& o) {
  if (o.instance.empty()) throw UsageError("--instance is required");
  const json ij = read_json_file(o.instance);
  const bool bundle = ij.contains("instance");
  std::optional<json> wj;
  if (!o.witness.empty()) {
    wj = read_json_file(o.witness);
  } else if (bundle && ij.contains("witness")) {
    wj = ij.at("witness");
  } else {
    throw UsageError("--witness is required unless --instance is a bundle with a witness");
  }
  Instance<double> inst = instance_from_json(bundle ? ij.at("instance") : ij);
  Witness<double> w = witness_from_json(*wj);
  if (w.oracle.qubits() != inst.hamiltonian.qubits()) throw UsageError("witness and instance disagree on the qubit count");
  return {std::move(inst), std::move(w)};
}

VerifierConfig make_config(const Options& o) {
  VerifierConfig cfg;
  cfg.t = o.t;
  cfg.M = o.M;
  cfg.mode = parse_mode(o.mode);
  cfg.delta = o.delta;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.record_trajectory = o.record;
  if (cfg.trials < 1) throw UsageError("--trials must be at least 1");
  return cfg;
}

json inputs_echo(const Options& o, const std::string& command) {
  json j = {{"command", command}, {"numeric", o.numeric}};
  if (!o.instance.empty()) j["instance"] = o.instance;
  if (!o.witness.empty()) j["witness"] = o.witness;
  return j;
}

template <Real T>
std::pair<VerdictTrace, VerifierConfig> verify_one(const Instance<T>& inst, const Witness<T>& w, VerifierConfig cfg) {
  inst.validate(cfg.min_gap);
  const Prepared<T> prep = preprocess(inst, w);
  if (prep.rejected()) {
    VerdictTrace tr;
    tr.reason = prep.reason;
    return {tr, cfg};
  }
  cfg = resolve_config(cfg, *prep.hamiltonian, to_double(prep.epsilon));
  RngStream rng(cfg.seed, 0);
  return {verify_run(*prep.hamiltonian, *prep.oracle, w.x_in, cfg, rng), cfg};
}

json cmd_verify(const Options& o) {
  const Loaded in = load(o);
  const VerifierConfig cfg = make_config(o);
  auto [trace, resolved] = o.numeric == "exact" ? verify_one(to_exact(in.instance), to_exact(in.witness), cfg)
                                                : verify_one(in.instance, in.witness, cfg);
  json result = trace_to_json(trace);
  result["seed"] = resolved.seed;
  return {{"inputs", inputs_echo(o, "verify")}, {"config", config_to_json(resolved)}, {"result", result}};
}

AcceptanceEstimate run_estimate(const Options& o, const Instance<double>& inst, const Witness<double>& w,
                                const VerifierConfig& cfg) {
  if (o.numeric == "exact") return estimate_acceptance(to_exact(inst), to_exact(w), cfg);
  return estimate_acceptance(inst, w, cfg);
}

json cmd_estimate(const Options& o) {
  const Loaded in = load(o);
  const AcceptanceEstimate est = run_estimate(o, in.instance, in.witness, make_config(o));
  return {{"inputs", inputs_echo(o, "estimate")}, {"config", config_to_json(est.config)}, {"result", estimate_to_json(est)}};
}

json cmd_oracle_check(const Options& o) {
  const Loaded in = load(o);
  if (in.instance.hamiltonian.qubits() > 12) throw UsageError("oracle-check is limited to 12 qubits");
  const LemmaReport rep = check_lemma_suite(in.instance.hamiltonian, in.witness.oracle);
  return {{"inputs", inputs_echo(o, "oracle-check")}, {"result", rep.to_json()}};
}

ReversibleCircuit random_accepting_circuit(int gates, RngStream& rng) {
  // wires: [anc 0 | coins 1, 2 | witness 3]; the first gate copies the
  // witness bit (1) to the ancilla, later gates never touch wire 0.
  std::vector<Gate> gs{{GateKind::kCnot, {3, 0}}};
  const std::vector<int> pool{1, 2, 3};
  while (static_cast<int>(gs.size()) < gates) {
    const double u = rng.sample_uniform();
    std::vector<int> w = pool;
    for (std::size_t i = w.size(); i > 1; --i) std::swap(w[i - 1], w[static_cast<std::size_t>(rng.sample_uniform() * static_cast<double>(i))]);
    if (u < 0.25) {
      gs.push_back({GateKind::kNot, {w[0]}});
    } else if (u < 0.75) {
      gs.push_back({GateKind::kCnot, {w[0], w[1]}});
    } else {
      gs.push_back({GateKind::kToffoli, {w[0], w[1], w[2]}});
    }
  }
  return ReversibleCircuit(4, std::move(gs));
}

json cmd_make_instance(const Options& o) {
  RngStream rng(o.seed, 0);
  json bundle;
  if (o.family == "product") {
    if (o.n < 1 || o.n > 20) throw UsageError("--n must lie in [1, 20] for the product family");
    const YesFixture y = make_product_yes(o.n, random_product_state(o.n, rng), rng);
    bundle = bundle_to_json(y.instance, y.witness);
  } else if (o.family == "history") {
    if (o.n < 1 || o.n > 6) throw UsageError("--n (gate count) must lie in [1, 6] for the history family");
    HistoryOptions ho;
    ho.output_term = true;
    ho.output_wire = 0;
    const YesFixture y = circuit_to_hamiltonian(random_accepting_circuit(o.n, rng), 2, "1", ho);
    bundle = bundle_to_json(y.instance, y.witness);
  } else if (o.family == "no") {
    if (o.n < 1 || o.n > 10) throw UsageError("--n must lie in [1, 10] for the no family");
    const Instance<double> inst = make_no_instance(o.n, o.epsilon, rng);
    AdversaryFamily fam;
    if (o.adversary == "perturbed_ground") fam = AdversaryFamily::kPerturbedGround;
    else if (o.adversary == "random_product") fam = AdversaryFamily::kRandomProduct;
    else if (o.adversary == "sign_flipped_ground") fam = AdversaryFamily::kSignFlippedGround;
    else if (o.adversary == "honest_ground") fam = AdversaryFamily::kHonestGround;
    else if (o.adversary == "harmonic_trap") fam = AdversaryFamily::kHarmonicTrap;
    else throw UsageError("unknown --adversary " + o.adversary);
    const auto ws = adversarial_witnesses(inst, rng, 1, {fam});
    bundle = bundle_to_json(inst, ws.front().witness);
  } else {
    throw UsageError("unknown --family " + o.family);
  }
  return bundle;
}

std::string cmd_sample_trajectory(const Options& o) {
  const Loaded in = load(o);
  VerifierConfig cfg = make_config(o);
  in.instance.validate(cfg.min_gap);
  const Prepared<double> prep = preprocess(in.instance, in.witness);
  if (prep.rejected()) throw UsageError("witness rejected in preprocessing (lambda_hat > a)");
  cfg = resolve_config(cfg, *prep.hamiltonian, prep.epsilon);
  const GeneratorView<double> g(FixedNodeView<double>(*prep.hamiltonian, *prep.oracle));
  RngStream rng(cfg.seed, 0);
  Trajectory tr;
  try {
    tr = cfg.mode == Mode::kDiscrete
             ? gillespie_run_discrete(g, in.witness.x_in, cfg.t, rng, fixed_grid(cfg.t, cfg.grid_delta()))
             : gillespie_run(g, in.witness.x_in, cfg.t, rng);
  } catch (const ContractViolation& e) {
    throw UsageError(std::string("the witness does not define a legal generator: ") + e.what());
  } catch (const SupportError& e) {
    throw UsageError(e.what());
  }
  std::ostringstream os;
  for (const auto& e : tr.events) os << json{{"t", e.time}, {"state", e.state.to_string()}}.dump() << "\n";
  return os.str();
}

json cmd_inspect_generator(const Options& o) {
  const Loaded in = load(o);
  const int n = in.instance.hamiltonian.qubits();
  if (n > 16) throw UsageError("inspect-generator is limited to 16 qubits");
  if (o.x.empty()) throw UsageError("--x is required");
  const BasisIndex x = BasisIndex::parse(o.x);
  require_width(x, n, "--x");
  const Prepared<double> prep = preprocess(in.instance, in.witness);
  if (prep.rejected()) throw UsageError("witness rejected in preprocessing (lambda_hat > a)");
  const FixedNodeView<double> fn(*prep.hamiltonian, *prep.oracle);
  if (!fn.in_support(x)) throw UsageError("--x lies outside supp(phi)");
  json entries = json::array();
  json result = {{"x", x.to_string()}, {"which", o.which}};
  if (o.which == "F") {
    for (const auto& e : fn.row(x)) entries.push_back({{"index", e.index.to_string()}, {"value", e.value}});
    result["entries"] = entries;
  } else if (o.which == "G") {
    const GeneratorView<double> g(fn);
    const auto col = g.column(x);
    entries.push_back({{"index", x.to_string()}, {"value", col.diagonal}});
    for (const auto& e : col.off_diagonal) entries.push_back({{"index", e.index.to_string()}, {"value", e.value}});
    std::sort(entries.begin(), entries.end(), [](const json& a, const json& b) {
      return BasisIndex::parse(a["index"].get<std::string>()) < BasisIndex::parse(b["index"].get<std::string>());
    });
    const ColumnCheck chk = check_column(col, g.tolerances());
    result["entries"] = entries;
    result["legal"] = chk.legal;
    result["reason"] = to_string(chk.reason);
    result["column_sum"] = chk.sum;
  } else {
    throw UsageError("--which must be F or G");
  }
  return {{"inputs", inputs_echo(o, "inspect-generator")}, {"result", result}};
}

std::string cmd_sweep(const Options& o, json& doc) {
  if (o.values.size() < 2) throw UsageError("sweep needs at least two --values");
  if (o.param != "t" && o.param != "trials" && o.param != "epsilon") throw UsageError("--param must be t, trials or epsilon");
  const Loaded in = load(o);
  json rows = json::array();
  std::ostringstream csv;
  csv << "value,p_hat,ci,mean_transitions,wall_time\n";
  for (const auto& text : o.values) {
    double v;
    try {
      std::size_t used = 0;
      v = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      throw UsageError("cannot parse sweep value '" + text + "'");
    }
    VerifierConfig cfg = make_config(o);
    Instance<double> inst = in.instance;
    if (o.param == "t") {
      cfg.t = v;
    } else if (o.param == "trials") {
      if (v < 1) throw UsageError("trials values must be at least 1");
      cfg.trials = static_cast<std::uint64_t>(v);
    } else {
      // same spectrum moved so that the gap b - a equals v
      const double shift = v - (inst.b - inst.a);
      inst = Instance<double>{inst.hamiltonian.with_term(LocalTerm<double>::identity(shift)), inst.a, inst.a + v};
    }
    const auto t0 = std::chrono::steady_clock::now();
    const AcceptanceEstimate est = run_estimate(o, inst, in.witness, cfg);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rows.push_back({{"value", v}, {"p_hat", est.p_hat}, {"ci", est.ci_half_width},
                    {"mean_transitions", est.mean_transitions}, {"wall_time", wall}});
    csv << json(v).dump() << "," << json(est.p_hat).dump() << "," << json(est.ci_half_width).dump() << ","
        << json(est.mean_transitions).dump() << "," << json(wall).dump() << "\n";
  }
  doc = {{"inputs", inputs_echo(o, "sweep")}, {"param", o.param}, {"rows", rows}};
  return csv.str();
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  const std::string tmp = o.out + ".partial";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw UsageError("cannot write " + o.out);
    f << text;
  }
  if (std::rename(tmp.c_str(), o.out.c_str()) != 0) throw UsageError("cannot write " + o.out);
}

json metadata(double wall) {
  return {{"generator", kGenerator}, {"version", FNV_VERSION}, {"rng", RngStream::kGeneratorName}, {"wall_time_s", wall}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fixed-node verification engine for local Hamiltonians with succinct ground states"};
  app.require_subcommand(1);
  Options o;

  auto add_io = [&](CLI::App* s) {
    s->add_option("--instance", o.instance, "instance or bundle JSON");
    s->add_option("--witness", o.witness, "witness JSON");
    s->add_option("--out", o.out, "output path (default stdout)");
  };
  auto add_run = [&](CLI::App* s) {
    s->add_option("--t", o.t, "horizon (default ceil(10 n / eps))");
    s->add_option("--M", o.M, "transition cap (default 2^k m n^3 t ||H||)");
    s->add_option("--mode", o.mode, "continuous or discrete")->check(CLI::IsMember({"continuous", "discrete"}));
    s->add_option("--delta", o.delta, "discrete grid spacing (default 1e-6 t)");
    s->add_option("--seed", o.seed, "master seed");
    s->add_option("--numeric", o.numeric, "float or exact")->check(CLI::IsMember({"float", "exact"}));
  };

  auto* verify = app.add_subcommand("verify", "run the verifier once");
  add_io(verify);
  add_run(verify);
  verify->add_flag("--record", o.record, "include the trajectory");

  auto* estimate = app.add_subcommand("estimate", "estimate the acceptance probability");
  add_io(estimate);
  add_run(estimate);
  estimate->add_option("--trials", o.trials, "number of independent runs");
  estimate->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* check = app.add_subcommand("oracle-check", "dense lemma suite on (H, phi)");
  add_io(check);

  auto* make = app.add_subcommand("make-instance", "generate an instance/witness bundle");
  make->add_option("--family", o.family, "product, history or no")->check(CLI::IsMember({"product", "history", "no"}));
  make->add_option("--n", o.n, "qubits (gate count for history)");
  make->add_option("--seed", o.seed, "seed");
  make->add_option("--epsilon", o.epsilon, "gap for the no family");
  make->add_option("--adversary", o.adversary, "witness family for the no family");
  make->add_option("--out", o.out, "output path (default stdout)");

  auto* sample = app.add_subcommand("sample-trajectory", "one CTMC trajectory as JSON lines");
  add_io(sample);
  add_run(sample);

  auto* inspect = app.add_subcommand("inspect-generator", "one row of F or column of G as JSON");
  add_io(inspect);
  inspect->add_option("--x", o.x, "basis string");
  inspect->add_option("--which", o.which, "F or G")->check(CLI::IsMember({"F", "G"}));

  auto* sweep = app.add_subcommand("sweep", "acceptance estimates over a parameter");
  add_io(sweep);
  add_run(sweep);
  sweep->add_option("--trials", o.trials, "runs per value");
  sweep->add_option("--param", o.param, "t, trials or epsilon")->required();
  sweep->add_option("--values", o.values, "values, comma separated")->delimiter(',')->required();
  sweep->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };
  try {
    if (sample->parsed()) {
      emit(o, cmd_sample_trajectory(o));
      return 0;
    }
    if (sweep->parsed()) {
      if (!app.get_subcommand("sweep")->count("--format")) o.format = "csv";
      json doc;
      const std::string csv = cmd_sweep(o, doc);
      if (o.format == "csv") {
        emit(o, csv);
      } else {
        doc["metadata"] = metadata(elapsed());
        emit(o, doc.dump(2) + "\n");
      }
      return 0;
    }
    json doc;
    if (verify->parsed()) doc = cmd_verify(o);
    if (estimate->parsed()) doc = cmd_estimate(o);
    if (check->parsed()) doc = cmd_oracle_check(o);
    if (make->parsed()) doc = cmd_make_instance(o);
    if (inspect->parsed()) doc = cmd_inspect_generator(o);
    if (estimate->parsed() && o.format == "csv") {
      const json& r = doc["result"];
      std::ostringstream os;
      os << "p_hat,ci,trials,accepted,mean_transitions\n"
         << r["p_hat"].dump() << "," << r["ci_half_width"].dump() << "," << r["trials"].dump() << ","
         << r["accepted"].dump() << "," << r["mean_transitions"].dump() << "\n";
      emit(o, os.str());
      return 0;
    }
    if (!make->parsed()) doc["metadata"] = metadata(elapsed());
    emit(o, doc.dump(2) + "\n");
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const SupportError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const SizeCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
