// Copyright 2026 The fnv Authors
// SPDX-License-Identifier: Apache-2.0

#include "fnv/io.hpp"

#include <fstream>

namespace fnv {

using json = nlohmann::json;

namespace {

json square(const std::vector<double>& flat, std::size_t d) {
  json rows = json::array();
  for (std::size_t i = 0; i < d; ++i) {
    rows.push_back(std::vector<double>(flat.begin() + static_cast<std::ptrdiff_t>(i * d),
                                       flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * d)));
  }
  return rows;
}

std::vector<double> flatten(const json& rows, std::size_t d, const char* what) {
  if (!rows.is_array() || rows.size() != d) throw ArgumentError(std::string(what) + ": expected 2^|support| rows");
  std::vector<double> out;
  out.reserve(d * d);
  for (const auto& r : rows) {
    if (!r.is_array() || r.size() != d) throw ArgumentError(std::string(what) + ": expected 2^|support| columns");
    for (const auto& v : r) out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

json hamiltonian_to_json(const LocalHamiltonian<double>& h) {
  json terms = json::array();
  for (const auto& t : h.terms()) {
    json term = {{"support", t.support()}, {"matrix_re", square(t.re(), t.dim())}};
    if (!t.is_real()) term["matrix_im"] = square(t.im(), t.dim());
    terms.push_back(term);
  }
  return {{"qubits", h.qubits()}, {"locality", h.locality()}, {"terms", terms}};
}

LocalHamiltonian<double> hamiltonian_from_json(const json& j) {
  const int n = j.at("qubits").get<int>();
  const int k = j.contains("locality") ? j.at("locality").get<int>() : -1;
  std::vector<LocalTerm<double>> terms;
  for (const auto& t : j.at("terms")) {
    auto support = t.at("support").get<std::vector<int>>();
    const std::size_t d = std::size_t{1} << support.size();
    auto re = flatten(t.at("matrix_re"), d, "matrix_re");
    std::vector<double> im;
    if (t.contains("matrix_im")) im = flatten(t.at("matrix_im"), d, "matrix_im");
    terms.emplace_back(std::move(support), std::move(re), std::move(im));
  }
  return LocalHamiltonian<double>(n, std::move(terms), k);
}

json instance_to_json(const Instance<double>& inst) {
  json j = hamiltonian_to_json(inst.hamiltonian);
  j["a"] = inst.a;
  j["b"] = inst.b;
  return j;
}

Instance<double> instance_from_json(const json& j) {
  return Instance<double>{hamiltonian_from_json(j), j.at("a").get<double>(), j.at("b").get<double>()};
}

json witness_to_json(const Witness<double>& w) {
  return {{"lambda_hat", w.lambda_hat}, {"oracle", w.oracle.descriptor()}, {"x_in", w.x_in.to_string()}};
}

Witness<double> witness_from_json(const json& j) {
  auto oracle = make_oracle(j.at("oracle"));
  const BasisIndex x = BasisIndex::parse(j.at("x_in").get<std::string>());
  require_width(x, oracle.qubits(), "witness x_in");
  return Witness<double>{j.at("lambda_hat").get<double>(), std::move(oracle), x};
}

json bundle_to_json(const Instance<double>& inst, const Witness<double>& w) {
  return {{"instance", instance_to_json(inst)}, {"witness", witness_to_json(w)}};
}

LocalHamiltonian<Rational> to_exact(const LocalHamiltonian<double>& h) {
  std::vector<LocalTerm<Rational>> terms;
  for (const auto& t : h.terms()) {
    std::vector<Rational> re, im;
    for (double v : t.re()) re.emplace_back(v);
    for (double v : t.im()) im.emplace_back(v);
    terms.emplace_back(t.support(), std::move(re), std::move(im));
  }
  return LocalHamiltonian<Rational>(h.qubits(), std::move(terms), h.locality());
}

Instance<Rational> to_exact(const Instance<double>& inst) {
  return Instance<Rational>{to_exact(inst.hamiltonian), Rational(inst.a), Rational(inst.b)};
}

Witness<Rational> to_exact(const Witness<double>& w) {
  const AmplitudeOracle<double> base = w.oracle;
  AmplitudeOracle<Rational> oracle(
      base.qubits(),
      [base](const BasisIndex& x) {
        const auto c = base.evaluate(x);
        if (!std::isfinite(c.re) || !std::isfinite(c.im)) throw NumericRangeError("exact oracle: non-finite amplitude");
        return Scalar<Rational>(Rational(c.re), Rational(c.im));
      },
      base.descriptor(), 64);
  return Witness<Rational>{Rational(w.lambda_hat), std::move(oracle), w.x_in};
}

json config_to_json(const VerifierConfig& cfg) {
  return {{"t", cfg.t},
          {"M", cfg.M},
          {"mode", to_string(cfg.mode)},
          {"delta", cfg.mode == Mode::kDiscrete ? cfg.grid_delta() : 0.0},
          {"trials", cfg.trials},
          {"seed", cfg.seed},
          {"format_bits", cfg.format_bits},
          {"tolerances",
           {{"zero", cfg.tolerances.zero}, {"herm", cfg.tolerances.herm}, {"column", cfg.tolerances.column}}}};
}

json trajectory_to_json(const Trajectory& t) {
  json events = json::array();
  for (const auto& e : t.events) events.push_back({{"t", e.time}, {"state", e.state.to_string()}});
  return {{"horizon", t.horizon},
          {"transitions", t.transitions},
          {"terminated_early", t.terminated_early},
          {"reason", t.reason},
          {"events", events}};
}

json trace_to_json(const VerdictTrace& t) {
  json j = {{"verdict", to_string(t.verdict)},
            {"reason", to_string(t.reason)},
            {"transitions", t.transitions},
            {"elapsed", t.elapsed},
            {"near_boundary", t.near_boundary},
            {"detail", t.detail}};
  if (t.trajectory) j["trajectory"] = trajectory_to_json(*t.trajectory);
  return j;
}

json estimate_to_json(const AcceptanceEstimate& e, bool include_traces) {
  json hist = json::object();
  for (std::size_t r = 0; r < kReasonCount; ++r) {
    const auto reason = static_cast<Reason>(r);
    if (reason == Reason::kOk) continue;
    hist[to_string(reason)] = e.histogram[r];
  }
  json j = {{"p_hat", e.p_hat},
            {"ci_half_width", e.ci_half_width},
            {"trials", e.trials},
            {"accepted", e.accepted},
            {"reject_histogram", hist},
            {"mean_transitions", e.mean_transitions},
            {"near_boundary", e.near_boundary}};
  if (include_traces) {
    json traces = json::array();
    for (const auto& t : e.traces) traces.push_back(trace_to_json(t));
    j["traces"] = traces;
  }
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ArgumentError("cannot parse " + path + ": " + e.what());
  }
}

}  // namespace fnv
