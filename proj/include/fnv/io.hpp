// Copyright 2026 The fnv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "fnv/dense_oracle.hpp"
#include "fnv/verifier.hpp"
#include "fnv/zoo.hpp"

namespace fnv {

// Instance: {qubits, locality, terms: [{support, matrix_re, matrix_im}], a, b}
nlohmann::json hamiltonian_to_json(const LocalHamiltonian<double>& h);
LocalHamiltonian<double> hamiltonian_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const Instance<double>& inst);
Instance<double> instance_from_json(const nlohmann::json& j);

// Witness: {lambda_hat, oracle: <descriptor>, x_in: "bits"}
nlohmann::json witness_to_json(const Witness<double>& w);
Witness<double> witness_from_json(const nlohmann::json& j);

// Bundle: {instance, witness}
nlohmann::json bundle_to_json(const Instance<double>& inst, const Witness<double>& w);

/// Exact copies of float data (every double is a dyadic rational).
LocalHamiltonian<Rational> to_exact(const LocalHamiltonian<double>& h);
Instance<Rational> to_exact(const Instance<double>& inst);
Witness<Rational> to_exact(const Witness<double>& w);

nlohmann::json config_to_json(const VerifierConfig& cfg);
nlohmann::json trajectory_to_json(const Trajectory& t);
nlohmann::json trace_to_json(const VerdictTrace& t);
nlohmann::json estimate_to_json(const AcceptanceEstimate& e, bool include_traces = false);

nlohmann::json read_json_file(const std::string& path);

}  // namespace fnv
