// Copyright 2026 The fnv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <array>
#include <string>
#include <vector>

#include "fnv/circuit.hpp"
#include "fnv/sampling.hpp"
#include "fnv/verifier.hpp"

namespace fnv {

/// Components below this magnitude are dropped from dense ground states.
inline constexpr double kSupportCutoff = 1e-10;

using LocalState = std::array<double, 2>;

struct YesFixture {
  std::string name;
  Instance<double> instance;
  Witness<double> witness;
};

// Oracle descriptors. Every oracle built by make_oracle carries its own
// descriptor, so oracle -> descriptor -> oracle reproduces amplitudes exactly.
nlohmann::json product_descriptor(const std::vector<LocalState>& factors,
                                  const std::vector<LocalState>& factors_im = {});
nlohmann::json lookup_descriptor(int qubits, const std::vector<double>& table);
nlohmann::json superposition_descriptor(int qubits, const std::vector<std::pair<BasisIndex, Scalar<double>>>& terms);
nlohmann::json history_descriptor(const ReversibleCircuit& c, int ancillas, int coins, const std::string& witness_bits);

AmplitudeOracle<double> make_oracle(const nlohmann::json& descriptor);

/// Dense vector (full basis order) as a lookup-table oracle; entries with
/// magnitude <= kSupportCutoff become exact zeros.
AmplitudeOracle<double> vector_oracle(int qubits, const Eigen::VectorXd& v);

/// The string with the largest |C(x)| (smallest on ties), by enumeration.
BasisIndex max_amplitude_string(const AmplitudeOracle<double>& phi);

struct RandomHamiltonianOptions {
  int locality = 2;       ///< terms on every subset of this size, plus one-qubit terms
  bool complex = false;   ///< random imaginary parts
  double scale = 1.0;     ///< entries uniform on [-scale, scale]
};

LocalHamiltonian<double> random_local_hamiltonian(int n, RngStream& rng, const RandomHamiltonianOptions& opts = {});

/// Random real local pair with random signs and magnitudes in [0.2, 1].
std::vector<LocalState> random_product_state(int n, RngStream& rng);

/// Smallest eigenvalue above `lambda` + 1e-8 (dense, n <= max_qubits), else `fallback`.
double next_eigenvalue(const LocalHamiltonian<double>& h, double lambda, double fallback, int max_qubits = 10);

/// Frustration-free parent of a product state: one-qubit projectors
/// I - |psi_i><psi_i| plus `extra` weighted two-qubit projectors on
/// neighbouring pairs that annihilate the product state (-1: n - 1 of them).
YesFixture make_product_yes(int n, const std::vector<LocalState>& local_states, RngStream& rng, int extra = -1);

/// H - lambda(H) I + eps I with a = 0, b = eps (dense certification, n <= 10).
Instance<double> shift_to_no_instance(const LocalHamiltonian<double>& h, double eps);
Instance<double> make_no_instance(int n, double eps, RngStream& rng, int locality = 2);

enum class AdversaryFamily {
  kPerturbedGround,   ///< ground state of a perturbed Hamiltonian
  kRandomProduct,     ///< random signed product state
  kSignFlippedGround, ///< true ground state with random sign errors
  kHonestGround,      ///< true ground state, lambda_hat = a
  kHarmonicTrap,      ///< H phi = 0 everywhere except at one string
};

const char* to_string(AdversaryFamily f);

struct NamedWitness {
  AdversaryFamily family;
  Witness<double> witness;
};

/// Soundness stress witnesses. All claim lambda_hat = a and start at the
/// largest-amplitude string. `families` cycles when count exceeds its size.
std::vector<NamedWitness> adversarial_witnesses(const Instance<double>& inst, RngStream& rng, std::size_t count,
                                                const std::vector<AdversaryFamily>& families = {});

/// A witness whose oracle is zero everywhere.
Witness<double> zero_support_witness(const Instance<double>& inst);

struct HistoryOptions {
  bool output_term = false;
  int output_wire = 0;
  double fallback_gap = 0.0;  ///< b - a when the instance is too large to diagonalize (0: reject)
};

/// Unary-clock history-state Hamiltonian of a reversible circuit. Data wires
/// are [ancillas | coins | witness]; clock qubit j (1-based) is wire
/// circuit.wires() + j - 1.
YesFixture circuit_to_hamiltonian(const ReversibleCircuit& c, int coins, const std::string& witness_bits,
                                  const HistoryOptions& opts = {});

}  // namespace fnv
