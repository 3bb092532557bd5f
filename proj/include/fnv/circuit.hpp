// Copyright 2026 The fnv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace fnv {

enum class GateKind { kId, kNot, kCnot, kToffoli };

/// Classical reversible gate. For CNOT and Toffoli the controls come first and
/// the target last.
struct Gate {
  GateKind kind = GateKind::kId;
  std::vector<int> wires;

  [[nodiscard]] std::uint32_t apply(std::uint32_t bits) const;
  /// Every gate here is its own inverse.
  [[nodiscard]] std::uint32_t apply_inverse(std::uint32_t bits) const { return apply(bits); }
};

const char* to_string(GateKind k);
GateKind parse_gate_kind(const std::string& s);

class ReversibleCircuit {
 public:
  ReversibleCircuit(int wires, std::vector<Gate> gates);

  [[nodiscard]] int wires() const { return wires_; }
  [[nodiscard]] const std::vector<Gate>& gates() const { return gates_; }
  [[nodiscard]] int size() const { return static_cast<int>(gates_.size()); }

  /// R_t ... R_1 applied to `bits`.
  [[nodiscard]] std::uint32_t run_prefix(std::uint32_t bits, int t) const;
  /// (R_t ... R_1)^{-1} applied to `bits`.
  [[nodiscard]] std::uint32_t undo_prefix(std::uint32_t bits, int t) const;

  [[nodiscard]] nlohmann::json to_json() const;
  static ReversibleCircuit from_json(const nlohmann::json& j);

 private:
  int wires_;
  std::vector<Gate> gates_;
};

}  // namespace fnv
