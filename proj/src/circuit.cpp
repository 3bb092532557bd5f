// Copyright 2026 The fnv Authors
// SPDX-License-Identifier: Apache-2.0

#include "fnv/circuit.hpp"

#include <algorithm>

#include "fnv/errors.hpp"

namespace fnv {

namespace {

std::size_t arity(GateKind k) {
  switch (k) {
    case GateKind::kId: return 0;
    case GateKind::kNot: return 1;
    case GateKind::kCnot: return 2;
    case GateKind::kToffoli: return 3;
  }
  return 0;
}

bool bit(std::uint32_t bits, int w) { return ((bits >> w) & 1u) != 0; }

}  // namespace

const char* to_string(GateKind k) {
  switch (k) {
    case GateKind::kId: return "ID";
    case GateKind::kNot: return "NOT";
    case GateKind::kCnot: return "CNOT";
    case GateKind::kToffoli: return "TOFFOLI";
  }
  return "?";
}

GateKind parse_gate_kind(const std::string& s) {
  if (s == "ID") return GateKind::kId;
  if (s == "NOT") return GateKind::kNot;
  if (s == "CNOT") return GateKind::kCnot;
  if (s == "TOFFOLI") return GateKind::kToffoli;
  throw ArgumentError("unknown gate '" + s + "'");
}

std::uint32_t Gate::apply(std::uint32_t bits) const {
  switch (kind) {
    case GateKind::kId: return bits;
    case GateKind::kNot: return bits ^ (1u << wires[0]);
    case GateKind::kCnot: return bit(bits, wires[0]) ? bits ^ (1u << wires[1]) : bits;
    case GateKind::kToffoli:
      return bit(bits, wires[0]) && bit(bits, wires[1]) ? bits ^ (1u << wires[2]) : bits;
  }
  return bits;
}

ReversibleCircuit::ReversibleCircuit(int wires, std::vector<Gate> gates) : wires_(wires), gates_(std::move(gates)) {
  if (wires < 1 || wires > 24) throw ArgumentError("ReversibleCircuit: wire count must lie in [1, 24]");
  for (const auto& g : gates_) {
    if (g.wires.size() != arity(g.kind)) throw ArgumentError("ReversibleCircuit: wrong number of wires for gate");
    for (std::size_t i = 0; i < g.wires.size(); ++i) {
      if (g.wires[i] < 0 || g.wires[i] >= wires) throw ArgumentError("ReversibleCircuit: wire index out of range");
      for (std::size_t j = 0; j < i; ++j) {
        if (g.wires[i] == g.wires[j]) throw ArgumentError("ReversibleCircuit: gate wires must be distinct");
      }
    }
  }
}

std::uint32_t ReversibleCircuit::run_prefix(std::uint32_t bits, int t) const {
  for (int i = 0; i < t; ++i) bits = gates_[static_cast<std::size_t>(i)].apply(bits);
  return bits;
}

std::uint32_t ReversibleCircuit::undo_prefix(std::uint32_t bits, int t) const {
  for (int i = t - 1; i >= 0; --i) bits = gates_[static_cast<std::size_t>(i)].apply_inverse(bits);
  return bits;
}

nlohmann::json ReversibleCircuit::to_json() const {
  nlohmann::json gates = nlohmann::json::array();
  for (const auto& g : gates_) gates.push_back({{"gate", to_string(g.kind)}, {"wires", g.wires}});
  return {{"wires", wires_}, {"gates", gates}};
}

ReversibleCircuit ReversibleCircuit::from_json(const nlohmann::json& j) {
  std::vector<Gate> gates;
  for (const auto& g : j.at("gates")) {
    gates.push_back({parse_gate_kind(g.at("gate").get<std::string>()), g.at("wires").get<std::vector<int>>()});
  }
  return ReversibleCircuit(j.at("wires").get<int>(), std::move(gates));
}

}  // namespace fnv
