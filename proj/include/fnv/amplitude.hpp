// Copyright 2026 The fnv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <nlohmann/json.hpp>

#include <functional>
#include <utility>

#include "fnv/basis.hpp"
#include "fnv/numeric.hpp"

namespace fnv {

/// Evaluates C_phi(x), the amplitude of a succinct state up to a common
/// factor. Evaluation must be deterministic and re-entrant.
template <Real T>
class AmplitudeOracle {
 public:
  using Function = std::function<Scalar<T>(const BasisIndex&)>;

  AmplitudeOracle(int qubits, Function fn, nlohmann::json descriptor = nullptr,
                  int bit_bound = 64, Tolerances tol = {})
      : qubits_(qubits), fn_(std::move(fn)), descriptor_(std::move(descriptor)),
        bit_bound_(bit_bound), tol_(tol) {
    if (qubits < 0 || qubits > kMaxQubits) throw ArgumentError("AmplitudeOracle: qubit count must lie in [0, 24]");
    if (!fn_) throw ArgumentError("AmplitudeOracle: empty evaluator");
  }

  [[nodiscard]] Scalar<T> evaluate(const BasisIndex& x) const {
    require_width(x, qubits_, "AmplitudeOracle");
    return fn_(x);
  }
  Scalar<T> operator()(const BasisIndex& x) const { return evaluate(x); }

  /// supp(x): C_phi(x) != 0 (within tau_zero in float mode).
  [[nodiscard]] bool in_support(const BasisIndex& x) const { return !is_zero(evaluate(x), tol_); }

  [[nodiscard]] int qubits() const { return qubits_; }
  [[nodiscard]] const nlohmann::json& descriptor() const { return descriptor_; }
  [[nodiscard]] int bit_bound() const { return bit_bound_; }
  [[nodiscard]] const Tolerances& tolerances() const { return tol_; }

  [[nodiscard]] AmplitudeOracle with_tolerances(const Tolerances& tol) const {
    AmplitudeOracle copy = *this;
    copy.tol_ = tol;
    return copy;
  }

 private:
  int qubits_;
  Function fn_;
  nlohmann::json descriptor_;
  int bit_bound_;
  Tolerances tol_;
};

}  // namespace fnv
