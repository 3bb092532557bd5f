// Copyright 2026 The fnv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "fnv/amplitude.hpp"
#include "fnv/hamiltonian.hpp"

namespace fnv {

/// H' = H_R (x) I + H_I (x) [[0,-1],[1,0]] on n+1 qubits; the ancilla is
/// qubit n. Real-valued and symmetric, with every eigenvalue of H doubled.
template <Real T>
LocalHamiltonian<T> realify(const LocalHamiltonian<T>& h) {
  const int n = h.qubits();
  if (n + 1 > kMaxQubits) throw ArgumentError("realify: ancilla would exceed 24 qubits");
  std::vector<LocalTerm<T>> out;
  out.reserve(h.term_count());
  for (const auto& term : h.terms()) {
    if (term.is_real()) {
      out.push_back(term);
      continue;
    }
    const std::size_t d = term.dim();
    const std::size_t nd = 2 * d;
    std::vector<T> re(nd * nd, T{});
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const auto v = term.at(i, j);
        re[(2 * i) * nd + 2 * j] = v.re;
        re[(2 * i + 1) * nd + 2 * j + 1] = v.re;
        // ancilla block [[0,-1],[1,0]] scaled by Im
        re[(2 * i) * nd + 2 * j + 1] = -v.im;
        re[(2 * i + 1) * nd + 2 * j] = v.im;
      }
    }
    std::vector<int> support = term.support();
    support.push_back(n);
    out.emplace_back(std::move(support), std::move(re), std::vector<T>{}, h.tolerances());
  }
  return LocalHamiltonian<T>(n + 1, std::move(out), h.locality() + 1, h.tolerances());
}

/// C_phi'(x.0) = Re C_phi(x), C_phi'(x.1) = Im C_phi(x).
template <Real T>
AmplitudeOracle<T> realify_state(const AmplitudeOracle<T>& phi) {
  const int n = phi.qubits();
  if (n + 1 > kMaxQubits) throw ArgumentError("realify_state: ancilla would exceed 24 qubits");
  auto fn = [phi, n](const BasisIndex& x) -> Scalar<T> {
    const Scalar<T> v = phi.evaluate(x.truncated());
    return Scalar<T>(x.bit(n) ? v.im : v.re);
  };
  nlohmann::json desc = nullptr;
  if (!phi.descriptor().is_null()) desc = {{"kind", "realified"}, {"base", phi.descriptor()}};
  return AmplitudeOracle<T>(n + 1, std::move(fn), std::move(desc), phi.bit_bound(), phi.tolerances());
}

}  // namespace fnv
