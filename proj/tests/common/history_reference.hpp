// Copyright 2026 The fnv Authors
// SPDX-License-Identifier: Apache-2.0

// Independent forward simulation of a history state, for comparison with
// the history_state oracle.

#pragma once

#include <string>

#include <Eigen/Dense>

#include "fnv/basis.hpp"
#include "fnv/circuit.hpp"

namespace fnv::testing {

/// sum_t sum_coins |R_t..R_1 (0^anc, coins, w)> |1^t 0^(T-t)>, unnormalized.
inline Eigen::VectorXd explicit_history_vector(const ReversibleCircuit& c, int coins, const std::string& witness) {
  const int p = c.wires();
  const int T = c.size();
  const int anc = p - coins - static_cast<int>(witness.size());
  const std::uint32_t w = witness.empty() ? 0u : BasisIndex::parse(witness).bits();
  Eigen::VectorXd v = Eigen::VectorXd::Zero(Eigen::Index{1} << (p + T));
  for (std::uint32_t coin = 0; coin < (1u << coins); ++coin) {
    std::uint32_t data = (coin << anc) | (w << (anc + coins));
    for (int t = 0; t <= T; ++t) {
      if (t > 0) data = c.gates()[static_cast<std::size_t>(t - 1)].apply(data);
      const std::uint32_t clock = (1u << t) - 1u;
      v(static_cast<Eigen::Index>(data | (clock << p))) += 1.0;
    }
  }
  return v;
}

}  // namespace fnv::testing
