// Copyright 2026 The fnv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fnv/fixed_node.hpp"
#include "fnv/sampling.hpp"

namespace fnv {

struct Event {
  double time = 0.0;
  BasisIndex state;
};

/// Piecewise-constant path xi(s) on [0, horizon]: events[0] = (0, x_in), one
/// event per state change.
struct Trajectory {
  std::vector<Event> events;
  double horizon = 0.0;
  std::uint64_t transitions = 0;
  bool terminated_early = false;
  std::string reason;

  /// Rightmost event with time <= s.
  [[nodiscard]] const BasisIndex& state_at(double s) const {
    std::size_t i = 0;
    while (i + 1 < events.size() && events[i + 1].time <= s) ++i;
    return events[i].state;
  }
  [[nodiscard]] const BasisIndex& final_state() const { return events.back().state; }
};

inline constexpr std::uint64_t kDefaultMaxTransitions = 10'000'000;

/// Dense generator given column by column, for tests and small examples.
/// g[y][x] is the rate from x to y.
class ExplicitGenerator {
 public:
  using value_type = double;

  ExplicitGenerator(int qubits, std::vector<std::vector<double>> g, Tolerances tol = {})
      : qubits_(qubits), g_(std::move(g)), tol_(tol) {
    const std::size_t dim = std::size_t{1} << qubits;
    if (g_.size() != dim) throw ArgumentError("ExplicitGenerator: expected 2^n rows");
    for (const auto& row : g_) {
      if (row.size() != dim) throw ArgumentError("ExplicitGenerator: expected a square matrix");
    }
  }

  [[nodiscard]] int qubits() const { return qubits_; }
  [[nodiscard]] const Tolerances& tolerances() const { return tol_; }
  [[nodiscard]] double entry(const BasisIndex& x, const BasisIndex& y) const { return g_[y.bits()][x.bits()]; }

  [[nodiscard]] GeneratorColumn<double> column(const BasisIndex& x) const {
    require_width(x, qubits_, "ExplicitGenerator");
    GeneratorColumn<double> col;
    col.source = x;
    col.diagonal = g_[x.bits()][x.bits()];
    for (std::uint32_t y = 0; y < g_.size(); ++y) {
      if (y == x.bits() || g_[y][x.bits()] == 0.0) continue;
      col.off_diagonal.push_back({BasisIndex(y, qubits_), g_[y][x.bits()]});
    }
    return col;
  }

 private:
  int qubits_;
  std::vector<std::vector<double>> g_;
  Tolerances tol_;
};

/// Total outgoing rate |G_xx| of a column, as a double.
template <Real T>
double exit_rate(const GeneratorColumn<T>& col) {
  return std::abs(to_double(col.diagonal));
}

/// True when the column's diagonal counts as zero (hold to the horizon).
template <Real T>
bool is_absorbing(const GeneratorColumn<T>& col, const Tolerances& tol) {
  return is_zero(col.diagonal, tol);
}

/// Picks y with probability rate(y)/sum of rates, scanning targets in
/// ascending order. u is uniform on [0,1).
template <Real T>
BasisIndex choose_target(const GeneratorColumn<T>& col, double u) {
  if (col.off_diagonal.empty()) {
    throw ContractViolation("ctmc: nonzero exit rate with no outgoing transitions at " + col.source.to_string());
  }
  double total = 0.0;
  for (const auto& e : col.off_diagonal) total += to_double(e.value);
  const double target = u * total;
  double cum = 0.0;
  for (const auto& e : col.off_diagonal) {
    cum += to_double(e.value);
    if (target < cum) return e.index;
  }
  return col.off_diagonal.back().index;
}

namespace detail {

/// Shared Gillespie loop. `wait(rate)` returns the next waiting time.
template <class Gen, class Wait>
Trajectory run_legal(const Gen& g, const BasisIndex& x_in, double t, RngStream& rng,
                     std::uint64_t max_transitions, Wait&& wait, bool strict_times) {
  if (!(t > 0.0)) throw ArgumentError("gillespie_run: horizon must be positive");
  Trajectory traj;
  traj.horizon = t;
  traj.events.push_back({0.0, x_in});
  BasisIndex x = x_in;
  double time = 0.0;
  for (;;) {
    const auto col = g.column(x);
    const ColumnCheck chk = check_column(col, g.tolerances());
    if (!chk.legal) {
      throw ContractViolation(std::string("gillespie_run: illegal generator column (") + to_string(chk.reason) +
                              ") at " + x.to_string());
    }
    if (is_absorbing(col, g.tolerances())) break;
    const double w = wait(exit_rate(col));
    if (time + w >= t) break;
    if (traj.transitions >= max_transitions) {
      traj.terminated_early = true;
      traj.reason = "max_transitions";
      break;
    }
    const double next_time = time + w;
    if (strict_times && !(next_time > time)) {
      throw ContractViolation("gillespie_run: waiting time underflow");
    }
    time = next_time;
    x = choose_target(col, rng.sample_uniform());
    ++traj.transitions;
    traj.events.push_back({time, x});
  }
  return traj;
}

}  // namespace detail

/// Gillespie's algorithm with exponential waiting times. For legal
/// generators only: an illegal column raises ContractViolation.
template <class Gen>
Trajectory gillespie_run(const Gen& g, const BasisIndex& x_in, double t, RngStream& rng,
                         std::uint64_t max_transitions = kDefaultMaxTransitions) {
  return detail::run_legal(
      g, x_in, t, rng, max_transitions, [&](double rate) { return rng.sample_waiting_time(rate); }, true);
}

using DiscParamsFn = std::function<DiscExpParams(double rate)>;

/// Grid delta and truncation K = ceil(2t/delta) for every rate.
inline DiscParamsFn fixed_grid(double t, double delta) {
  if (!(delta > 0.0)) throw ArgumentError("fixed_grid: delta must be positive");
  const auto K = static_cast<std::uint64_t>(std::ceil(2.0 * t / delta));
  return [=](double rate) { return DiscExpParams{K < 1 ? 1 : K, delta, rate}; };
}

/// Discretized Gillespie: waiting times drawn from D_{K,delta,rate}.
template <class Gen>
Trajectory gillespie_run_discrete(const Gen& g, const BasisIndex& x_in, double t, RngStream& rng,
                                  const DiscParamsFn& params_fn,
                                  std::uint64_t max_transitions = kDefaultMaxTransitions) {
  return detail::run_legal(
      g, x_in, t, rng, max_transitions,
      [&](double rate) { return sample_disc_exp(rng, params_fn(rate)); }, false);
}

/// Distribution of xi(s) over trajectories that did not terminate early.
inline std::map<BasisIndex, double> empirical_marginal(const std::vector<Trajectory>& trajs, double s) {
  if (s < 0.0) throw ArgumentError("empirical_marginal: s must be non-negative");
  std::map<BasisIndex, double> counts;
  std::uint64_t used = 0;
  for (const auto& tr : trajs) {
    if (s > tr.horizon) throw ArgumentError("empirical_marginal: s exceeds a trajectory horizon");
    if (tr.terminated_early) continue;
    counts[tr.state_at(s)] += 1.0;
    ++used;
  }
  if (used > 0) {
    for (auto& [k, v] : counts) v /= static_cast<double>(used);
  }
  return counts;
}

}  // namespace fnv
