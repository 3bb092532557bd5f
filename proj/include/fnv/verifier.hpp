// Copyright 2026 The fnv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fnv/ctmc.hpp"
#include "fnv/fixed_node.hpp"
#include "fnv/parallel.hpp"
#include "fnv/sampling.hpp"

namespace fnv {

enum class Verdict { kAccept, kReject };

enum class Reason {
  kOk,
  kLambdaTooHigh,
  kOutOfSupport,
  kFormatBad,
  kIllegalColumn,
  kTransitionCap,
  kContractError,
};
inline constexpr std::size_t kReasonCount = 7;

enum class Mode { kContinuous, kDiscrete };

inline const char* to_string(Verdict v) { return v == Verdict::kAccept ? "ACCEPT" : "REJECT"; }

inline const char* to_string(Reason r) {
  static constexpr std::array<const char*, kReasonCount> names = {
      "OK", "LAMBDA_TOO_HIGH", "OUT_OF_SUPPORT", "FORMAT_BAD", "ILLEGAL_COLUMN", "TRANSITION_CAP", "CONTRACT_ERROR"};
  return names[static_cast<std::size_t>(r)];
}

inline const char* to_string(Mode m) { return m == Mode::kContinuous ? "continuous" : "discrete"; }

inline Mode parse_mode(std::string_view s) {
  if (s == "continuous") return Mode::kContinuous;
  if (s == "discrete") return Mode::kDiscrete;
  throw ArgumentError("unknown mode '" + std::string(s) + "' (expected continuous or discrete)");
}

/// (H, a, b): either lambda(H) <= a or lambda(H) >= b.
template <Real T>
struct Instance {
  LocalHamiltonian<T> hamiltonian;
  T a{};
  T b{};

  [[nodiscard]] T epsilon() const { return b - a; }

  void validate(double min_gap = 1e-3) const {
    if (!hamiltonian.is_real()) throw ArgumentError("Instance: Hamiltonian must be real; realify first");
    if (!std::isfinite(hamiltonian.norm_bound())) throw ArgumentError("Instance: norm bound is not finite");
    if (to_double(epsilon()) < min_gap) {
      throw ArgumentError("Instance: promise gap b - a is below the configured floor");
    }
  }
};

/// The prover's message: claimed ground energy, claimed ground state, start string.
template <Real T>
struct Witness {
  T lambda_hat{};
  AmplitudeOracle<T> oracle;
  BasisIndex x_in;
};

struct VerifierConfig {
  double t = 0.0;               ///< horizon; <= 0 selects ceil(10 n / eps)
  std::uint64_t M = 0;          ///< transition cap; 0 selects 2^k m n^3 t ||H||
  Mode mode = Mode::kContinuous;
  double delta_factor = 1e-6;   ///< discrete grid: delta = delta_factor * t
  double delta = 0.0;           ///< explicit grid spacing, overrides delta_factor
  Tolerances tolerances;
  int format_bits = 0;          ///< 0 selects 64 (exact) or 60 (float)
  std::uint64_t trials = 400;
  std::uint64_t seed = 0;
  bool record_trajectory = false;
  double min_gap = 1e-3;
  // search_x_in
  std::uint64_t candidates = 4;
  std::uint64_t pilot_trials = 16;
  std::uint64_t burn_in = 256;
  std::uint64_t thinning = 8;

  void validate() const {
    if (!(t > 0.0)) throw ArgumentError("VerifierConfig: t must be positive");
    if (M < 1) throw ArgumentError("VerifierConfig: M must be at least 1");
    if (mode == Mode::kDiscrete && !(grid_delta() > 0.0)) throw ArgumentError("VerifierConfig: delta must be positive");
  }

  [[nodiscard]] double grid_delta() const { return delta > 0.0 ? delta : delta_factor * t; }
};

struct VerdictTrace {
  Verdict verdict = Verdict::kReject;
  Reason reason = Reason::kContractError;
  std::uint64_t transitions = 0;
  double elapsed = 0.0;
  std::uint64_t near_boundary = 0;  ///< columns legal only thanks to the tolerance
  std::string detail;
  std::optional<Trajectory> trajectory;

  friend bool operator==(const VerdictTrace& a, const VerdictTrace& b) {
    auto same_traj = [](const std::optional<Trajectory>& x, const std::optional<Trajectory>& y) {
      if (x.has_value() != y.has_value()) return false;
      if (!x) return true;
      if (x->events.size() != y->events.size() || x->transitions != y->transitions) return false;
      for (std::size_t i = 0; i < x->events.size(); ++i) {
        if (x->events[i].time != y->events[i].time || x->events[i].state != y->events[i].state) return false;
      }
      return true;
    };
    return a.verdict == b.verdict && a.reason == b.reason && a.transitions == b.transitions &&
           a.elapsed == b.elapsed && a.near_boundary == b.near_boundary && same_traj(a.trajectory, b.trajectory);
  }
};

/// Default horizon ceil(10 n / eps).
inline double default_horizon(int n, double eps) {
  if (!(eps > 0.0)) throw ArgumentError("default_horizon: eps must be positive");
  return std::ceil(10.0 * n / eps);
}

/// M = 2^k m n^3 t ||H|| (rounded up, at least 1).
template <Real T>
std::uint64_t transition_cap(const LocalHamiltonian<T>& h, double t) {
  const double n = h.qubits();
  const double value = static_cast<double>(h.sparsity_bound()) * n * n * n * t * h.norm_bound();
  if (!(value < 1.8e19)) return UINT64_MAX;
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(value)));
}

template <Real T>
int effective_format_bits(const VerifierConfig& cfg) {
  if (cfg.format_bits > 0) return cfg.format_bits;
  return kExact<T> ? 64 : 60;
}

/// Output of the preprocessing step: H := H^ - lambda^ I on success.
template <Real T>
struct Prepared {
  Reason reason = Reason::kOk;
  std::optional<LocalHamiltonian<T>> hamiltonian;
  std::optional<AmplitudeOracle<T>> oracle;
  T epsilon{};

  [[nodiscard]] bool rejected() const { return reason != Reason::kOk; }
};

/// Rejects when lambda^ > a. Otherwise all identity terms of H^ are folded
/// with -lambda^ into one trailing identity term, so (H^ + cI, lambda^ + c)
/// preprocesses to the same operator whenever the sums are exact.
template <Real T>
Prepared<T> preprocess(const Instance<T>& inst, const Witness<T>& w) {
  Prepared<T> out;
  out.epsilon = inst.epsilon();
  if (w.lambda_hat > inst.a) {
    out.reason = Reason::kLambdaTooHigh;
    return out;
  }
  const auto& h = inst.hamiltonian;
  std::vector<LocalTerm<T>> terms;
  terms.reserve(h.term_count() + 1);
  T offset{};
  for (const auto& term : h.terms()) {
    if (term.support().empty()) {
      offset += term.re()[0];
    } else {
      terms.push_back(term);
    }
  }
  offset += -w.lambda_hat;
  terms.push_back(LocalTerm<T>::identity(offset));
  out.hamiltonian.emplace(h.qubits(), std::move(terms), h.locality(), h.tolerances());
  out.oracle.emplace(w.oracle);
  return out;
}

/// Fills t, M and format_bits from the instance when left at 0.
template <Real T>
VerifierConfig resolve_config(VerifierConfig cfg, const LocalHamiltonian<T>& shifted, double eps) {
  if (!(cfg.t > 0.0)) cfg.t = default_horizon(shifted.qubits(), eps);
  if (cfg.M == 0) cfg.M = transition_cap(shifted, cfg.t);
  if (cfg.format_bits <= 0) cfg.format_bits = effective_format_bits<T>(cfg);
  cfg.validate();
  return cfg;
}

/// The checked random walk. Rejection lines fire in the order support,
/// format, column, transition cap; the unshifted generator G is used.
template <Real T>
VerdictTrace verify_run(const LocalHamiltonian<T>& h, const AmplitudeOracle<T>& phi, const BasisIndex& x_in,
                        const VerifierConfig& cfg, RngStream& rng) {
  cfg.validate();
  VerdictTrace trace;
  const int bits = effective_format_bits<T>(cfg);
  const Tolerances& tol = h.tolerances();
  const GeneratorView<T> g(FixedNodeView<T>(h, phi.with_tolerances(tol)));
  std::optional<DiscParamsFn> disc;
  if (cfg.mode == Mode::kDiscrete) disc = fixed_grid(cfg.t, cfg.grid_delta());

  auto reject = [&](Reason r, double time, std::string detail = {}) {
    trace.verdict = Verdict::kReject;
    trace.reason = r;
    trace.elapsed = time;
    trace.detail = std::move(detail);
    return trace;
  };

  if (cfg.record_trajectory) {
    trace.trajectory.emplace();
    trace.trajectory->horizon = cfg.t;
    trace.trajectory->events.push_back({0.0, x_in});
  }
  double time = 0.0;
  try {
    require_width(x_in, h.qubits(), "verify_run");
    if (!phi.in_support(x_in)) return reject(Reason::kOutOfSupport, 0.0, x_in.to_string());
    BasisIndex x = x_in;
    for (;;) {
      const Scalar<T> c = phi.evaluate(x);
      if (c.im != T{} || !is_finite(c.re) || !representable(c.re, bits)) {
        return reject(Reason::kFormatBad, time, x.to_string());
      }
      const GeneratorColumn<T> col = g.column(x);
      const ColumnCheck chk = check_column(col, tol);
      if (!chk.legal) return reject(Reason::kIllegalColumn, time, std::string(to_string(chk.reason)) + " at " + x.to_string());
      if (chk.near_boundary) ++trace.near_boundary;
      if (trace.transitions >= cfg.M) return reject(Reason::kTransitionCap, time);
      if (is_absorbing(col, tol)) {
        time = cfg.t;
        break;
      }
      const double rate = exit_rate(col);
      const double w = disc ? sample_disc_exp(rng, (*disc)(rate)) : rng.sample_waiting_time(rate);
      if (time + w >= cfg.t) {
        time += w;
        break;
      }
      time += w;
      x = choose_target(col, rng.sample_uniform());
      ++trace.transitions;
      if (trace.trajectory) {
        trace.trajectory->events.push_back({time, x});
        trace.trajectory->transitions = trace.transitions;
      }
    }
  } catch (const NumericRangeError& e) {
    return reject(Reason::kContractError, time, e.what());
  } catch (const ContractViolation& e) {
    return reject(Reason::kContractError, time, e.what());
  }
  trace.verdict = Verdict::kAccept;
  trace.reason = Reason::kOk;
  trace.elapsed = time;
  return trace;
}

struct AcceptanceEstimate {
  double p_hat = 0.0;
  double ci_half_width = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t accepted = 0;
  std::array<std::uint64_t, kReasonCount> histogram{};  ///< indexed by Reason
  double mean_transitions = 0.0;
  std::uint64_t near_boundary = 0;
  VerifierConfig config;  ///< resolved
  std::vector<VerdictTrace> traces;

  [[nodiscard]] std::uint64_t count(Reason r) const { return histogram[static_cast<std::size_t>(r)]; }
};

/// Runs cfg.trials independent verify_run calls; trial i uses stream i of cfg.seed.
template <Real T>
AcceptanceEstimate estimate_acceptance(const Instance<T>& inst, const Witness<T>& w, const VerifierConfig& cfg,
                                       bool keep_traces = false) {
  if (cfg.trials < 1) throw ArgumentError("estimate_acceptance: trials must be at least 1");
  inst.validate(cfg.min_gap);
  AcceptanceEstimate est;
  est.trials = cfg.trials;
  const Prepared<T> prep = preprocess(inst, w);
  if (prep.rejected()) {
    est.config = cfg;
    est.histogram[static_cast<std::size_t>(prep.reason)] = cfg.trials;
    if (keep_traces) {
      VerdictTrace tr;
      tr.reason = prep.reason;
      est.traces.assign(cfg.trials, tr);
    }
    return est;
  }
  est.config = resolve_config(cfg, *prep.hamiltonian, to_double(prep.epsilon));
  std::vector<VerdictTrace> traces(cfg.trials);
  parallel_for(cfg.trials, [&](std::uint64_t i) {
    RngStream rng(est.config.seed, i);
    traces[i] = verify_run(*prep.hamiltonian, *prep.oracle, w.x_in, est.config, rng);
  });
  double total_transitions = 0.0;
  for (const auto& tr : traces) {
    ++est.histogram[static_cast<std::size_t>(tr.reason)];
    if (tr.verdict == Verdict::kAccept) ++est.accepted;
    total_transitions += static_cast<double>(tr.transitions);
    est.near_boundary += tr.near_boundary;
  }
  const double n = static_cast<double>(cfg.trials);
  est.p_hat = static_cast<double>(est.accepted) / n;
  est.ci_half_width = 1.96 * std::sqrt(est.p_hat * (1.0 - est.p_hat) / n);
  est.mean_transitions = total_transitions / n;
  if (keep_traces) est.traces = std::move(traces);
  return est;
}

/// Honest-prover helper: Metropolis sampling of x ~ |C(x)|^2 mixing single
/// bit flips with moves along nonzero entries of H, then a pilot batch of
/// verify_run per distinct candidate. Highest pilot acceptance wins; ties go
/// to the smallest string.
template <Real T>
BasisIndex search_x_in(const LocalHamiltonian<T>& h, const AmplitudeOracle<T>& phi, const VerifierConfig& cfg,
                       RngStream& rng, std::uint64_t candidates, std::optional<BasisIndex> hint = std::nullopt) {
  const int n = h.qubits();
  if (candidates < 1) throw ArgumentError("search_x_in: need at least one candidate");
  auto weight = [&](const BasisIndex& x) {
    const Scalar<T> c = phi.evaluate(x);
    const double re = to_double(c.re);
    const double im = to_double(c.im);
    return re * re + im * im;
  };
  auto in_s = [&](const BasisIndex& x) { return phi.in_support(x); };
  auto neighbours = [&](const BasisIndex& x) {
    std::vector<BasisIndex> out;
    for (const auto& e : h.row_nonzeros(x)) {
      if (e.index != x) out.push_back(e.index);
    }
    return out;
  };

  // Starting point inside S.
  std::optional<BasisIndex> start;
  if (hint && hint->width() == n && in_s(*hint)) start = *hint;
  for (int i = 0; !start && i < 4096; ++i) {
    const BasisIndex x(static_cast<std::uint32_t>(rng.next_u64() & ((std::uint64_t{1} << n) - 1)), n);
    if (in_s(x)) start = x;
  }
  if (!start && n <= 20) {
    for (std::uint32_t b = 0; b < (1u << n); ++b) {
      if (in_s(BasisIndex(b, n))) {
        start = BasisIndex(b, n);
        break;
      }
    }
  }
  if (!start) throw SupportError("search_x_in: no candidate string lies in supp(phi)");

  // q(x -> y) for the mixed proposal.
  auto proposal = [&](const BasisIndex& x, const BasisIndex& y, const std::vector<BasisIndex>& nx) {
    double q = 0.0;
    if (n > 0 && std::popcount(x.bits() ^ y.bits()) == 1) q += 0.5 / n;
    if (!nx.empty() && std::find(nx.begin(), nx.end(), y) != nx.end()) q += 0.5 / static_cast<double>(nx.size());
    return q;
  };

  BasisIndex x = *start;
  double wx = weight(x);
  std::vector<BasisIndex> nx = neighbours(x);
  auto step = [&] {
    BasisIndex y;
    const bool flip = n > 0 && (nx.empty() || rng.sample_uniform() < 0.5);
    if (flip) {
      y = x.flipped(static_cast<int>(rng.sample_uniform() * n));
    } else if (!nx.empty()) {
      y = nx[static_cast<std::size_t>(rng.sample_uniform() * static_cast<double>(nx.size()))];
    } else {
      return;
    }
    const double wy = weight(y);
    if (wy == 0.0 || !in_s(y)) {
      (void)rng.sample_uniform();
      return;
    }
    const std::vector<BasisIndex> ny = neighbours(y);
    const double fwd = nx.empty() ? (n > 0 ? 1.0 / n : 0.0) : proposal(x, y, nx);
    const double back = ny.empty() ? (n > 0 && std::popcount(x.bits() ^ y.bits()) == 1 ? 1.0 / n : 0.0)
                                   : proposal(y, x, ny);
    const double accept = fwd > 0.0 ? (wy * back) / (wx * fwd) : 0.0;
    if (rng.sample_uniform() < accept) {
      x = y;
      wx = wy;
      nx = ny;
    }
  };
  for (std::uint64_t i = 0; i < cfg.burn_in; ++i) step();
  std::vector<BasisIndex> pool;
  for (std::uint64_t c = 0; c < candidates; ++c) {
    for (std::uint64_t i = 0; i < std::max<std::uint64_t>(1, cfg.thinning); ++i) step();
    if (std::find(pool.begin(), pool.end(), x) == pool.end()) pool.push_back(x);
  }
  std::sort(pool.begin(), pool.end());
  if (pool.size() == 1 || cfg.pilot_trials == 0) return pool.front();

  const std::uint64_t pilot_seed = rng.next_u64();
  BasisIndex best = pool.front();
  std::uint64_t best_accepts = 0;
  bool first = true;
  for (const auto& cand : pool) {
    std::uint64_t accepts = 0;
    for (std::uint64_t i = 0; i < cfg.pilot_trials; ++i) {
      RngStream pilot(pilot_seed, i);
      if (verify_run(h, phi, cand, cfg, pilot).verdict == Verdict::kAccept) ++accepts;
    }
    if (first || accepts > best_accepts) {
      best = cand;
      best_accepts = accepts;
      first = false;
    }
  }
  return best;
}

}  // namespace fnv
