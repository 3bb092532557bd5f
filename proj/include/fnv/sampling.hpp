// Copyright 2026 The fnv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

namespace fnv {

/// splitmix64 finalizer, used to derive stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// One reproducible random stream per (master_seed, stream_id). The engine is
/// std::mt19937_64, whose output sequence is fixed by the C++ standard.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0,1) with 53 random bits.
  double sample_uniform();

  /// Uniform on (0,1): u = 0 is resampled.
  double sample_open_uniform();

  /// Exp(rate) computed as ln(1/u)/rate.
  double sample_waiting_time(double rate);

  [[nodiscard]] std::uint64_t master_seed() const { return master_; }
  [[nodiscard]] std::uint64_t stream_id() const { return stream_; }

  static constexpr const char* kGeneratorName = "mt19937_64+splitmix64";

 private:
  std::uint64_t master_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

/// Truncated discretized exponential D_{K,delta,lambda} on {k delta : k = 0..K}.
struct DiscExpParams {
  std::uint64_t K = 1;
  double delta = 1.0;
  double lambda = 1.0;

  void validate() const;
};

/// Inverse CDF: k = min(K, floor(-ln(u) / (lambda delta))) for u in (0,1].
std::uint64_t disc_exp_index(double u, const DiscExpParams& p);

/// Pr(w = k delta) from the definition.
double disc_exp_pmf(std::uint64_t k, const DiscExpParams& p);

/// Returns the grid index k; the waiting time is k * delta.
std::uint64_t sample_disc_exp_index(RngStream& rng, const DiscExpParams& p);

inline double sample_disc_exp(RngStream& rng, const DiscExpParams& p) {
  return static_cast<double>(sample_disc_exp_index(rng, p)) * p.delta;
}

}  // namespace fnv
