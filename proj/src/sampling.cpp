// Copyright 2026 The fnv Authors
// SPDX-License-Identifier: Apache-2.0

#include "fnv/sampling.hpp"

#include <cmath>

#include "fnv/errors.hpp"

namespace fnv {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
    : master_(master_seed), stream_(stream_id),
      engine_(splitmix64(splitmix64(master_seed) ^ stream_id)) {}

double RngStream::sample_uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::sample_open_uniform() {
  double u = 0.0;
  while (u == 0.0) u = sample_uniform();
  return u;
}

double RngStream::sample_waiting_time(double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate)) throw ArgumentError("sample_waiting_time: rate must be positive");
  return -std::log(sample_open_uniform()) / rate;
}

void DiscExpParams::validate() const {
  if (K < 1) throw ArgumentError("DiscExpParams: K must be positive");
  if (!(delta > 0.0) || !std::isfinite(delta)) throw ArgumentError("DiscExpParams: delta must be positive");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ArgumentError("DiscExpParams: lambda must be positive");
}

std::uint64_t disc_exp_index(double u, const DiscExpParams& p) {
  p.validate();
  if (!(u > 0.0) || u > 1.0) throw ArgumentError("disc_exp_index: u must lie in (0,1]");
  const double k = std::floor(-std::log(u) / (p.lambda * p.delta));
  if (!(k < static_cast<double>(p.K))) return p.K;
  return static_cast<std::uint64_t>(k);
}

double disc_exp_pmf(std::uint64_t k, const DiscExpParams& p) {
  p.validate();
  if (k > p.K) return 0.0;
  const double a = p.lambda * p.delta;
  const double head = std::exp(-a * static_cast<double>(k));
  if (k == p.K) return head;
  return head - std::exp(-a * static_cast<double>(k + 1));
}

std::uint64_t sample_disc_exp_index(RngStream& rng, const DiscExpParams& p) {
  return disc_exp_index(rng.sample_open_uniform(), p);
}

}  // namespace fnv
