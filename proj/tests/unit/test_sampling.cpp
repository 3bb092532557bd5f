// Copyright 2026 The fnv Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fnv/errors.hpp"
#include "fnv/sampling.hpp"

using namespace fnv;

TEST_CASE("streams replay and differ") {
  RngStream a(42, 3), b(42, 3), c(42, 4);
  std::vector<double> va, vb, vc;
  for (int i = 0; i < 16; ++i) {
    va.push_back(a.sample_uniform());
    vb.push_back(b.sample_uniform());
    vc.push_back(c.sample_uniform());
  }
  CHECK(va == vb);
  CHECK(va != vc);
}

TEST_CASE("pinned first outputs") {
  // Guards against accidental changes to the seeding scheme.
  RngStream r(0, 0);
  const std::uint64_t first = r.next_u64();
  RngStream again(0, 0);
  CHECK(again.next_u64() == first);
  CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
}

TEST_CASE("uniform mean and KS statistic") {
  RngStream r(1, 0);
  const int n = 100000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = r.sample_uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(std::abs(sum / n - 0.5) <= 0.005);

  std::vector<double> v(10000);
  for (auto& x : v) x = r.sample_uniform();
  std::sort(v.begin(), v.end());
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double lo = static_cast<double>(i) / v.size();
    const double hi = static_cast<double>(i + 1) / v.size();
    d = std::max({d, std::abs(v[i] - lo), std::abs(hi - v[i])});
  }
  CHECK(d < 1.63 / std::sqrt(10000.0));  // 1% critical value
}

TEST_CASE("exponential waiting times") {
  RngStream r(2, 0);
  const int n = 100000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += r.sample_waiting_time(1.0);
  CHECK(std::abs(sum / n - 1.0) <= 0.01);

  int tail = 0;
  for (int i = 0; i < n; ++i) tail += r.sample_waiting_time(2.0) >= 1.0;
  CHECK(std::abs(static_cast<double>(tail) / n - std::exp(-2.0)) <= 0.005);

  RngStream a(9, 1), b(9, 1);
  for (int i = 0; i < 100; ++i) CHECK(a.sample_waiting_time(3.0) == b.sample_waiting_time(1.0) / 3.0);

  CHECK_THROWS_AS(r.sample_waiting_time(0.0), ArgumentError);
  CHECK_THROWS_AS(r.sample_waiting_time(-1.0), ArgumentError);
}

TEST_CASE("discretized exponential pmf") {
  const DiscExpParams p{2, 0.5, 1.0};
  CHECK(disc_exp_pmf(0, p) == doctest::Approx(1.0 - std::exp(-0.5)));
  CHECK(disc_exp_pmf(1, p) == doctest::Approx(std::exp(-0.5) - std::exp(-1.0)));
  CHECK(disc_exp_pmf(2, p) == doctest::Approx(std::exp(-1.0)));
  CHECK(disc_exp_pmf(0, p) + disc_exp_pmf(1, p) + disc_exp_pmf(2, p) == doctest::Approx(1.0));
  const DiscExpParams two{1, 0.3, 2.0};
  CHECK(disc_exp_pmf(1, two) == doctest::Approx(std::exp(-0.6)));
}

TEST_CASE("inverse CDF map") {
  const DiscExpParams p{2, 0.5, 1.0};
  // k = min(K, floor(-ln u / (lambda delta)))
  CHECK(disc_exp_index(1.0, p) == 0);
  CHECK(disc_exp_index(std::exp(-0.5) + 1e-12, p) == 0);
  CHECK(disc_exp_index(std::exp(-0.5) - 1e-12, p) == 1);
  CHECK(disc_exp_index(std::exp(-1.0) + 1e-12, p) == 1);
  CHECK(disc_exp_index(std::exp(-1.0) - 1e-12, p) == 2);
  CHECK(disc_exp_index(1e-300, p) == 2);
  // monotone non-increasing in u
  std::uint64_t prev = disc_exp_index(1e-9, p);
  for (int i = 1; i <= 1000; ++i) {
    const std::uint64_t k = disc_exp_index(i / 1000.0, p);
    CHECK(k <= prev);
    prev = k;
  }
  CHECK_THROWS_AS(disc_exp_index(0.0, p), ArgumentError);
  CHECK_THROWS_AS(disc_exp_index(0.5, DiscExpParams{0, 0.5, 1.0}), ArgumentError);
  CHECK_THROWS_AS(disc_exp_index(0.5, DiscExpParams{1, 0.0, 1.0}), ArgumentError);
  CHECK_THROWS_AS(disc_exp_index(0.5, DiscExpParams{1, 0.5, -1.0}), ArgumentError);
}

TEST_CASE("sampled support never exceeds K delta") {
  RngStream r(5, 0);
  const DiscExpParams p{3, 0.1, 0.2};
  for (int i = 0; i < 10000; ++i) {
    const double w = sample_disc_exp(r, p);
    CHECK(w <= 3 * 0.1 + 1e-15);
    CHECK(w >= 0.0);
  }
}
