// Copyright 2026 The fnv Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance runner: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "../common/history_reference.hpp"
#include "fnv/ctmc.hpp"
#include "fnv/dense_oracle.hpp"
#include "fnv/io.hpp"
#include "fnv/realify.hpp"
#include "fnv/verifier.hpp"
#include "fnv/zoo.hpp"

using namespace fnv;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double ci95(double p, double n) { return 1.96 * std::sqrt(p * (1.0 - p) / n); }

// Random phi on a random subset: magnitudes in [0.1, 1] (kept away from the
// support cutoff so ratios stay bounded), optionally near the ground state.
Eigen::VectorXd random_phi(const LocalHamiltonian<double>& h, RngStream& rng, bool near_ground) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << h.qubits());
  Eigen::VectorXd v(dim);
  Eigen::VectorXd g;
  if (near_ground) g = refined_ground_vector(materialize(h).re);
  for (Eigen::Index i = 0; i < dim; ++i) {
    double x = 0.1 + 0.9 * rng.sample_uniform();
    if (rng.sample_uniform() < 0.5) x = -x;
    if (near_ground) x = g(i) + 0.05 * x / std::sqrt(static_cast<double>(dim));
    if (std::abs(x) < 1e-3) x = 1e-3;
    v(i) = x;
  }
  const Eigen::Index keep = static_cast<Eigen::Index>(rng.next_u64() % static_cast<std::uint64_t>(dim));
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (i != keep && rng.sample_uniform() < 0.3) v(i) = 0.0;
  }
  return v;
}

LocalHamiltonian<double> random_h(int n, RngStream& rng) {
  RandomHamiltonianOptions opts;
  opts.locality = n >= 2 && rng.sample_uniform() < 0.7 ? 2 : 1;
  return random_local_hamiltonian(n, rng, opts);
}

// ---------------------------------------------------------------- 1
Outcome criterion1() {
  RngStream rng(101, 0);
  double worst_gap = 0.0, worst_res = 0.0, worst_sc = 0.0, worst_sym = 0.0;
  for (int i = 0; i < 500; ++i) {
    const int n = 2 + i % 4;
    const auto h = random_h(n, rng);
    const auto phi = vector_oracle(n, random_phi(h, rng, i % 2 == 0));
    const auto s = support_of(phi);
    const FixedNodeView<double> fv(h, phi);
    const auto f = materialize(fv, &s).re;
    const auto hs = materialize(h, &s).re;
    const auto c = amplitudes(phi, s);
    const double lf = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(f, Eigen::EigenvaluesOnly).eigenvalues()(0);
    const double lhs = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(hs, Eigen::EigenvaluesOnly).eigenvalues()(0);
    worst_gap = std::max(worst_gap, lhs - lf);
    const double hn = h.norm_bound();
    worst_res = std::max(worst_res, ((f - hs) * c).norm() / (hn * c.norm()));
    worst_sym = std::max(worst_sym, (f - f.transpose()).cwiseAbs().maxCoeff());
    for (Eigen::Index a = 0; a < c.size(); ++a) {
      for (Eigen::Index b = 0; b < c.size(); ++b) {
        if (a == b) continue;
        const double sgn = (c(a) > 0 ? 1.0 : -1.0) * (c(b) > 0 ? 1.0 : -1.0);
        worst_sc = std::max(worst_sc, sgn * f(a, b));
      }
    }
  }
  Outcome o;
  o.pass = worst_gap <= 1e-9 && worst_res <= 1e-9 && worst_sc <= 1e-12 && worst_sym <= 1e-12;
  o.detail = "500 pairs; max lambda(H_S)-lambda(F)=" + fmt("%.2e", worst_gap) + " rel|(F-H_S)phi|=" +
             fmt("%.2e", worst_res) + " max signed offdiag=" + fmt("%.2e", worst_sc) + " asym=" + fmt("%.2e", worst_sym);
  return o;
}

// ---------------------------------------------------------------- 2
Outcome criterion2() {
  RngStream rng(202, 0);
  double w_lambda = 0.0, w_col = 0.0, w_neg = 0.0, w_stat = 0.0, w_spec = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + i % 4;
    const auto h = random_h(n, rng);
    const auto phi = vector_oracle(n, refined_ground_vector(materialize(h).re));
    const auto s = support_of(phi);
    const FixedNodeView<double> fv(h, phi);
    const auto f = materialize(fv, &s).re;
    const auto hs = materialize(h, &s).re;
    const Eigen::VectorXd ef = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(f, Eigen::EigenvaluesOnly).eigenvalues();
    const double lf = ef(0);
    const double lhs = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(hs, Eigen::EigenvaluesOnly).eigenvalues()(0);
    w_lambda = std::max(w_lambda, std::abs(lf - lhs));
    const GeneratorView<double> gv(fv, lf);
    const auto g = materialize(gv, &s).re;
    w_col = std::max(w_col, g.colwise().sum().cwiseAbs().maxCoeff());
    for (Eigen::Index a = 0; a < g.rows(); ++a) {
      for (Eigen::Index b = 0; b < g.cols(); ++b) {
        if (a != b) w_neg = std::max(w_neg, -g(a, b));
      }
    }
    const auto c = amplitudes(phi, s);
    const Eigen::VectorXd pi = c.array().square() / c.squaredNorm();
    w_stat = std::max(w_stat, (g * pi).norm());
    const Eigen::VectorXcd eg = general_eigenvalues(g);
    Eigen::VectorXd target = (lf - ef.array()).reverse();  // ascending
    for (Eigen::Index k = 0; k < eg.size(); ++k) {
      w_spec = std::max(w_spec, std::abs(eg(k) - std::complex<double>(target(k), 0.0)));
    }
  }
  Outcome o;
  o.pass = w_lambda <= 1e-9 && w_col <= 1e-9 && w_neg <= 1e-12 && w_stat <= 1e-9 && w_spec <= 1e-7;
  o.detail = "100 ground states; |lambda(F)-lambda(H_S)|=" + fmt("%.2e", w_lambda) + " col=" + fmt("%.2e", w_col) +
             " neg=" + fmt("%.2e", w_neg) + " |G pi|=" + fmt("%.2e", w_stat) + " spectrum=" + fmt("%.2e", w_spec);
  return o;
}

// ---------------------------------------------------------------- 3
Outcome criterion3() {
  RngStream rng(303, 0);
  const auto y = make_product_yes(2, random_product_state(2, rng), rng);
  const auto prep = preprocess(y.instance, y.witness);
  const FixedNodeView<double> fv(*prep.hamiltonian, *prep.oracle);
  const GeneratorView<double> gv(fv);
  const auto s = support_of(*prep.oracle);
  const auto gd = materialize(gv, &s);
  const BasisIndex x0 = y.witness.x_in;
  const auto col_of = std::find(s.begin(), s.end(), x0) - s.begin();
  const double horizon = 1.0;
  const std::size_t N = 100000;
  std::vector<Trajectory> cont(N), disc(N);
  const auto grid = fixed_grid(horizon, 1e-6 * horizon);
  for (std::size_t i = 0; i < N; ++i) {
    RngStream a(31, i);
    cont[i] = gillespie_run(gv, x0, horizon, a);
    RngStream b(32, i);
    disc[i] = gillespie_run_discrete(gv, x0, horizon, b, grid);
  }
  double tv_c = 0.0, tv_d = 0.0;
  for (double t : {0.5, 1.0}) {
    const auto p = matrix_exponential(gd, t).re.col(col_of);
    const auto mc = empirical_marginal(cont, t);
    const auto md = empirical_marginal(disc, t);
    double dc = 0.0, dd = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k) {
      const auto ic = mc.find(s[k]);
      const auto id = md.find(s[k]);
      dc += std::abs((ic == mc.end() ? 0.0 : ic->second) - p(static_cast<Eigen::Index>(k)));
      dd += std::abs((id == md.end() ? 0.0 : id->second) - p(static_cast<Eigen::Index>(k)));
    }
    tv_c = std::max(tv_c, dc / 2);
    tv_d = std::max(tv_d, dd / 2);
  }
  Outcome o;
  o.pass = tv_c <= 0.01 && tv_d <= 0.02;
  o.detail = "N=1e5, s in {0.5,1}; TV continuous=" + fmt("%.4f", tv_c) + " discrete=" + fmt("%.4f", tv_d);
  return o;
}

// ---------------------------------------------------------------- 4
Outcome criterion4() {
  RngStream rng(404, 0);
  std::vector<DiscExpParams> params{{2, 0.5, 1.0}};
  for (int i = 0; i < 5; ++i) {
    const auto K = 1 + rng.next_u64() % 20;
    const double delta = 0.01 + 0.5 * rng.sample_uniform();
    const double lambda = 0.1 + 3.0 * rng.sample_uniform();
    params.push_back({K, delta, lambda});
  }
  const std::size_t N = 100000;
  double worst_sigma = 0.0;
  bool bitwise = true;
  for (std::size_t j = 0; j < params.size(); ++j) {
    const auto& p = params[j];
    std::vector<std::uint64_t> counts(p.K + 1, 0);
    RngStream r(41, j);
    for (std::size_t i = 0; i < N; ++i) ++counts[sample_disc_exp_index(r, p)];
    std::uint64_t tail = N;
    for (std::uint64_t k = 0; k <= p.K; ++k) {
      const double q = std::exp(-p.lambda * static_cast<double>(k) * p.delta);
      const double sigma = std::sqrt(std::max(q * (1.0 - q), 1e-300) / static_cast<double>(N));
      const double emp = static_cast<double>(tail) / static_cast<double>(N);
      worst_sigma = std::max(worst_sigma, q > 0.0 && q < 1.0 ? std::abs(emp - q) / sigma : std::abs(emp - q) * 1e12);
      tail -= counts[k];
    }
    // inverse-CDF map against the closed form, bit for bit
    RngStream u(42, j);
    for (int i = 0; i < 100000; ++i) {
      const double uu = u.sample_open_uniform();
      const double raw = std::floor(-std::log(uu) / (p.lambda * p.delta));
      const std::uint64_t ref = raw >= static_cast<double>(p.K) ? p.K : static_cast<std::uint64_t>(raw);
      if (disc_exp_index(uu, p) != ref) bitwise = false;
    }
    const double rate_step = p.lambda * p.delta;
    for (std::uint64_t k = 0; k <= p.K; ++k) {
      const double a = std::exp(-rate_step * static_cast<double>(k));
      const double ref = k == p.K ? a : a - std::exp(-rate_step * static_cast<double>(k + 1));
      if (disc_exp_pmf(k, p) != ref) bitwise = false;
    }
  }
  Outcome o;
  o.pass = worst_sigma <= 3.0 && bitwise;
  o.detail = "6 parameter triples, N=1e5; worst tail deviation=" + fmt("%.2f", worst_sigma) +
             " sigma; inverse CDF bitwise=" + (bitwise ? "yes" : "no");
  return o;
}

// ---------------------------------------------------------------- 5, 7, 10
struct YesRun {
  std::string name;
  AcceptanceEstimate est;
  double bound;  // d n^3 t ||H||
};

std::vector<YesFixture> yes_fixtures() {
  std::vector<YesFixture> out;
  RngStream rng(505, 0);
  for (int n : {2, 3, 4, 5, 6, 2, 3, 4, 6}) out.push_back(make_product_yes(n, random_product_state(n, rng), rng));
  const ReversibleCircuit c(4, {Gate{GateKind::kCnot, {3, 0}}, Gate{GateKind::kCnot, {1, 2}},
                                Gate{GateKind::kToffoli, {1, 2, 3}}, Gate{GateKind::kCnot, {2, 1}}});
  HistoryOptions opts;
  opts.output_term = true;
  opts.output_wire = 0;
  out.push_back(circuit_to_hamiltonian(c, 2, "1", opts));
  return out;
}

std::vector<YesRun> run_yes(const std::vector<YesFixture>& fixtures) {
  std::vector<YesRun> runs;
  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    const auto& y = fixtures[i];
    const auto prep = preprocess(y.instance, y.witness);
    VerifierConfig cfg;
    cfg.trials = 400;
    cfg.seed = 5000 + i;
    const auto resolved = resolve_config(cfg, *prep.hamiltonian, to_double(prep.epsilon));
    RngStream srng(5500 + i, 0);
    Witness<double> w = y.witness;
    w.x_in = search_x_in(*prep.hamiltonian, *prep.oracle, resolved, srng, 4, y.witness.x_in);
    const auto& h = *prep.hamiltonian;
    const double n = h.qubits();
    const double bound = static_cast<double>(h.sparsity_bound()) * n * n * n * resolved.t * h.norm_bound();
    runs.push_back({y.name + "_" + std::to_string(i), estimate_acceptance(y.instance, w, cfg, true), bound});
  }
  return runs;
}

Outcome criterion5(const std::vector<YesRun>& runs) {
  bool pass = true;
  double worst_margin = 1.0;
  std::uint64_t bad = 0;
  for (const auto& r : runs) {
    const double floor = 0.5 - ci95(r.est.p_hat, 400.0);
    worst_margin = std::min(worst_margin, r.est.p_hat - floor);
    if (r.est.p_hat < floor) pass = false;
    bad += r.est.count(Reason::kIllegalColumn) + r.est.count(Reason::kFormatBad);
  }
  Outcome o;
  o.pass = pass && bad == 0;
  std::string ps;
  for (const auto& r : runs) ps += fmt("%.3f", r.est.p_hat) + ",";
  ps.pop_back();
  o.detail = "10 yes fixtures, 400 trials; p_hat=[" + ps + "] illegal/format=" + std::to_string(bad);
  return o;
}

Outcome criterion7(const std::vector<YesRun>& runs) {
  bool pass = true;
  double worst = 1.0;
  for (const auto& r : runs) {
    std::uint64_t within = 0;
    for (const auto& tr : r.est.traces) {
      if (static_cast<double>(tr.transitions) <= r.bound) ++within;
    }
    const double frac = static_cast<double>(within) / 400.0;
    worst = std::min(worst, frac);
    if (frac < 0.5 - ci95(frac, 400.0)) pass = false;
  }
  return {pass, "fraction of runs with m <= d n^3 t ||H||: min over fixtures=" + fmt("%.3f", worst)};
}

// ---------------------------------------------------------------- 6, 10
struct NoRun {
  std::string name;
  std::array<AcceptanceEstimate, 3> est;
};

std::vector<NoRun> run_no() {
  std::vector<NoRun> runs;
  RngStream rng(606, 0);
  const std::vector<AdversaryFamily> fams{AdversaryFamily::kPerturbedGround, AdversaryFamily::kSignFlippedGround,
                                          AdversaryFamily::kHarmonicTrap};
  const std::vector<std::pair<int, double>> shapes{{2, 0.5}, {3, 0.5}, {4, 0.25}, {5, 0.5}, {3, 0.1}};
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const auto inst = make_no_instance(shapes[i].first, shapes[i].second, rng);
    const auto ws = adversarial_witnesses(inst, rng, fams.size(), fams);
    const double t0 = default_horizon(inst.hamiltonian.qubits(), inst.epsilon());
    for (std::size_t k = 0; k < ws.size(); ++k) {
      NoRun r;
      r.name = "no" + std::to_string(i) + "_" + to_string(ws[k].family);
      for (int j = 0; j < 3; ++j) {
        VerifierConfig cfg;
        cfg.trials = 400;
        cfg.seed = 6000 + 10 * i + k;
        cfg.t = t0 * (1 << j);
        r.est[static_cast<std::size_t>(j)] = estimate_acceptance(inst, ws[k].witness, cfg, true);
      }
      runs.push_back(std::move(r));
    }
  }
  // canonical one-qubit example
  const Instance<double> canon{LocalHamiltonian<double>(1, {LocalTerm<double>::pauli("X", {0}, -1.0),
                                                            LocalTerm<double>::identity(1.5)}),
                               0.0, 0.5};
  const Witness<double> w{0.0, make_oracle(lookup_descriptor(1, {1.0, -1.0})), BasisIndex(0u, 1)};
  NoRun r;
  r.name = "canonical";
  for (int j = 0; j < 3; ++j) {
    VerifierConfig cfg;
    cfg.trials = 400;
    cfg.seed = 6999;
    cfg.t = default_horizon(1, 0.5) * (1 << j);
    r.est[static_cast<std::size_t>(j)] = estimate_acceptance(canon, w, cfg, true);
  }
  runs.push_back(std::move(r));
  return runs;
}

Outcome criterion6(const std::vector<NoRun>& runs) {
  bool pass = true;
  double worst_last = 0.0;
  for (const auto& r : runs) {
    for (int j = 0; j + 1 < 3; ++j) {
      const auto& a = r.est[static_cast<std::size_t>(j)];
      const auto& b = r.est[static_cast<std::size_t>(j + 1)];
      if (b.p_hat > a.p_hat + ci95(a.p_hat, 400.0) + ci95(b.p_hat, 400.0)) pass = false;
    }
    worst_last = std::max(worst_last, r.est[2].p_hat);
    if (r.est[2].p_hat > 0.05) pass = false;
  }
  const auto& canon = runs.back();
  bool first_iter = true;
  for (const auto& e : canon.est) {
    for (const auto& tr : e.traces) {
      if (tr.reason != Reason::kIllegalColumn || tr.transitions != 0) first_iter = false;
    }
  }
  Outcome o;
  o.pass = pass && first_iter;
  o.detail = std::to_string(runs.size() - 1) + " adversarial runs at t,2t,4t; max p_hat at 4t=" +
             fmt("%.3f", worst_last) + "; canonical first-iteration ILLEGAL_COLUMN=" + (first_iter ? "100%" : "no");
  return o;
}

// ---------------------------------------------------------------- 8
Outcome criterion8() {
  RngStream rng(808, 0);
  double w_spec = 0.0, w_res = 0.0;
  for (int i = 0; i < 50; ++i) {
    const int n = 1 + i % 5;
    RandomHamiltonianOptions opts;
    opts.complex = true;
    opts.locality = n >= 2 ? 2 : 1;
    const auto h = random_local_hamiltonian(n, rng, opts);
    const auto d = materialize(h);
    const auto hr = realify(h);
    const auto dr = materialize(hr).re;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(d.complex());
    const Eigen::VectorXd er = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(dr, Eigen::EigenvaluesOnly).eigenvalues();
    const auto dim = es.eigenvalues().size();
    for (Eigen::Index k = 0; k < dim; ++k) {
      w_spec = std::max({w_spec, std::abs(er(2 * k) - es.eigenvalues()(k)), std::abs(er(2 * k + 1) - es.eigenvalues()(k))});
      const Eigen::VectorXcd psi = es.eigenvectors().col(k);
      // (Re psi, Im psi) and (-Im psi, Re psi) both sit in the doubled eigenspace
      for (int phase = 0; phase < 2; ++phase) {
        const Eigen::VectorXcd q = phase == 0 ? psi : Eigen::VectorXcd(psi * std::complex<double>(0.0, 1.0));
        Eigen::VectorXd v(2 * dim);
        v << q.real(), q.imag();
        w_res = std::max(w_res, (dr * v - es.eigenvalues()(k) * v).norm());
      }
    }
  }
  Outcome o;
  o.pass = w_spec <= 1e-9 && w_res <= 1e-9;
  o.detail = "50 complex H; spectrum mismatch=" + fmt("%.2e", w_spec) + " realified residual=" + fmt("%.2e", w_res);
  return o;
}

// ---------------------------------------------------------------- 9
ReversibleCircuit random_circuit(int wires, int gates, RngStream& rng, int first_free) {
  std::vector<Gate> gs;
  std::vector<int> pool;
  for (int w = first_free; w < wires; ++w) pool.push_back(w);
  while (static_cast<int>(gs.size()) < gates) {
    std::vector<int> w = pool;
    for (std::size_t i = w.size(); i > 1; --i) std::swap(w[i - 1], w[rng.next_u64() % i]);
    const double u = rng.sample_uniform();
    if (u < 0.25 || w.size() < 2) {
      gs.push_back({GateKind::kNot, {w[0]}});
    } else if (u < 0.7 || w.size() < 3) {
      gs.push_back({GateKind::kCnot, {w[0], w[1]}});
    } else {
      gs.push_back({GateKind::kToffoli, {w[0], w[1], w[2]}});
    }
  }
  return ReversibleCircuit(wires, std::move(gs));
}

double sparse_residual(const LocalHamiltonian<double>& h, const Eigen::VectorXd& v) {
  std::map<std::uint32_t, double> hv;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) == 0.0) continue;
    for (const auto& e : h.column_nonzeros(BasisIndex(static_cast<std::uint32_t>(i), h.qubits()))) {
      hv[e.index.bits()] += e.value.re * v(i);
    }
  }
  double s = 0.0;
  for (const auto& kv : hv) s += kv.second * kv.second;
  return std::sqrt(s) / v.norm();
}

Outcome criterion9() {
  RngStream rng(909, 0);
  double w_amp = 0.0, w_res = 0.0;
  int count = 0;
  for (int i = 0; i < 24; ++i) {
    const int p = 2 + static_cast<int>(rng.next_u64() % 7);  // 2..8
    const int T = 1 + static_cast<int>(rng.next_u64() % 8);  // 1..8
    const bool accepting = i % 2 == 1 && p >= 2;
    ReversibleCircuit c(1, {});
    std::string witness;
    int coins;
    HistoryOptions opts;
    if (accepting) {
      // copy the witness bit (1) to ancilla 0, which later gates never touch
      coins = (p - 2) / 2 * 2;
      witness = "1";
      const ReversibleCircuit tail = random_circuit(p, T - 1, rng, 1);
      std::vector<Gate> gs{{GateKind::kCnot, {p - 1, 0}}};
      gs.insert(gs.end(), tail.gates().begin(), tail.gates().end());
      c = ReversibleCircuit(p, std::move(gs));
      opts.output_term = true;
      opts.output_wire = 0;
    } else {
      c = random_circuit(p, T, rng, 0);
      coins = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(p / 2 + 1)) * 2;
      if (coins > p) coins -= 2;
      const int wl = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(p - coins + 1));
      for (int k = 0; k < wl; ++k) witness += rng.sample_uniform() < 0.5 ? '0' : '1';
    }
    opts.fallback_gap = 1.0;
    const auto y = circuit_to_hamiltonian(c, coins, witness, opts);
    const int n = y.instance.hamiltonian.qubits();
    Eigen::VectorXd v(Eigen::Index{1} << n);
    for (std::uint32_t b = 0; b < (1u << n); ++b) v(b) = y.witness.oracle.evaluate(BasisIndex(b, n)).re;
    const Eigen::VectorXd ref = testing::explicit_history_vector(c, coins, witness);
    const double scale = ref.dot(v) / v.squaredNorm();
    w_amp = std::max(w_amp, (ref - scale * v).cwiseAbs().maxCoeff() / ref.cwiseAbs().maxCoeff());
    w_res = std::max(w_res, sparse_residual(y.instance.hamiltonian, v));
    ++count;
  }
  Outcome o;
  o.pass = w_amp <= 1e-12 && w_res <= 1e-9;
  o.detail = std::to_string(count) + " circuits (T<=8, wires<=8); amplitude mismatch=" + fmt("%.2e", w_amp) +
             " |H psi|/|psi|=" + fmt("%.2e", w_res);
  return o;
}

// ---------------------------------------------------------------- 10
std::string serialize(const std::vector<YesRun>& yes, const std::vector<NoRun>& no) {
  std::string out;
  for (const auto& r : yes) out += estimate_to_json(r.est, true).dump();
  for (const auto& r : no) {
    for (const auto& e : r.est) out += estimate_to_json(e, true).dump();
  }
  return out;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  int failed = 0;
  auto report = [&](int id, double budget_s, const std::function<Outcome()>& fn) {
    const auto start = clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(clock::now() - start).count();
    if (budget_s > 0.0 && secs > budget_s) {
      o.pass = false;
      o.detail += " (over budget)";
    }
    if (!o.pass) ++failed;
    std::printf("criterion %2d: %s  %s  [%.1fs]\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
  };

  report(1, 60, criterion1);
  report(2, 60, criterion2);
  report(3, 120, criterion3);
  report(4, 30, criterion4);

  std::vector<YesRun> yes;
  std::vector<NoRun> no;
  report(5, 300, [&] {
    yes = run_yes(yes_fixtures());
    return criterion5(yes);
  });
  report(6, 300, [&] {
    no = run_no();
    return criterion6(no);
  });
  report(7, 120, [&] { return criterion7(yes); });
  report(8, 60, criterion8);
  report(9, 60, criterion9);
  report(10, 0, [&] {
    const std::string first = serialize(yes, no);
    const std::string second = serialize(run_yes(yes_fixtures()), run_no());
    return Outcome{!first.empty() && first == second,
                   "re-run of yes/no fixtures: " + std::to_string(first.size()) + " bytes, " +
                       (first == second ? "identical" : "DIFFERENT")};
  });
  return failed;
}
