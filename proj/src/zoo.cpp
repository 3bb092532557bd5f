// Copyright 2026 The fnv Authors
// SPDX-License-Identifier: Apache-2.0

#include "fnv/zoo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>

#include "fnv/dense_oracle.hpp"
#include "fnv/realify.hpp"

namespace fnv {

namespace {

using json = nlohmann::json;

double uniform(RngStream& rng, double lo, double hi) { return lo + (hi - lo) * rng.sample_uniform(); }

std::size_t randint(RngStream& rng, std::size_t n) {
  return std::min(n - 1, static_cast<std::size_t>(rng.sample_uniform() * static_cast<double>(n)));
}

AmplitudeOracle<double> product_oracle(const json& d) {
  auto re = std::make_shared<std::vector<LocalState>>(d.at("factors").get<std::vector<LocalState>>());
  auto im = std::make_shared<std::vector<LocalState>>(
      d.contains("factors_im") ? d.at("factors_im").get<std::vector<LocalState>>() : std::vector<LocalState>{});
  if (!im->empty() && im->size() != re->size()) throw ArgumentError("product oracle: factors_im length differs");
  for (std::size_t i = 0; i < re->size(); ++i) {
    const double m = std::abs((*re)[i][0]) + std::abs((*re)[i][1]) +
                     (im->empty() ? 0.0 : std::abs((*im)[i][0]) + std::abs((*im)[i][1]));
    if (m == 0.0) throw ArgumentError("product oracle: zero local amplitude pair");
  }
  const int n = static_cast<int>(re->size());
  return AmplitudeOracle<double>(
      n,
      [re, im](const BasisIndex& x) {
        Scalar<double> acc(1.0, 0.0);
        for (std::size_t i = 0; i < re->size(); ++i) {
          const int b = x.bit(static_cast<int>(i)) ? 1 : 0;
          const Scalar<double> f((*re)[i][b], im->empty() ? 0.0 : (*im)[i][b]);
          acc = acc * f;
        }
        return acc;
      },
      d);
}

AmplitudeOracle<double> lookup_oracle(const json& d) {
  const int n = d.at("qubits").get<int>();
  if (n < 0 || n > 20) throw ArgumentError("lookup_table oracle: qubits must lie in [0, 20]");
  auto re = std::make_shared<std::vector<double>>(d.at("table").get<std::vector<double>>());
  auto im = std::make_shared<std::vector<double>>(
      d.contains("table_im") ? d.at("table_im").get<std::vector<double>>() : std::vector<double>{});
  if (re->size() != (std::size_t{1} << n)) throw ArgumentError("lookup_table oracle: table must have 2^n entries");
  if (!im->empty() && im->size() != re->size()) throw ArgumentError("lookup_table oracle: table_im length differs");
  return AmplitudeOracle<double>(
      n,
      [re, im](const BasisIndex& x) {
        return Scalar<double>((*re)[x.bits()], im->empty() ? 0.0 : (*im)[x.bits()]);
      },
      d);
}

AmplitudeOracle<double> superposition_oracle(const json& d) {
  const int n = d.at("qubits").get<int>();
  auto table = std::make_shared<std::map<std::uint32_t, Scalar<double>>>();
  for (const auto& t : d.at("terms")) {
    const BasisIndex x = BasisIndex::parse(t.at("x").get<std::string>());
    require_width(x, n, "basis_superposition oracle");
    (*table)[x.bits()] += Scalar<double>(t.at("re").get<double>(), t.value("im", 0.0));
  }
  return AmplitudeOracle<double>(
      n,
      [table](const BasisIndex& x) {
        const auto it = table->find(x.bits());
        return it == table->end() ? Scalar<double>{} : it->second;
      },
      d);
}

struct HistorySpec {
  ReversibleCircuit circuit;
  int ancillas;
  int coins;
  std::uint32_t witness;
  int witness_len;
};

std::uint32_t parse_bits(const std::string& s) { return s.empty() ? 0u : BasisIndex::parse(s).bits(); }

AmplitudeOracle<double> history_oracle(const json& d) {
  auto spec = std::make_shared<HistorySpec>(HistorySpec{
      ReversibleCircuit::from_json(d.at("circuit")), d.at("ancillas").get<int>(), d.at("coins").get<int>(),
      parse_bits(d.at("witness").get<std::string>()), static_cast<int>(d.at("witness").get<std::string>().size())});
  const int p = spec->circuit.wires();
  const int T = spec->circuit.size();
  if (spec->ancillas < 0 || spec->coins < 0 || spec->ancillas + spec->coins + spec->witness_len != p) {
    throw ArgumentError("history_state oracle: ancillas + coins + witness must equal the wire count");
  }
  if (p + T > kMaxQubits) throw ArgumentError("history_state oracle: more than 24 qubits");
  return AmplitudeOracle<double>(
      p + T,
      [spec, p, T](const BasisIndex& x) {
        const std::uint32_t data = x.bits() & ((1u << p) - 1u);
        const std::uint32_t clock = x.bits() >> p;
        // unary clock: c_1..c_t = 1, the rest 0
        if ((clock & (clock + 1u)) != 0) return Scalar<double>{};
        const int t = std::popcount(clock);
        if (t > T) return Scalar<double>{};
        const std::uint32_t init = spec->circuit.undo_prefix(data, t);
        const std::uint32_t anc_mask = (1u << spec->ancillas) - 1u;
        if ((init & anc_mask) != 0) return Scalar<double>{};
        const std::uint32_t w = init >> (spec->ancillas + spec->coins);
        if (w != spec->witness) return Scalar<double>{};
        return Scalar<double>(1.0);
      },
      d);
}

/// Dense local matrix builder; the first support qubit is the most
/// significant local bit.
struct LocalMatrix {
  std::size_t s;
  std::size_t dim;
  std::vector<double> m;
  explicit LocalMatrix(std::size_t support) : s(support), dim(std::size_t{1} << support), m(dim * dim, 0.0) {}
  [[nodiscard]] int bit(std::size_t local, std::size_t pos) const { return static_cast<int>((local >> (s - 1 - pos)) & 1u); }
  double& at(std::size_t i, std::size_t j) { return m[i * dim + j]; }
};

Eigen::VectorXd dense_ground_vector(const LocalHamiltonian<double>& h) {
  const DenseOperator d = materialize(h);
  return refined_ground_vector(d.re);
}

std::vector<double> to_table(const Eigen::VectorXd& v) {
  std::vector<double> t(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double x = v(i);
    t[static_cast<std::size_t>(i)] = std::abs(x) <= kSupportCutoff ? 0.0 : x;
  }
  return t;
}

}  // namespace

json product_descriptor(const std::vector<LocalState>& factors, const std::vector<LocalState>& factors_im) {
  json d = {{"kind", "product"}, {"factors", factors}};
  if (!factors_im.empty()) d["factors_im"] = factors_im;
  return d;
}

json lookup_descriptor(int qubits, const std::vector<double>& table) {
  return {{"kind", "lookup_table"}, {"qubits", qubits}, {"table", table}};
}

json superposition_descriptor(int qubits, const std::vector<std::pair<BasisIndex, Scalar<double>>>& terms) {
  json list = json::array();
  for (const auto& [x, v] : terms) list.push_back({{"x", x.to_string()}, {"re", v.re}, {"im", v.im}});
  return {{"kind", "basis_superposition"}, {"qubits", qubits}, {"terms", list}};
}

json history_descriptor(const ReversibleCircuit& c, int ancillas, int coins, const std::string& witness_bits) {
  return {{"kind", "history_state"},
          {"circuit", c.to_json()},
          {"ancillas", ancillas},
          {"coins", coins},
          {"witness", witness_bits}};
}

AmplitudeOracle<double> make_oracle(const json& d) {
  const std::string kind = d.at("kind").get<std::string>();
  if (kind == "product") return product_oracle(d);
  if (kind == "lookup_table") return lookup_oracle(d);
  if (kind == "basis_superposition") return superposition_oracle(d);
  if (kind == "history_state") return history_oracle(d);
  if (kind == "realified") return realify_state(make_oracle(d.at("base")));
  throw ArgumentError("unknown oracle kind '" + kind + "'");
}

AmplitudeOracle<double> vector_oracle(int qubits, const Eigen::VectorXd& v) {
  if (v.size() != static_cast<Eigen::Index>(std::size_t{1} << qubits)) throw ArgumentError("vector_oracle: size is not 2^n");
  return make_oracle(lookup_descriptor(qubits, to_table(v)));
}

BasisIndex max_amplitude_string(const AmplitudeOracle<double>& phi) {
  const int n = phi.qubits();
  if (n > 20) throw SizeCapError("max_amplitude_string: more than 20 qubits");
  BasisIndex best(0u, n);
  double best_mag = -1.0;
  for (std::uint32_t b = 0; b < (1u << n); ++b) {
    const auto c = phi.evaluate(BasisIndex(b, n));
    const double mag = std::hypot(c.re, c.im);
    if (mag > best_mag) {
      best_mag = mag;
      best = BasisIndex(b, n);
    }
  }
  return best;
}

LocalHamiltonian<double> random_local_hamiltonian(int n, RngStream& rng, const RandomHamiltonianOptions& opts) {
  if (n < 1) throw ArgumentError("random_local_hamiltonian: n must be positive");
  const int k = std::min(opts.locality, n);
  if (k < 1 || k > 3) throw ArgumentError("random_local_hamiltonian: locality must lie in [1, 3]");
  std::vector<std::vector<int>> supports;
  for (int i = 0; i < n; ++i) supports.push_back({i});
  if (k >= 2)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) supports.push_back({i, j});
  if (k >= 3)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int l = j + 1; l < n; ++l) supports.push_back({i, j, l});
  std::vector<LocalTerm<double>> terms;
  for (auto& sup : supports) {
    const std::size_t d = std::size_t{1} << sup.size();
    std::vector<double> re(d * d, 0.0), im(d * d, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i; j < d; ++j) {
        const double v = uniform(rng, -opts.scale, opts.scale);
        re[i * d + j] = v;
        re[j * d + i] = v;
        if (opts.complex && i != j) {
          const double w = uniform(rng, -opts.scale, opts.scale);
          im[i * d + j] = w;
          im[j * d + i] = -w;
        }
      }
    }
    terms.emplace_back(sup, std::move(re), std::move(im));
  }
  return LocalHamiltonian<double>(n, std::move(terms), k);
}

std::vector<LocalState> random_product_state(int n, RngStream& rng) {
  std::vector<LocalState> out(static_cast<std::size_t>(n));
  for (auto& f : out) {
    for (double& a : f) a = (rng.sample_uniform() < 0.5 ? -1.0 : 1.0) * uniform(rng, 0.2, 1.0);
  }
  return out;
}

double next_eigenvalue(const LocalHamiltonian<double>& h, double lambda, double fallback, int max_qubits) {
  if (h.qubits() > max_qubits) return fallback;
  const Eigen::VectorXd ev = eigenvalues(materialize(h));
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > lambda + 1e-8) return ev(i);
  }
  return fallback;
}

YesFixture make_product_yes(int n, const std::vector<LocalState>& local_states, RngStream& rng, int extra) {
  if (static_cast<int>(local_states.size()) != n) throw ArgumentError("make_product_yes: need one local state per qubit");
  for (const auto& s : local_states) {
    if (s[0] == 0.0 && s[1] == 0.0) throw ArgumentError("make_product_yes: zero local amplitude pair");
  }
  std::vector<LocalTerm<double>> terms;
  for (int i = 0; i < n; ++i) {
    const auto& s = local_states[static_cast<std::size_t>(i)];
    const double nn = s[0] * s[0] + s[1] * s[1];
    terms.emplace_back(std::vector<int>{i},
                       std::vector<double>{1.0 - s[0] * s[0] / nn, -s[0] * s[1] / nn, -s[1] * s[0] / nn,
                                           1.0 - s[1] * s[1] / nn});
  }
  if (extra < 0) extra = std::max(0, n - 1);
  for (int e = 0; e < extra && n >= 2; ++e) {
    const int i = e % (n - 1);
    const auto& a = local_states[static_cast<std::size_t>(i)];
    const auto& b = local_states[static_cast<std::size_t>(i + 1)];
    const std::array<double, 4> u = {a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
    std::array<double, 4> v{};
    for (double& x : v) x = uniform(rng, -1.0, 1.0);
    double uv = 0.0, uu = 0.0;
    for (int k = 0; k < 4; ++k) {
      uv += u[k] * v[k];
      uu += u[k] * u[k];
    }
    double vv = 0.0;
    for (int k = 0; k < 4; ++k) {
      v[k] -= uv / uu * u[k];
      vv += v[k] * v[k];
    }
    const double w = uniform(rng, 0.5, 1.5);
    std::vector<double> m(16);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m[static_cast<std::size_t>(r * 4 + c)] = w * v[r] * v[c] / vv;
    // exact symmetry
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < r; ++c) m[static_cast<std::size_t>(r * 4 + c)] = m[static_cast<std::size_t>(c * 4 + r)];
    terms.emplace_back(std::vector<int>{i, i + 1}, std::move(m));
  }
  LocalHamiltonian<double> h(n, std::move(terms), n >= 2 ? 2 : 1);
  const double b = next_eigenvalue(h, 0.0, 0.5, 8);
  auto oracle = make_oracle(product_descriptor(local_states));
  const BasisIndex x_in = max_amplitude_string(oracle);
  return {"product_n" + std::to_string(n), Instance<double>{std::move(h), 0.0, b}, Witness<double>{0.0, oracle, x_in}};
}

Instance<double> shift_to_no_instance(const LocalHamiltonian<double>& h, double eps) {
  if (!(eps >= 1e-3)) throw ArgumentError("shift_to_no_instance: eps must be at least 1e-3");
  if (h.qubits() > 10) throw SizeCapError("shift_to_no_instance: more than 10 qubits");
  const double lambda = ground_energy(materialize(h)).energy;
  LocalHamiltonian<double> shifted = h.with_term(LocalTerm<double>::identity(eps - lambda));
  return Instance<double>{std::move(shifted), 0.0, eps};
}

Instance<double> make_no_instance(int n, double eps, RngStream& rng, int locality) {
  if (!(eps >= 1e-3)) throw ArgumentError("make_no_instance: eps must be at least 1e-3");
  if (n > 10) throw SizeCapError("make_no_instance: more than 10 qubits");
  RandomHamiltonianOptions opts;
  opts.locality = locality;
  return shift_to_no_instance(random_local_hamiltonian(n, rng, opts), eps);
}

const char* to_string(AdversaryFamily f) {
  switch (f) {
    case AdversaryFamily::kPerturbedGround: return "perturbed_ground";
    case AdversaryFamily::kRandomProduct: return "random_product";
    case AdversaryFamily::kSignFlippedGround: return "sign_flipped_ground";
    case AdversaryFamily::kHonestGround: return "honest_ground";
    case AdversaryFamily::kHarmonicTrap: return "harmonic_trap";
  }
  return "?";
}

std::vector<NamedWitness> adversarial_witnesses(const Instance<double>& inst, RngStream& rng, std::size_t count,
                                                const std::vector<AdversaryFamily>& families_in) {
  const std::vector<AdversaryFamily> families =
      families_in.empty() ? std::vector<AdversaryFamily>{AdversaryFamily::kPerturbedGround,
                                                         AdversaryFamily::kRandomProduct,
                                                         AdversaryFamily::kSignFlippedGround,
                                                         AdversaryFamily::kHonestGround, AdversaryFamily::kHarmonicTrap}
                          : families_in;
  const auto& h = inst.hamiltonian;
  const int n = h.qubits();
  if (n > 10) throw SizeCapError("adversarial_witnesses: more than 10 qubits");
  const double a = inst.a;
  const Eigen::VectorXd ground = dense_ground_vector(h);
  std::vector<NamedWitness> out;
  for (std::size_t i = 0; i < count; ++i) {
    const AdversaryFamily fam = families[i % families.size()];
    std::optional<AmplitudeOracle<double>> oracle;
    std::optional<BasisIndex> x_in;
    switch (fam) {
      case AdversaryFamily::kPerturbedGround: {
        RandomHamiltonianOptions opts;
        opts.locality = std::max(1, h.locality());
        opts.scale = 0.3;
        const auto pert = random_local_hamiltonian(n, rng, opts);
        std::vector<LocalTerm<double>> terms = h.terms();
        for (const auto& t : pert.terms()) terms.push_back(t);
        const LocalHamiltonian<double> hp(n, std::move(terms), std::max(h.locality(), pert.locality()));
        oracle = vector_oracle(n, dense_ground_vector(hp));
        break;
      }
      case AdversaryFamily::kRandomProduct:
        oracle = make_oracle(product_descriptor(random_product_state(n, rng)));
        break;
      case AdversaryFamily::kSignFlippedGround: {
        Eigen::VectorXd v = ground;
        const std::size_t forced = randint(rng, static_cast<std::size_t>(v.size()));
        for (Eigen::Index j = 0; j < v.size(); ++j) {
          if (static_cast<std::size_t>(j) == forced || rng.sample_uniform() < 0.5) v(j) = -v(j);
        }
        oracle = vector_oracle(n, v);
        break;
      }
      case AdversaryFamily::kHonestGround:
        oracle = vector_oracle(n, ground);
        break;
      case AdversaryFamily::kHarmonicTrap: {
        // Solve (H - aI) phi = 0 on every row except x*, with phi(x*) = 1.
        const DenseOperator d = materialize(h);
        const Eigen::MatrixXd hs = d.re - a * Eigen::MatrixXd::Identity(d.re.rows(), d.re.cols());
        const auto dim = hs.rows();
        const auto star = static_cast<Eigen::Index>(randint(rng, static_cast<std::size_t>(dim)));
        Eigen::VectorXd phi = Eigen::VectorXd::Zero(dim);
        phi(star) = 1.0;
        if (dim > 1) {
          std::vector<Eigen::Index> rest;
          for (Eigen::Index j = 0; j < dim; ++j)
            if (j != star) rest.push_back(j);
          const auto m = static_cast<Eigen::Index>(rest.size());
          Eigen::MatrixXd sub(m, m);
          Eigen::VectorXd rhs(m);
          for (Eigen::Index r = 0; r < m; ++r) {
            rhs(r) = -hs(rest[static_cast<std::size_t>(r)], star);
            for (Eigen::Index c = 0; c < m; ++c) sub(r, c) = hs(rest[static_cast<std::size_t>(r)], rest[static_cast<std::size_t>(c)]);
          }
          const Eigen::VectorXd sol = sub.ldlt().solve(rhs);
          for (Eigen::Index r = 0; r < m; ++r) phi(rest[static_cast<std::size_t>(r)]) = sol(r);
        }
        phi /= phi.cwiseAbs().maxCoeff();
        oracle = vector_oracle(n, phi);
        // start as far from the trap as the amplitudes allow
        double best = -1.0;
        for (Eigen::Index j = 0; j < dim; ++j) {
          if (j == star && dim > 1) continue;
          if (std::abs(phi(j)) > best) {
            best = std::abs(phi(j));
            x_in = BasisIndex(static_cast<std::uint32_t>(j), n);
          }
        }
        break;
      }
    }
    if (!x_in) x_in = max_amplitude_string(*oracle);
    out.push_back({fam, Witness<double>{a, *oracle, *x_in}});
  }
  return out;
}

Witness<double> zero_support_witness(const Instance<double>& inst) {
  const int n = inst.hamiltonian.qubits();
  return Witness<double>{inst.a, make_oracle(superposition_descriptor(n, {})), BasisIndex(0u, n)};
}

YesFixture circuit_to_hamiltonian(const ReversibleCircuit& c, int coins, const std::string& witness_bits,
                                  const HistoryOptions& opts) {
  if (coins < 0 || coins % 2 != 0) throw ArgumentError("circuit_to_hamiltonian: the coin count r must be even");
  const int p = c.wires();
  const int w = static_cast<int>(witness_bits.size());
  const int ancillas = p - coins - w;
  if (ancillas < 0) throw ArgumentError("circuit_to_hamiltonian: coins + witness exceed the wire count");
  const int T = c.size();
  if (T < 1) throw ArgumentError("circuit_to_hamiltonian: circuit needs at least one gate");
  const int n = p + T;
  if (n > kMaxQubits) throw ArgumentError("circuit_to_hamiltonian: more than 24 qubits");
  auto clock = [p](int j) { return p + j - 1; };  // c_j, 1-based

  std::vector<LocalTerm<double>> terms;
  // clock validity: no 0 followed by 1
  for (int j = 1; j < T; ++j) {
    LocalMatrix m(2);
    m.at(1, 1) = 1.0;
    terms.emplace_back(std::vector<int>{clock(j), clock(j + 1)}, m.m);
  }
  // input: ancillas |0>, coins |+>, at clock 0 (c_1 = 0)
  for (int i = 0; i < ancillas + coins; ++i) {
    LocalMatrix m(2);
    if (i < ancillas) {
      m.at(2, 2) = 1.0;
    } else {
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) m.at(static_cast<std::size_t>(2 * a), static_cast<std::size_t>(2 * b)) = a == b ? 0.5 : -0.5;
    }
    terms.emplace_back(std::vector<int>{i, clock(1)}, m.m);
  }
  // propagation
  for (int t = 1; t <= T; ++t) {
    const Gate& gate = c.gates()[static_cast<std::size_t>(t - 1)];
    std::vector<int> support = gate.wires;
    const int g = static_cast<int>(gate.wires.size());
    // clock window (c_{t-1}, c_t, c_{t+1}) trimmed at the ends; pattern for
    // "t-1" is (1, 0, 0) and for "t" is (1, 1, 0).
    std::vector<std::pair<int, std::array<int, 2>>> window;  // (clock index, {bit at t-1, bit at t})
    if (t > 1) window.push_back({t - 1, {1, 1}});
    window.push_back({t, {0, 1}});
    if (t < T) window.push_back({t + 1, {0, 0}});
    for (const auto& cw : window) support.push_back(clock(cw.first));
    LocalMatrix m(support.size());
    Gate local = gate;
    for (int i = 0; i < g; ++i) local.wires[static_cast<std::size_t>(i)] = i;
    auto split = [&](std::size_t l, std::uint32_t& data, int& phase) {
      data = 0;
      for (int i = 0; i < g; ++i) data |= static_cast<std::uint32_t>(m.bit(l, static_cast<std::size_t>(i))) << i;
      bool before = true, after = true;
      for (std::size_t k = 0; k < window.size(); ++k) {
        const int b = m.bit(l, static_cast<std::size_t>(g) + k);
        before = before && b == window[k].second[0];
        after = after && b == window[k].second[1];
      }
      phase = before ? 0 : (after ? 1 : -1);
    };
    for (std::size_t u = 0; u < m.dim; ++u) {
      std::uint32_t du;
      int pu;
      split(u, du, pu);
      if (pu < 0) continue;
      m.at(u, u) += 0.5;
      for (std::size_t v = 0; v < m.dim; ++v) {
        std::uint32_t dv;
        int pv;
        split(v, dv, pv);
        if (pu == 1 && pv == 0 && du == local.apply(dv)) {
          m.at(u, v) -= 0.5;
          m.at(v, u) -= 0.5;
        }
      }
    }
    terms.emplace_back(std::move(support), m.m);
  }
  if (opts.output_term) {
    if (opts.output_wire < 0 || opts.output_wire >= p) throw ArgumentError("circuit_to_hamiltonian: output wire out of range");
    LocalMatrix m(2);
    m.at(1, 1) = 1.0;
    terms.emplace_back(std::vector<int>{opts.output_wire, clock(T)}, m.m);
  }
  int locality = 0;
  for (const auto& t : terms) locality = std::max(locality, static_cast<int>(t.support().size()));
  LocalHamiltonian<double> h(n, std::move(terms), locality);
  double b;
  if (n <= 10) {
    b = next_eigenvalue(h, 0.0, 0.0);
  } else {
    b = opts.fallback_gap;
  }
  if (!(b > 0.0)) throw ArgumentError("circuit_to_hamiltonian: no certified gap; set fallback_gap");
  auto oracle = make_oracle(history_descriptor(c, ancillas, coins, witness_bits));
  const BasisIndex x_in = max_amplitude_string(oracle);
  return {"history_T" + std::to_string(T), Instance<double>{std::move(h), 0.0, b}, Witness<double>{0.0, oracle, x_in}};
}

}  // namespace fnv
