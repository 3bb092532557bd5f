// Copyright 2026 The fnv Authors
// SPDX-License-Identifier: Apache-2.0

#include "fnv/dense_oracle.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <complex>
#include <unordered_map>

namespace fnv {

namespace {

constexpr int kDenseQubits = 12;

void require_cap(std::size_t dim, std::size_t cap, const char* what) {
  if (dim > cap) throw SizeCapError(std::string(what) + ": dimension exceeds " + std::to_string(cap));
}

std::unordered_map<std::uint32_t, Eigen::Index> label_map(const std::vector<BasisIndex>& labels) {
  std::unordered_map<std::uint32_t, Eigen::Index> pos;
  pos.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) pos.emplace(labels[i].bits(), static_cast<Eigen::Index>(i));
  return pos;
}

double hermitian_defect(const DenseOperator& d) {
  double defect = (d.re - d.re.transpose()).cwiseAbs().maxCoeff();
  if (d.im) defect = std::max(defect, (*d.im + d.im->transpose()).cwiseAbs().maxCoeff());
  return defect;
}

void require_hermitian(const DenseOperator& d, const Tolerances& tol) {
  if (d.dim() > 0 && hermitian_defect(d) > tol.herm) throw ArgumentError("dense oracle: operator is not Hermitian");
}

}  // namespace

Eigen::MatrixXcd DenseOperator::complex() const {
  Eigen::MatrixXcd out = re.cast<std::complex<double>>();
  if (im) out += std::complex<double>(0.0, 1.0) * im->cast<std::complex<double>>();
  return out;
}

std::vector<BasisIndex> full_basis(int width) {
  if (width > kDenseQubits) throw SizeCapError("dense oracle: more than 12 qubits");
  std::vector<BasisIndex> out;
  out.reserve(std::size_t{1} << width);
  for (std::uint32_t b = 0; b < (1u << width); ++b) out.emplace_back(b, width);
  return out;
}

std::vector<BasisIndex> support_of(const AmplitudeOracle<double>& phi) {
  std::vector<BasisIndex> out;
  for (const auto& x : full_basis(phi.qubits())) {
    if (phi.in_support(x)) out.push_back(x);
  }
  return out;
}

Eigen::VectorXd amplitudes(const AmplitudeOracle<double>& phi, const std::vector<BasisIndex>& labels) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(labels.size()));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto c = phi.evaluate(labels[i]);
    if (c.im != 0.0) throw ArgumentError("amplitudes: complex amplitude");
    v(static_cast<Eigen::Index>(i)) = c.re;
  }
  return v;
}

DenseOperator materialize(const LocalHamiltonian<double>& h, const std::vector<BasisIndex>* subset) {
  DenseOperator d;
  d.labels = subset ? *subset : full_basis(h.qubits());
  require_cap(d.dim(), kDenseCap, "materialize");
  const auto n = static_cast<Eigen::Index>(d.dim());
  d.re = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd im = Eigen::MatrixXd::Zero(n, n);
  const auto pos = label_map(d.labels);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (const auto& e : h.row_nonzeros(d.labels[static_cast<std::size_t>(i)])) {
      const auto it = pos.find(e.index.bits());
      if (it == pos.end()) continue;
      d.re(i, it->second) = e.value.re;
      im(i, it->second) = e.value.im;
    }
  }
  if (!h.is_real()) d.im = std::move(im);
  return d;
}

DenseOperator materialize(const FixedNodeView<double>& f, const std::vector<BasisIndex>* subset) {
  DenseOperator d;
  d.labels = subset ? *subset : support_of(f.oracle());
  require_cap(d.dim(), kDenseCap, "materialize");
  const auto n = static_cast<Eigen::Index>(d.dim());
  d.re = Eigen::MatrixXd::Zero(n, n);
  const auto pos = label_map(d.labels);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (const auto& e : f.row(d.labels[static_cast<std::size_t>(i)])) {
      const auto it = pos.find(e.index.bits());
      if (it != pos.end()) d.re(i, it->second) = e.value;
    }
  }
  return d;
}

DenseOperator materialize(const GeneratorView<double>& g, const std::vector<BasisIndex>* subset) {
  DenseOperator d;
  d.labels = subset ? *subset : support_of(g.fixed_node().oracle());
  require_cap(d.dim(), kDenseCap, "materialize");
  const auto n = static_cast<Eigen::Index>(d.dim());
  d.re = Eigen::MatrixXd::Zero(n, n);
  const auto pos = label_map(d.labels);
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto col = g.column(d.labels[static_cast<std::size_t>(j)]);
    d.re(j, j) = col.diagonal;
    for (const auto& e : col.off_diagonal) {
      const auto it = pos.find(e.index.bits());
      if (it != pos.end()) d.re(it->second, j) = e.value;
    }
  }
  return d;
}

GroundState ground_energy(const DenseOperator& d, const Tolerances& tol) {
  require_hermitian(d, tol);
  if (d.dim() == 0) throw ArgumentError("ground_energy: empty operator");
  GroundState gs;
  if (d.is_complex()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(d.complex());
    gs.energy = es.eigenvalues()(0);
    gs.complex_vector = es.eigenvectors().col(0);
    gs.vector = gs.complex_vector.real();
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(d.re);
    gs.energy = es.eigenvalues()(0);
    gs.vector = es.eigenvectors().col(0);
    gs.complex_vector = gs.vector.cast<std::complex<double>>();
  }
  return gs;
}

Eigen::VectorXd eigenvalues(const DenseOperator& d, const Tolerances& tol) {
  require_hermitian(d, tol);
  if (d.is_complex()) {
    return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(d.complex(), Eigen::EigenvaluesOnly).eigenvalues();
  }
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(d.re, Eigen::EigenvaluesOnly).eigenvalues();
}

Eigen::VectorXcd general_eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::VectorXcd ev = Eigen::EigenSolver<Eigen::MatrixXd>(m, false).eigenvalues();
  std::vector<std::complex<double>> v(ev.data(), ev.data() + ev.size());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return Eigen::Map<Eigen::VectorXcd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

Eigen::VectorXd refined_ground_vector(const Eigen::MatrixXd& h, double* energy) {
  using MatL = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  using VecL = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  const MatL hl = h.cast<long double>();
  VecL v = es.eigenvectors().col(0).cast<long double>();
  long double lambda = v.dot(hl * v) / v.dot(v);
  const long double scale = 1.0L + h.cwiseAbs().maxCoeff();
  for (int it = 0; it < 3; ++it) {
    MatL shifted = hl;
    // A tiny offset keeps the solve well defined when lambda is exact.
    shifted.diagonal().array() -= lambda - scale * 1e-14L;
    VecL next = shifted.partialPivLu().solve(v);
    if (!next.allFinite()) break;
    next /= next.norm();
    if (next.dot(v) < 0) next = -next;
    v = next;
    lambda = v.dot(hl * v);
  }
  if (energy) *energy = static_cast<double>(lambda);
  return v.cast<double>();
}

DenseOperator matrix_exponential(const DenseOperator& d, double s) {
  require_cap(d.dim(), kExpCap, "matrix_exponential");
  if (d.is_complex()) throw ArgumentError("matrix_exponential: real operators only");
  DenseOperator out;
  out.labels = d.labels;
  out.re = (d.re * s).exp();
  return out;
}

bool LemmaReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.skipped || c.passed; });
}

const LemmaCheck& LemmaReport::check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw ArgumentError("LemmaReport: no check named " + name);
}

nlohmann::json LemmaReport::to_json() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& c : checks) {
    checks_json.push_back({{"name", c.name}, {"passed", c.passed}, {"skipped", c.skipped},
                           {"value", c.value}, {"threshold", c.threshold}});
  }
  return {{"support_size", support_size}, {"phi_is_ground", phi_is_ground}, {"lambda_h", lambda_h},
          {"lambda_max_h", lambda_max_h}, {"lambda_hs", lambda_hs},       {"lambda_f", lambda_f},
          {"norm_h", norm_h},             {"all_passed", all_passed()},   {"checks", checks_json}};
}

LemmaReport check_lemma_suite(const LocalHamiltonian<double>& h, const AmplitudeOracle<double>& phi) {
  if (!h.is_real()) throw ArgumentError("check_lemma_suite: Hamiltonian must be real");
  LemmaReport rep;
  const auto support = support_of(phi);
  require_cap(support.size(), kDenseCap, "check_lemma_suite");
  if (support.empty()) throw SupportError("check_lemma_suite: empty support");
  rep.support_size = support.size();

  auto add = [&](std::string name, double value, double threshold, bool ok) {
    rep.checks.push_back({std::move(name), ok, false, value, threshold});
  };
  auto skip = [&](std::string name) { rep.checks.push_back({std::move(name), true, true, 0.0, 0.0}); };

  const DenseOperator full = materialize(h);
  const Eigen::VectorXd spec_h = eigenvalues(full);
  rep.lambda_h = spec_h(0);
  rep.lambda_max_h = spec_h(spec_h.size() - 1);
  rep.norm_h = std::max(std::abs(rep.lambda_h), std::abs(rep.lambda_max_h));

  const DenseOperator hs = materialize(h, &support);
  rep.lambda_hs = eigenvalues(hs)(0);

  const FixedNodeView<double> fn(h, phi);
  const DenseOperator f = materialize(fn, &support);
  const Eigen::VectorXd phi_s = amplitudes(phi, support);
  const auto dim = static_cast<Eigen::Index>(support.size());

  add("f_symmetric", (f.re - f.re.transpose()).cwiseAbs().maxCoeff(), 1e-12,
      (f.re - f.re.transpose()).cwiseAbs().maxCoeff() <= 1e-12);

  double worst = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      if (i == j) continue;
      const double s = (phi_s(i) > 0 ? 1.0 : -1.0) * f.re(i, j) * (phi_s(j) > 0 ? 1.0 : -1.0);
      worst = std::max(worst, s);
    }
  }
  if (dim < 2) worst = 0.0;
  add("sign_conjugated_stoquastic", worst, 1e-12, worst <= 1e-12);

  const double fphi = ((f.re - hs.re) * phi_s).norm();
  const double fphi_tol = 1e-9 * rep.norm_h * phi_s.norm();
  add("f_phi_equals_h_phi", fphi, fphi_tol, fphi <= fphi_tol);

  const Eigen::VectorXd spec_f = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(
                                     0.5 * (f.re + f.re.transpose()), Eigen::EigenvaluesOnly)
                                     .eigenvalues();
  rep.lambda_f = spec_f(0);
  add("lambda_f_ge_lambda_hs", rep.lambda_hs - rep.lambda_f, 1e-9, rep.lambda_f >= rep.lambda_hs - 1e-9);

  add("submatrix_interlacing", std::max(rep.lambda_h - rep.lambda_hs, rep.lambda_hs - rep.lambda_max_h), 1e-9,
      rep.lambda_h <= rep.lambda_hs + 1e-9 && rep.lambda_hs <= rep.lambda_max_h + 1e-9);

  const double residual = (hs.re * phi_s - rep.lambda_hs * phi_s).norm();
  rep.phi_is_ground = residual <= 1e-8 * (1.0 + rep.norm_h) * phi_s.norm();

  const char* conditional[] = {"lambda_f_eq_lambda_hs", "g_tilde_column_sums", "g_tilde_offdiag_nonneg",
                               "g_tilde_stationary", "g_tilde_spectrum"};
  if (!rep.phi_is_ground) {
    for (const char* name : conditional) skip(name);
    return rep;
  }
  add("lambda_f_eq_lambda_hs", std::abs(rep.lambda_f - rep.lambda_hs), 1e-9,
      std::abs(rep.lambda_f - rep.lambda_hs) <= 1e-9);

  const GeneratorView<double> gt(fn, rep.lambda_f);
  const DenseOperator g = materialize(gt, &support);
  const double col_sum = g.re.colwise().sum().cwiseAbs().maxCoeff();
  add("g_tilde_column_sums", col_sum, 1e-9, col_sum <= 1e-9);

  double min_off = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      if (i != j) min_off = std::min(min_off, g.re(i, j));
  add("g_tilde_offdiag_nonneg", -min_off, 1e-12, min_off >= -1e-12);

  const Eigen::VectorXd pi = phi_s.cwiseAbs2() / phi_s.squaredNorm();
  const double stat = (g.re * pi).norm();
  add("g_tilde_stationary", stat, 1e-9, stat <= 1e-9);

  const Eigen::VectorXcd eg = general_eigenvalues(g.re);
  Eigen::VectorXd expect = (rep.lambda_f - spec_f.array()).matrix();
  std::sort(expect.data(), expect.data() + expect.size());
  double spec_err = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i) spec_err = std::max(spec_err, std::abs(eg(i) - expect(i)));
  add("g_tilde_spectrum", spec_err, 1e-7, spec_err <= 1e-7);
  return rep;
}

}  // namespace fnv
