// Copyright 2026 The fnv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "fnv/fixed_node.hpp"

namespace fnv {

inline constexpr std::size_t kDenseCap = 4096;
inline constexpr std::size_t kExpCap = 256;

/// Dense copy of an operator restricted to `labels`; entry (i, j) is
/// <labels[i]| D |labels[j]>.
struct DenseOperator {
  Eigen::MatrixXd re;
  std::optional<Eigen::MatrixXd> im;
  std::vector<BasisIndex> labels;

  [[nodiscard]] std::size_t dim() const { return labels.size(); }
  [[nodiscard]] bool is_complex() const { return im.has_value(); }
  [[nodiscard]] Eigen::MatrixXcd complex() const;
};

/// Every string of the given width, ascending (width <= 12).
std::vector<BasisIndex> full_basis(int width);

/// supp(phi) by enumeration (width <= 12).
std::vector<BasisIndex> support_of(const AmplitudeOracle<double>& phi);

/// Real amplitudes of phi on `labels`.
Eigen::VectorXd amplitudes(const AmplitudeOracle<double>& phi, const std::vector<BasisIndex>& labels);

DenseOperator materialize(const LocalHamiltonian<double>& h, const std::vector<BasisIndex>* subset = nullptr);
DenseOperator materialize(const FixedNodeView<double>& f, const std::vector<BasisIndex>* subset = nullptr);
/// Entry (i, j) is <labels[i]|G|labels[j]>, the rate from j to i.
DenseOperator materialize(const GeneratorView<double>& g, const std::vector<BasisIndex>* subset = nullptr);

struct GroundState {
  double energy = 0.0;
  Eigen::VectorXd vector;          ///< real input
  Eigen::VectorXcd complex_vector; ///< complex input
};

/// Smallest eigenvalue and a unit eigenvector of a Hermitian operator.
GroundState ground_energy(const DenseOperator& d, const Tolerances& tol = {});

/// Ascending spectrum of a Hermitian operator.
Eigen::VectorXd eigenvalues(const DenseOperator& d, const Tolerances& tol = {});

/// Spectrum of a general real matrix, sorted by (real, imag).
Eigen::VectorXcd general_eigenvalues(const Eigen::MatrixXd& m);

/// Ground vector of a real symmetric matrix polished by long double inverse
/// iteration, so that small components keep full relative accuracy.
Eigen::VectorXd refined_ground_vector(const Eigen::MatrixXd& h, double* energy = nullptr);

/// exp(D s) for real D, dim <= 256.
DenseOperator matrix_exponential(const DenseOperator& d, double s);

struct LemmaCheck {
  std::string name;
  bool passed = true;
  bool skipped = false;
  double value = 0.0;
  double threshold = 0.0;
};

struct LemmaReport {
  std::size_t support_size = 0;
  bool phi_is_ground = false;
  double lambda_h = 0.0;
  double lambda_max_h = 0.0;
  double lambda_hs = 0.0;
  double lambda_f = 0.0;
  double norm_h = 0.0;
  std::vector<LemmaCheck> checks;

  [[nodiscard]] bool all_passed() const;
  [[nodiscard]] const LemmaCheck& check(const std::string& name) const;
  [[nodiscard]] nlohmann::json to_json() const;
};

/// Dense verification of every fixed-node and generator property on one
/// (H, phi) pair. Ground-state-conditional checks are skipped when phi is not
/// a ground state of H_S.
LemmaReport check_lemma_suite(const LocalHamiltonian<double>& h, const AmplitudeOracle<double>& phi);

}  // namespace fnv
