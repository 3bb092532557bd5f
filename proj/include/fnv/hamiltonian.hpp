// Copyright 2026 The fnv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string_view>
#include <utility>
#include <vector>

#include "fnv/basis.hpp"
#include "fnv/errors.hpp"
#include "fnv/numeric.hpp"

namespace fnv {

/// A (basis string, value) pair from a sparse row or column.
template <class V>
struct Entry {
  BasisIndex index;
  V value;
};

/// One k-local term: a dense 2^s x 2^s block acting on `support`. The first
/// support qubit is the most significant bit of the local index.
template <Real T>
class LocalTerm {
 public:
  LocalTerm(std::vector<int> support, std::vector<T> re, std::vector<T> im = {},
            const Tolerances& tol = {})
      : support_(std::move(support)), re_(std::move(re)), im_(std::move(im)) {
    const std::size_t dim = std::size_t{1} << support_.size();
    if (support_.size() > static_cast<std::size_t>(kMaxQubits)) {
      throw ArgumentError("LocalTerm: support too large");
    }
    if (re_.size() != dim * dim) throw ArgumentError("LocalTerm: matrix size must be 2^|support| squared");
    if (im_.empty()) im_.assign(dim * dim, T{});
    if (im_.size() != dim * dim) throw ArgumentError("LocalTerm: imaginary part has wrong size");
    for (std::size_t i = 0; i < support_.size(); ++i) {
      if (support_[i] < 0) throw ArgumentError("LocalTerm: negative qubit index");
      for (std::size_t j = 0; j < i; ++j) {
        if (support_[i] == support_[j]) throw ArgumentError("LocalTerm: support qubits must be distinct");
      }
    }
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        const T dr = re_[i * dim + j] - re_[j * dim + i];
        const T di = im_[i * dim + j] + im_[j * dim + i];
        bool ok;
        if constexpr (kExact<T>) {
          ok = dr == 0 && di == 0;
        } else {
          ok = std::abs(dr) <= tol.herm && std::abs(di) <= tol.herm;
        }
        if (!ok) throw ArgumentError("LocalTerm: matrix is not Hermitian");
      }
    }
    build_tables();
  }

  /// Pauli string such as "XZ" on the listed qubits, scaled by `coeff`.
  static LocalTerm pauli(std::string_view ops, std::vector<int> qubits, T coeff) {
    if (ops.size() != qubits.size()) throw ArgumentError("pauli: ops and qubits differ in length");
    std::vector<Scalar<T>> mat{Scalar<T>(coeff)};
    std::size_t dim = 1;
    for (char op : ops) {
      Scalar<T> p[4];
      const T one(1), zero(0), neg(-1);
      switch (op) {
        case 'I': p[0] = one; p[1] = zero; p[2] = zero; p[3] = one; break;
        case 'X': p[0] = zero; p[1] = one; p[2] = one; p[3] = zero; break;
        case 'Y': p[0] = zero; p[1] = Scalar<T>(zero, neg); p[2] = Scalar<T>(zero, one); p[3] = zero; break;
        case 'Z': p[0] = one; p[1] = zero; p[2] = zero; p[3] = neg; break;
        default: throw ArgumentError("pauli: unknown operator");
      }
      const std::size_t nd = dim * 2;
      std::vector<Scalar<T>> next(nd * nd);
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
          for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 0; b < 2; ++b)
              next[(2 * i + a) * nd + (2 * j + b)] = mat[i * dim + j] * p[a * 2 + b];
      mat = std::move(next);
      dim = nd;
    }
    std::vector<T> re(dim * dim), im(dim * dim);
    for (std::size_t i = 0; i < dim * dim; ++i) {
      re[i] = mat[i].re;
      im[i] = mat[i].im;
    }
    return LocalTerm(std::move(qubits), std::move(re), std::move(im));
  }

  /// c * I, acting on no qubits.
  static LocalTerm identity(T coeff) { return LocalTerm({}, {std::move(coeff)}); }

  [[nodiscard]] const std::vector<int>& support() const { return support_; }
  [[nodiscard]] std::size_t dim() const { return std::size_t{1} << support_.size(); }
  [[nodiscard]] Scalar<T> at(std::size_t i, std::size_t j) const {
    return {re_[i * dim() + j], im_[i * dim() + j]};
  }
  [[nodiscard]] const std::vector<T>& re() const { return re_; }
  [[nodiscard]] const std::vector<T>& im() const { return im_; }

  [[nodiscard]] bool is_real() const {
    return std::all_of(im_.begin(), im_.end(), [](const T& v) { return v == T{}; });
  }

  [[nodiscard]] std::uint32_t mask() const { return mask_; }

  [[nodiscard]] std::size_t local_index(std::uint32_t bits) const {
    std::size_t l = 0;
    for (int q : support_) l = (l << 1) | ((bits >> q) & 1u);
    return l;
  }

  [[nodiscard]] std::uint32_t scatter(std::size_t local) const { return scatter_[local]; }

  /// Nonzero (column, value) pairs of local row `i`.
  [[nodiscard]] const std::vector<std::pair<std::size_t, Scalar<T>>>& row(std::size_t i) const {
    return rows_[i];
  }

  /// Spectral norm of the block.
  [[nodiscard]] double spectral_norm() const {
    const auto d = static_cast<Eigen::Index>(dim());
    Eigen::MatrixXcd m(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) {
        const auto s = at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        m(i, j) = {to_double(s.re), to_double(s.im)};
      }
    m = (m + m.adjoint()).eval() * 0.5;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
  }

 private:
  void build_tables() {
    const std::size_t d = dim();
    const std::size_t s = support_.size();
    mask_ = 0;
    for (int q : support_) mask_ |= (1u << q);
    scatter_.assign(d, 0);
    for (std::size_t l = 0; l < d; ++l) {
      std::uint32_t bits = 0;
      for (std::size_t j = 0; j < s; ++j) {
        if ((l >> (s - 1 - j)) & 1u) bits |= (1u << support_[j]);
      }
      scatter_[l] = bits;
    }
    rows_.assign(d, {});
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Scalar<T> v = at(i, j);
        if (v.re != T{} || v.im != T{}) rows_[i].emplace_back(j, std::move(v));
      }
  }

  std::vector<int> support_;
  std::vector<T> re_;
  std::vector<T> im_;
  std::uint32_t mask_ = 0;
  std::vector<std::uint32_t> scatter_;
  std::vector<std::vector<std::pair<std::size_t, Scalar<T>>>> rows_;
};

/// H = sum_j H_j on `qubits` qubits. Immutable; copies share the term list.
template <Real T>
class LocalHamiltonian {
 public:
  LocalHamiltonian(int qubits, std::vector<LocalTerm<T>> terms, int locality = -1,
                   const Tolerances& tol = {})
      : qubits_(qubits), tol_(tol) {
    if (qubits < 0 || qubits > kMaxQubits) throw ArgumentError("LocalHamiltonian: qubit count must lie in [0, 24]");
    int widest = 0;
    double norm = 0.0;
    bool real = true;
    for (const auto& term : terms) {
      for (int q : term.support()) {
        if (q >= qubits) throw ArgumentError("LocalHamiltonian: term support outside [0, n)");
      }
      widest = std::max(widest, static_cast<int>(term.support().size()));
      norm += term.spectral_norm();
      real = real && term.is_real();
    }
    if (locality < 0) locality = widest;
    if (locality < widest) throw ArgumentError("LocalHamiltonian: a term exceeds the declared locality");
    locality_ = locality;
    norm_bound_ = norm;
    real_ = real;
    terms_ = std::make_shared<const std::vector<LocalTerm<T>>>(std::move(terms));
  }

  [[nodiscard]] int qubits() const { return qubits_; }
  [[nodiscard]] int locality() const { return locality_; }
  [[nodiscard]] std::size_t term_count() const { return terms_->size(); }
  [[nodiscard]] const std::vector<LocalTerm<T>>& terms() const { return *terms_; }
  [[nodiscard]] double norm_bound() const { return norm_bound_; }
  [[nodiscard]] bool is_real() const { return real_; }
  [[nodiscard]] const Tolerances& tolerances() const { return tol_; }

  /// d = 2^k * m.
  [[nodiscard]] std::uint64_t sparsity_bound() const {
    return (std::uint64_t{1} << locality_) * static_cast<std::uint64_t>(terms_->size());
  }

  /// Returns a copy with one more term appended.
  [[nodiscard]] LocalHamiltonian with_term(LocalTerm<T> extra) const {
    std::vector<LocalTerm<T>> all = *terms_;
    all.push_back(std::move(extra));
    return LocalHamiltonian(qubits_, std::move(all), locality_, tol_);
  }

  /// <x|H|y>.
  [[nodiscard]] Scalar<T> entry(const BasisIndex& x, const BasisIndex& y) const {
    require_width(x, qubits_, "hamiltonian_entry");
    require_width(y, qubits_, "hamiltonian_entry");
    Scalar<T> sum;
    for (const auto& term : *terms_) {
      const std::uint32_t outside = ~term.mask();
      if ((x.bits() & outside) != (y.bits() & outside)) continue;
      sum += term.at(term.local_index(x.bits()), term.local_index(y.bits()));
    }
    return sum;
  }

  /// All y with <x|H|y> != 0, ascending, duplicates summed. Never scans
  /// the 2^n basis; at most 2^k * m entries.
  [[nodiscard]] std::vector<Entry<Scalar<T>>> row_nonzeros(const BasisIndex& x) const {
    require_width(x, qubits_, "row_nonzeros");
    std::vector<std::pair<std::uint32_t, Scalar<T>>> acc;
    for (const auto& term : *terms_) {
      const std::uint32_t base = x.bits() & ~term.mask();
      for (const auto& [col, value] : term.row(term.local_index(x.bits()))) {
        acc.emplace_back(base | term.scatter(col), value);
      }
    }
    std::stable_sort(acc.begin(), acc.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Entry<Scalar<T>>> out;
    for (std::size_t i = 0; i < acc.size();) {
      Scalar<T> sum = acc[i].second;
      std::size_t j = i + 1;
      for (; j < acc.size() && acc[j].first == acc[i].first; ++j) sum += acc[j].second;
      if (!is_zero(sum, tol_)) out.push_back({BasisIndex(acc[i].first, qubits_), std::move(sum)});
      i = j;
    }
    return out;
  }

  /// All y with <y|H|x> != 0; equals the conjugated row by Hermiticity.
  [[nodiscard]] std::vector<Entry<Scalar<T>>> column_nonzeros(const BasisIndex& x) const {
    auto out = row_nonzeros(x);
    for (auto& e : out) e.value = e.value.conj();
    return out;
  }

  /// Real-valued row for real Hamiltonians.
  [[nodiscard]] std::vector<Entry<T>> real_row(const BasisIndex& x) const {
    auto full = row_nonzeros(x);
    std::vector<Entry<T>> out;
    out.reserve(full.size());
    for (auto& e : full) out.push_back({e.index, std::move(e.value.re)});
    return out;
  }

 private:
  int qubits_;
  int locality_ = 0;
  double norm_bound_ = 0.0;
  bool real_ = true;
  Tolerances tol_;
  std::shared_ptr<const std::vector<LocalTerm<T>>> terms_;
};

}  // namespace fnv

