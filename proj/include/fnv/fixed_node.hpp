// Copyright 2026 The fnv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fnv/amplitude.hpp"
#include "fnv/hamiltonian.hpp"

namespace fnv {

enum class PairClass { kSPlus, kSMinus, kDiagonal };

inline const char* to_string(PairClass c) {
  switch (c) {
    case PairClass::kSPlus: return "S_PLUS";
    case PairClass::kSMinus: return "S_MINUS";
    case PairClass::kDiagonal: return "DIAGONAL";
  }
  return "?";
}

/// Off-diagonal neighbour z of x inside S, with <x|H|z>, C(z) and the class
/// of the pair (x, z).
template <Real T>
struct Neighbor {
  BasisIndex index;
  T h;
  T amplitude;
  PairClass cls;
};

/// Everything row x of F needs, gathered in one sparse pass.
template <Real T>
struct LocalRow {
  BasisIndex x;
  T amplitude;
  T h_diag;
  std::vector<Neighbor<T>> neighbors;  // ascending, all inside S
};

/// Lazy view of the fixed-node Hamiltonian F^{H,phi} on S = supp(phi).
/// Entries are computed on demand; strings outside S are rejected.
template <Real T>
class FixedNodeView {
 public:
  FixedNodeView(LocalHamiltonian<T> h, AmplitudeOracle<T> phi)
      : h_(std::move(h)), phi_(std::move(phi)) {
    if (!h_.is_real()) throw ArgumentError("FixedNodeView: Hamiltonian must be real; realify first");
    if (h_.qubits() != phi_.qubits()) throw ArgumentError("FixedNodeView: oracle width differs from Hamiltonian");
  }

  [[nodiscard]] const LocalHamiltonian<T>& hamiltonian() const { return h_; }
  [[nodiscard]] const AmplitudeOracle<T>& oracle() const { return phi_; }
  [[nodiscard]] const Tolerances& tolerances() const { return h_.tolerances(); }

  [[nodiscard]] bool in_support(const BasisIndex& x) const { return phi_.in_support(x); }

  /// Real amplitude C(x); x must lie in S.
  [[nodiscard]] T amplitude(const BasisIndex& x) const {
    const Scalar<T> v = phi_.evaluate(x);
    if (v.im != T{}) throw ArgumentError("FixedNodeView: complex amplitude; realify the state first");
    if (is_zero(v.re, phi_.tolerances())) {
      throw SupportError("fixed-node view: " + x.to_string() + " is outside supp(phi)");
    }
    return v.re;
  }

  /// C(z)/C(x), with the common factor cancelling.
  [[nodiscard]] T ratio(const T& cz, const T& cx) const {
    T r = cz / cx;
    if constexpr (!kExact<T>) {
      if (!std::isfinite(r) || std::abs(r) > tolerances().ratio_max) {
        throw NumericRangeError("fixed-node view: amplitude ratio out of range");
      }
    }
    return r;
  }

  [[nodiscard]] PairClass classify(const T& cx, const T& hxy, const T& cy) const {
    if constexpr (kExact<T>) {
      return cx * hxy * cy > 0 ? PairClass::kSPlus : PairClass::kSMinus;
    } else {
      if (std::abs(hxy) <= tolerances().zero) return PairClass::kSMinus;
      return sign_of(cx) * sign_of(hxy) * sign_of(cy) > 0 ? PairClass::kSPlus : PairClass::kSMinus;
    }
  }

  [[nodiscard]] PairClass classify_pair(const BasisIndex& x, const BasisIndex& y) const {
    const T cx = amplitude(x);
    const T cy = amplitude(y);
    if (x == y) return PairClass::kDiagonal;
    return classify(cx, h_.entry(x, y).re, cy);
  }

  [[nodiscard]] LocalRow<T> local_row(const BasisIndex& x) const {
    LocalRow<T> row{x, amplitude(x), T{}, {}};
    for (auto& e : h_.real_row(x)) {
      if (e.index == x) {
        row.h_diag = e.value;
        continue;
      }
      const Scalar<T> cz = phi_.evaluate(e.index);
      if (cz.im != T{}) throw ArgumentError("FixedNodeView: complex amplitude; realify the state first");
      if (is_zero(cz.re, phi_.tolerances())) continue;
      const PairClass cls = classify(row.amplitude, e.value, cz.re);
      row.neighbors.push_back({e.index, std::move(e.value), cz.re, cls});
    }
    return row;
  }

  /// <x|F|x> = <x|H|x> + sum over (x,z) in S+ of <x|H|z> C(z)/C(x).
  [[nodiscard]] T diagonal(const LocalRow<T>& row) const {
    T d = row.h_diag;
    for (const auto& nb : row.neighbors) {
      if (nb.cls == PairClass::kSPlus) d += nb.h * ratio(nb.amplitude, row.amplitude);
    }
    return d;
  }

  [[nodiscard]] T entry(const BasisIndex& x, const BasisIndex& y) const {
    if (x == y) return diagonal(local_row(x));
    const PairClass cls = classify_pair(x, y);
    return cls == PairClass::kSPlus ? T{} : h_.entry(x, y).re;
  }

  /// Nonzero entries of row x of F restricted to S, ascending.
  [[nodiscard]] std::vector<Entry<T>> row(const BasisIndex& x) const {
    const LocalRow<T> lr = local_row(x);
    std::vector<Entry<T>> out;
    T d = diagonal(lr);
    bool placed = false;
    auto place_diag = [&] {
      if (!placed && !is_zero(d, tolerances())) out.push_back({x, d});
      placed = true;
    };
    for (const auto& nb : lr.neighbors) {
      if (!placed && x < nb.index) place_diag();
      if (nb.cls == PairClass::kSMinus && !is_zero(nb.h, tolerances())) out.push_back({nb.index, nb.h});
    }
    place_diag();
    return out;
  }

 private:
  LocalHamiltonian<T> h_;
  AmplitudeOracle<T> phi_;
};

/// Column x of a generator: the rates out of x (off-diagonal, ascending by
/// target) and the diagonal entry <x|G|x>.
template <Real T>
struct GeneratorColumn {
  BasisIndex source;
  T diagonal{};
  std::vector<Entry<T>> off_diagonal;
};

enum class ColumnStatus { kOk, kNegativeRate, kNonzeroSum };

inline const char* to_string(ColumnStatus s) {
  switch (s) {
    case ColumnStatus::kOk: return "OK";
    case ColumnStatus::kNegativeRate: return "NEGATIVE_RATE";
    case ColumnStatus::kNonzeroSum: return "NONZERO_SUM";
  }
  return "?";
}

struct ColumnCheck {
  bool legal = true;
  ColumnStatus reason = ColumnStatus::kOk;
  double sum = 0.0;
  /// Legal within tolerance but with a column sum above round-off level.
  bool near_boundary = false;
};

/// Negative rates are checked before the column sum. The sum is taken in
/// ascending |value| order.
template <Real T>
ColumnCheck check_column(const GeneratorColumn<T>& col, const Tolerances& tol) {
  ColumnCheck out;
  for (const auto& e : col.off_diagonal) {
    bool negative;
    if constexpr (kExact<T>) {
      negative = e.value < 0;
    } else {
      negative = e.value < -tol.zero;
    }
    if (negative) {
      out.legal = false;
      out.reason = ColumnStatus::kNegativeRate;
      return out;
    }
  }
  std::vector<T> values;
  values.reserve(col.off_diagonal.size() + 1);
  values.push_back(col.diagonal);
  for (const auto& e : col.off_diagonal) values.push_back(e.value);
  std::sort(values.begin(), values.end(),
            [](const T& a, const T& b) { return abs_value(a) < abs_value(b); });
  T sum{};
  for (const auto& v : values) sum += v;
  out.sum = to_double(sum);
  if constexpr (kExact<T>) {
    out.legal = sum == 0;
  } else {
    const double scale = 1.0 + std::abs(col.diagonal);
    out.legal = std::abs(sum) <= tol.column * scale;
    out.near_boundary = out.legal && std::abs(sum) > 1e-3 * tol.column * scale;
  }
  if (!out.legal) out.reason = ColumnStatus::kNonzeroSum;
  return out;
}

/// Lazy view of the CTMC generator built from F. With a shift this is
/// G~ = shift*I - Diag(phi) F Diag(phi)^-1 entrywise; without one it is the
/// unshifted G used by the verifier. entry(x, y) is the rate from x to y,
/// i.e. <y|G|x>.
template <Real T>
class GeneratorView {
 public:
  using value_type = T;

  explicit GeneratorView(FixedNodeView<T> fixed_node, std::optional<T> shift = std::nullopt)
      : fn_(std::move(fixed_node)), shift_(std::move(shift)) {}

  [[nodiscard]] const FixedNodeView<T>& fixed_node() const { return fn_; }
  [[nodiscard]] const std::optional<T>& shift() const { return shift_; }
  [[nodiscard]] const Tolerances& tolerances() const { return fn_.tolerances(); }
  [[nodiscard]] int qubits() const { return fn_.hamiltonian().qubits(); }

  [[nodiscard]] T entry(const BasisIndex& x, const BasisIndex& y) const {
    const T cx = fn_.amplitude(x);
    const T cy = fn_.amplitude(y);
    T value = -fn_.entry(y, x) * fn_.ratio(cy, cx);
    if (x == y && shift_) value += *shift_;
    return value;
  }

  [[nodiscard]] GeneratorColumn<T> column(const BasisIndex& x) const {
    const LocalRow<T> lr = fn_.local_row(x);
    GeneratorColumn<T> col;
    col.source = x;
    col.diagonal = -fn_.diagonal(lr);
    if (shift_) col.diagonal += *shift_;
    for (const auto& nb : lr.neighbors) {
      if (nb.cls != PairClass::kSMinus) continue;
      T rate = -nb.h * fn_.ratio(nb.amplitude, lr.amplitude);
      if (!is_zero(rate, tolerances())) col.off_diagonal.push_back({nb.index, std::move(rate)});
    }
    return col;
  }

 private:
  FixedNodeView<T> fn_;
  std::optional<T> shift_;
};

template <Real T>
ColumnCheck column_legal(const GeneratorView<T>& g, const BasisIndex& x) {
  return check_column(g.column(x), g.tolerances());
}

}  // namespace fnv
