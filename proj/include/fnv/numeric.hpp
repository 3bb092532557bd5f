// Copyright 2026 The fnv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <concepts>
#include <type_traits>

namespace fnv {

/// Exact rational arithmetic for the optional exact mode.
using Rational = boost::multiprecision::cpp_rational;

/// Float-mode thresholds. Exact mode ignores them and compares with zero.
struct Tolerances {
  double zero = 1e-12;      ///< "is this entry zero"
  double herm = 1e-10;      ///< Hermiticity of local terms
  double column = 1e-9;     ///< column sums: |sum| <= column * (1 + |G_xx|)
  double ratio_max = 1e300; ///< amplitude ratios beyond this are a range error
};

template <class T>
inline constexpr bool kExact = std::is_same_v<T, Rational>;

template <class T>
concept Real = std::same_as<T, double> || std::same_as<T, Rational>;

inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }

inline double abs_value(double v) { return std::abs(v); }
inline Rational abs_value(const Rational& v) { return boost::multiprecision::abs(v); }

inline bool is_zero(double v, const Tolerances& tol) { return std::abs(v) <= tol.zero; }
inline bool is_zero(const Rational& v, const Tolerances&) { return v == 0; }

inline int sign_of(double v) { return (v > 0) - (v < 0); }
inline int sign_of(const Rational& v) { return v.sign(); }

template <Real T>
T from_double(double v) {
  if constexpr (kExact<T>) {
    return Rational(v);
  } else {
    return v;
  }
}

/// Complex value with real and imaginary parts in the configured mode.
template <Real T>
struct Scalar {
  T re{};
  T im{};

  Scalar() = default;
  Scalar(T r) : re(std::move(r)) {}  // NOLINT: implicit from real
  Scalar(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  Scalar& operator+=(const Scalar& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  [[nodiscard]] Scalar conj() const { return {re, -im}; }
  friend bool operator==(const Scalar&, const Scalar&) = default;
};

template <Real T>
bool is_zero(const Scalar<T>& v, const Tolerances& tol) {
  if constexpr (kExact<T>) {
    return v.re == 0 && v.im == 0;
  } else {
    return std::hypot(v.re, v.im) <= tol.zero;
  }
}

inline bool is_finite(double v) { return std::isfinite(v); }
inline bool is_finite(const Rational&) { return true; }

/// Representability of an amplitude with `bits` bits. Float mode checks a
/// magnitude window [2^-bits, 2^bits]; exact mode bounds numerator and
/// denominator by 2^bits.
inline bool representable(double v, int bits) {
  if (!std::isfinite(v)) return false;
  const double mag = std::abs(v);
  if (mag == 0.0) return true;
  return mag >= std::ldexp(1.0, -bits) && mag <= std::ldexp(1.0, bits);
}

inline bool representable(const Rational& v, int bits) {
  using boost::multiprecision::cpp_int;
  const cpp_int num = boost::multiprecision::abs(boost::multiprecision::numerator(v));
  const cpp_int den = boost::multiprecision::denominator(v);
  const cpp_int limit = cpp_int(1) << bits;
  return num <= limit && den <= limit;
}

}  // namespace fnv
