// Copyright 2026 The fnv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "fnv/errors.hpp"

namespace fnv {

inline constexpr int kMaxQubits = 24;

/// An n-bit computational basis string. Qubit i is bit i of `bits()`; the
/// textual form lists qubit 0 first, so "10" has qubit 0 set.
class BasisIndex {
 public:
  constexpr BasisIndex() = default;

  constexpr BasisIndex(std::uint32_t bits, int width) : bits_(bits), width_(width) {
    if (width < 0 || width > kMaxQubits) {
      throw ArgumentError("BasisIndex: width must lie in [0, 24]");
    }
    if (width < 32 && (static_cast<std::uint64_t>(bits) >> width) != 0) {
      throw ArgumentError("BasisIndex: bits exceed width");
    }
  }

  static BasisIndex parse(std::string_view text) {
    if (text.size() > static_cast<std::size_t>(kMaxQubits)) {
      throw ArgumentError("BasisIndex: bitstring longer than 24");
    }
    std::uint32_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '1') {
        bits |= (1u << i);
      } else if (text[i] != '0') {
        throw ArgumentError("BasisIndex: bitstring may only contain 0 and 1");
      }
    }
    return BasisIndex(bits, static_cast<int>(text.size()));
  }

  [[nodiscard]] constexpr std::uint32_t bits() const { return bits_; }
  [[nodiscard]] constexpr int width() const { return width_; }
  [[nodiscard]] constexpr std::uint64_t dimension() const { return std::uint64_t{1} << width_; }

  [[nodiscard]] constexpr bool bit(int qubit) const { return ((bits_ >> qubit) & 1u) != 0; }

  [[nodiscard]] constexpr BasisIndex flipped(int qubit) const {
    return BasisIndex(bits_ ^ (1u << qubit), width_);
  }

  /// Appends one qubit (index `width()`) holding `value`.
  [[nodiscard]] constexpr BasisIndex extended(bool value) const {
    return BasisIndex(bits_ | (static_cast<std::uint32_t>(value) << width_), width_ + 1);
  }

  /// Drops the highest qubit.
  [[nodiscard]] constexpr BasisIndex truncated() const {
    return BasisIndex(bits_ & ((1u << (width_ - 1)) - 1u), width_ - 1);
  }

  [[nodiscard]] std::string to_string() const {
    std::string out(static_cast<std::size_t>(width_), '0');
    for (int i = 0; i < width_; ++i) {
      if (bit(i)) out[static_cast<std::size_t>(i)] = '1';
    }
    return out;
  }

  friend constexpr bool operator==(const BasisIndex&, const BasisIndex&) = default;
  friend constexpr auto operator<=>(const BasisIndex& a, const BasisIndex& b) {
    if (auto c = a.width_ <=> b.width_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint32_t bits_ = 0;
  int width_ = 0;
};

inline void require_width(const BasisIndex& x, int width, const char* what) {
  if (x.width() != width) {
    throw ArgumentError(std::string(what) + ": basis string width " + std::to_string(x.width()) +
                        " does not match " + std::to_string(width) + " qubits");
  }
}

}  // namespace fnv
