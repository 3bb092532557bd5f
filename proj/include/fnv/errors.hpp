// Copyright 2026 The fnv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace fnv {

/// Malformed arguments: width mismatch, non-positive rates, bad parameters.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A basis string outside supp(phi) was handed to a view defined only on S.
class SupportError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Amplitude ratio or rate left the representable range.
class NumericRangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// A runner for legal generators met an illegal column.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Dense materialization requested beyond the configured cap.
class SizeCapError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace fnv
