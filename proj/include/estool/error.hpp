// Copyright 2026 The estool Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace estool {

/// Malformed arguments or data that violate an operation's preconditions.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Failure to read or write a file.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FormatErrc {
  kBadMagic,
  kVersionMismatch,
  kTruncated,
  kUnsorted,
  kOutOfRange,
  kTrailingData,
  kMalformed,
};

const char* to_string(FormatErrc code);

/// A byte stream that does not decode under one of the supported formats.
class FormatError : public std::runtime_error {
 public:
  FormatError(FormatErrc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  FormatErrc code() const noexcept { return code_; }

 private:
  FormatErrc code_;
};

}  // namespace estool
