// Copyright 2026 The estool Authors.
// SPDX-License-Identifier: Apache-2.0
#include "estool/error.hpp"

namespace estool {

const char* to_string(FormatErrc code) {
  switch (code) {
    case FormatErrc::kBadMagic: return "bad magic";
    case FormatErrc::kVersionMismatch: return "version mismatch";
    case FormatErrc::kTruncated: return "truncated";
    case FormatErrc::kUnsorted: return "unsorted records";
    case FormatErrc::kOutOfRange: return "field out of range";
    case FormatErrc::kTrailingData: return "trailing data";
    case FormatErrc::kMalformed: return "malformed";
  }
  return "unknown";
}

}  // namespace estool
