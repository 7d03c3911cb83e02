// Copyright 2026 The estool Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "estool/trajectory.hpp"

namespace estool::cli {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 2,
  kIoError = 3,
  kValidationFailure = 4,
};

/// Bad flags, bad config files, or values outside their allowed ranges.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  double threshold = 0.18;
  int steps = 8;
  TrajectoryKind trajectory = TrajectoryKind::kOdg;
  std::uint64_t seed = 0;
  int workers = 1;
  int margin = 16;
  std::filesystem::path out = "out";
  std::size_t queue_capacity = 0;  // 0 means 2 x workers

  void validate() const;
};

/// Applies `key = value` lines onto cfg. Keys match the long flag names with '-'
/// replaced by '_'.
void apply_config_file(RunConfig& cfg, std::istream& in);

/// Runs one subcommand; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace estool::cli
