// Copyright 2026 The estool Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace estool {

struct ManifestEntry {
  std::string path;  // relative to the manifest root
  std::string label;

  friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

struct Manifest {
  std::filesystem::path root;
  std::vector<ManifestEntry> entries;

  std::filesystem::path resolve(const ManifestEntry& e) const { return root / e.path; }
};

/// One `path<TAB>label` entry per line; blank lines and lines starting with '#' are
/// skipped. Throws InvalidInput on duplicate paths, empty labels or absolute paths.
Manifest parse_manifest(std::istream& in, std::filesystem::path root);

/// Root defaults to the manifest's directory.
Manifest read_manifest(const std::filesystem::path& file);

void write_manifest(std::ostream& out, const Manifest& m);

}  // namespace estool
