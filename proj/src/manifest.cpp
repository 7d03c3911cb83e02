// Copyright 2026 The estool Authors.
// SPDX-License-Identifier: Apache-2.0
#include "estool/manifest.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "estool/error.hpp"

namespace estool {

Manifest parse_manifest(std::istream& in, std::filesystem::path root) {
  Manifest m{std::move(root), {}};
  std::unordered_set<std::string> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto where = " (manifest line " + std::to_string(lineno) + ")";
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw InvalidInput("expected path<TAB>label" + where);
    ManifestEntry e{line.substr(0, tab), line.substr(tab + 1)};
    if (e.path.empty()) throw InvalidInput("empty path" + where);
    if (e.label.empty()) throw InvalidInput("empty label" + where);
    if (std::filesystem::path(e.path).is_absolute()) throw InvalidInput("absolute path" + where);
    if (!seen.insert(e.path).second) throw InvalidInput("duplicate path " + e.path + where);
    m.entries.push_back(std::move(e));
  }
  return m;
}

Manifest read_manifest(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot open manifest " + file.string());
  return parse_manifest(in, file.parent_path());
}

void write_manifest(std::ostream& out, const Manifest& m) {
  for (const auto& e : m.entries) out << e.path << '\t' << e.label << '\n';
}

}  // namespace estool
