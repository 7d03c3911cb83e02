// Copyright 2026 The estool Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace estool {

/// Window origin on the padded canvas; both components lie in {0, 1, 2}.
struct Offset {
  int x = 0;
  int y = 0;

  friend bool operator==(const Offset&, const Offset&) = default;
  friend Offset operator-(Offset a, Offset b) { return {a.x - b.x, a.y - b.y}; }
  friend Offset operator+(Offset a, Offset b) { return {a.x + b.x, a.y + b.y}; }
};

enum class TrajectoryKind { kOdg, kRcls, kSaccade, kCustom };

std::string_view to_string(TrajectoryKind kind);
TrajectoryKind parse_trajectory_kind(std::string_view name);

/// Ordered window offsets; T = offsets.size() - 1 difference frames.
class Trajectory {
 public:
  Trajectory(std::vector<Offset> offsets, TrajectoryKind kind,
             std::optional<std::uint64_t> seed = std::nullopt);

  const std::vector<Offset>& offsets() const { return offsets_; }
  TrajectoryKind kind() const { return kind_; }
  std::optional<std::uint64_t> seed() const { return seed_; }
  int steps() const { return static_cast<int>(offsets_.size()) - 1; }
  const Offset& operator[](std::size_t i) const { return offsets_[i]; }

  /// First steps + 1 positions.
  Trajectory truncated(int steps) const;

  friend bool operator==(const Trajectory&, const Trajectory&) = default;

 private:
  std::vector<Offset> offsets_;
  TrajectoryKind kind_;
  std::optional<std::uint64_t> seed_;
};

inline constexpr int kOdgMaxSteps = 8;

/// The fixed nine-position omnidirectional trace (8 steps), optionally truncated.
Trajectory odg_trajectory(int steps = kOdgMaxSteps);

/// Closed unit loop (1,1) -> (2,1) -> (2,2) -> (1,2) -> (1,1) ..., T + 1 positions.
Trajectory rcls_trajectory(int steps);

/// Seeded random walk from (1,1): each step picks one of the eight unit directions
/// uniformly and clamps the result onto the {0,1,2} lattice.
Trajectory saccade_trajectory(int steps, std::uint64_t seed);

/// Builds a trajectory of the given kind; seed is used by kSaccade only.
Trajectory make_trajectory(TrajectoryKind kind, int steps, std::uint64_t seed = 0);

/// offsets[t] - offsets[t - 1], for 1 <= t <= T.
Offset displacement(const Trajectory& traj, int t);

/// The eight unit directions in the order the saccade generator indexes them.
const std::vector<Offset>& unit_directions();

}  // namespace estool
