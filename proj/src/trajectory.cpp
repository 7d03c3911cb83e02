// Copyright 2026 The estool Authors.
// SPDX-License-Identifier: Apache-2.0
#include "estool/trajectory.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "estool/error.hpp"

namespace estool {

std::string_view to_string(TrajectoryKind kind) {
  switch (kind) {
    case TrajectoryKind::kOdg: return "odg";
    case TrajectoryKind::kRcls: return "rcls";
    case TrajectoryKind::kSaccade: return "saccade";
    case TrajectoryKind::kCustom: return "custom";
  }
  return "unknown";
}

TrajectoryKind parse_trajectory_kind(std::string_view name) {
  if (name == "odg") return TrajectoryKind::kOdg;
  if (name == "rcls") return TrajectoryKind::kRcls;
  if (name == "saccade") return TrajectoryKind::kSaccade;
  throw InvalidInput("unknown trajectory kind: " + std::string(name));
}

Trajectory::Trajectory(std::vector<Offset> offsets, TrajectoryKind kind,
                       std::optional<std::uint64_t> seed)
    : offsets_(std::move(offsets)), kind_(kind), seed_(seed) {
  if (offsets_.empty()) throw InvalidInput("trajectory needs at least one position");
  for (const auto& o : offsets_) {
    if (o.x < 0 || o.x > 2 || o.y < 0 || o.y > 2)
      throw InvalidInput("trajectory offsets must lie in {0,1,2}");
  }
}

Trajectory Trajectory::truncated(int steps) const {
  if (steps < 0 || steps > this->steps()) throw InvalidInput("truncated: steps exceed trajectory");
  return Trajectory({offsets_.begin(), offsets_.begin() + steps + 1}, kind_, seed_);
}

Trajectory odg_trajectory(int steps) {
  static constexpr int kX[] = {1, 0, 2, 1, 0, 2, 1, 1, 2};
  static constexpr int kY[] = {0, 2, 1, 0, 1, 2, 0, 1, 1};
  if (steps < 0 || steps > kOdgMaxSteps) throw InvalidInput("ODG trace supports at most 8 steps");
  std::vector<Offset> offsets;
  for (int i = 0; i <= steps; ++i) offsets.push_back({kX[i], kY[i]});
  return Trajectory(std::move(offsets), TrajectoryKind::kOdg);
}

Trajectory rcls_trajectory(int steps) {
  static constexpr Offset kLoop[] = {{1, 1}, {2, 1}, {2, 2}, {1, 2}};
  if (steps < 0) throw InvalidInput("rcls_trajectory: negative steps");
  std::vector<Offset> offsets;
  for (int i = 0; i <= steps; ++i) offsets.push_back(kLoop[i % 4]);
  return Trajectory(std::move(offsets), TrajectoryKind::kRcls);
}

const std::vector<Offset>& unit_directions() {
  static const std::vector<Offset> dirs = {{1, 0}, {1, 1}, {0, 1}, {-1, 1},
                                           {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
  return dirs;
}

Trajectory saccade_trajectory(int steps, std::uint64_t seed) {
  if (steps < 0) throw InvalidInput("saccade_trajectory: negative steps");
  // mt19937_64 output is fully specified by the standard and 2^64 is a multiple of 8,
  // so the modulo pick is unbiased and identical on every platform.
  std::mt19937_64 rng(seed);
  const auto& dirs = unit_directions();
  std::vector<Offset> offsets{{1, 1}};
  for (int i = 0; i < steps; ++i) {
    const Offset d = dirs[rng() % dirs.size()];
    const Offset p = offsets.back() + d;
    offsets.push_back({std::clamp(p.x, 0, 2), std::clamp(p.y, 0, 2)});
  }
  return Trajectory(std::move(offsets), TrajectoryKind::kSaccade, seed);
}

Trajectory make_trajectory(TrajectoryKind kind, int steps, std::uint64_t seed) {
  switch (kind) {
    case TrajectoryKind::kOdg: return odg_trajectory(steps);
    case TrajectoryKind::kRcls: return rcls_trajectory(steps);
    case TrajectoryKind::kSaccade: return saccade_trajectory(steps, seed);
    case TrajectoryKind::kCustom: break;
  }
  throw InvalidInput("make_trajectory: custom trajectories are built from explicit offsets");
}

Offset displacement(const Trajectory& traj, int t) {
  if (t < 1 || t > traj.steps()) throw std::out_of_range("displacement: step index out of range");
  return traj[t] - traj[t - 1];
}

}  // namespace estool
