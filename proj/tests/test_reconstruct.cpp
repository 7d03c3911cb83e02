// Copyright 2026 The estool Authors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "estool/error.hpp"
#include "estool/generator.hpp"
#include "estool/reconstruct.hpp"
#include "estool/storage.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace estool {
namespace {

TEST(EdgeIntegral, EmptyIsZero) {
  const EventStream s{10, 8, 8, 0.18f, {}};
  const auto r = edge_integral(to_event_frames(s), odg_trajectory());
  EXPECT_EQ(r.height(), 12);
  EXPECT_EQ(r.width(), 14);
  EXPECT_TRUE((r.values == 0).all());
}

TEST(EdgeIntegral, SingleEventPlacement) {
  // Step 1 starts at ODG offset (1, 0), so frame (x0, y0) lands at (x0 + 1, y0 + 2).
  const EventStream s{10, 8, 8, 0.18f, {{4, 3, 1, 1}}};
  const auto r = edge_integral(to_event_frames(s), odg_trajectory());
  EXPECT_EQ(r.values.sum(), 1);
  EXPECT_EQ(r.values(5, 5), 1);
  // Step 3 starts at (2, 1).
  const EventStream s3{10, 8, 8, 0.18f, {{4, 3, 3, -1}}};
  const auto r3 = edge_integral(to_event_frames(s3), odg_trajectory());
  EXPECT_EQ(r3.values(4, 4), -1);
  EXPECT_EQ(r3.values.abs().sum(), 1);
}

TEST(EdgeIntegral, MatchesIntegratedSignOracle) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto v = value_map(testing::scene_image(64, 64, seed));
    const auto traj = odg_trajectory();
    const auto r = edge_integral(to_event_frames(generate_events(v, traj, 0.18)), traj);
    const auto expected = oracle::integrated_signs(testing::to_grid(zero_pad(v, 2)),
                                                   testing::to_path(traj), 0.18);
    ASSERT_EQ(r.height(), static_cast<int>(expected.size()));
    for (int y = 0; y < r.height(); ++y)
      for (int x = 0; x < r.width(); ++x) ASSERT_EQ(r.values(y, x), expected[y][x]);
  }
}

TEST(EdgeIntegral, LinearInDisjointEventSets) {
  const auto s = testing::random_stream(20, 16, 8, 0.2, 5);
  EventStream a = s, b = s;
  a.events.clear();
  b.events.clear();
  for (std::size_t i = 0; i < s.events.size(); ++i) (i % 3 ? a : b).events.push_back(s.events[i]);
  const auto traj = rcls_trajectory(8);
  const auto whole = edge_integral(to_event_frames(s), traj);
  const auto sum = edge_integral(to_event_frames(a), traj).values +
                   edge_integral(to_event_frames(b), traj).values;
  EXPECT_TRUE((whole.values == sum).all());
}

TEST(EdgeIntegral, BoundedByStepsAndStepMismatch) {
  const auto s = testing::random_stream(12, 12, 8, 0.9, 6);
  const auto r = edge_integral(to_event_frames(s), odg_trajectory());
  EXPECT_LE(r.values.abs().maxCoeff(), 8);
  EXPECT_THROW(edge_integral(to_event_frames(s), odg_trajectory(4)), InvalidInput);
}

TEST(NaiveSum, Cancellation) {
  const EventStream s{6, 6, 8, 0.18f, {{2, 2, 1, 1}, {3, 1, 2, 1}, {2, 2, 5, -1}}};
  const auto r = naive_sum(to_event_frames(s));
  EXPECT_EQ(r.values(2, 2), 0);
  EXPECT_EQ(r.values(1, 3), 1);
  EXPECT_EQ(r.values.abs().sum(), 1);
  EXPECT_TRUE((naive_sum(to_event_frames(EventStream{6, 6, 8, 0.18f, {}})).values == 0).all());
}

TEST(ToGrayLevels, Shift) {
  SignedGrayImage s{RasterI(1, 3), 8};
  s.values << -8, 0, 8;
  const auto g = to_gray_levels(s);
  EXPECT_EQ(g.levels, 17);
  EXPECT_EQ(g.values(0, 0), 0);
  EXPECT_EQ(g.values(0, 1), 8);
  EXPECT_EQ(g.values(0, 2), 16);
}

TEST(ValidRegion, CropGeometry) {
  const EventStream s{256, 256, 8, 0.18f, {}};
  const auto r = edge_integral(to_event_frames(s), odg_trajectory());
  EXPECT_EQ(edge_integral_valid_region(r, 16).rows(), 224);
  EXPECT_EQ(edge_integral_valid_region(r, 0).cols(), 256);
  EXPECT_THROW(edge_integral_valid_region(r, 128), InvalidInput);
}

}  // namespace
}  // namespace estool
