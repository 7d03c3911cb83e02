// Copyright 2026 The estool Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "estool/color.hpp"
#include "estool/generator.hpp"
#include "estool/trajectory.hpp"

namespace estool {

enum class Polarity { kAll, kOn, kOff };

/// Events of the selected polarity inside the valid region / (valid area * T).
double event_rate(const EventStream& s, Polarity polarity, int margin);

/// Pixels of the valid region carrying at least one event of the polarity / valid area.
double event_coverage(const EventStream& s, Polarity polarity, int margin);

struct RateSample {
  double all = 0.0;
  double on = 0.0;
  double off = 0.0;
};

RateSample rate_sample(const EventStream& s, int margin);

/// Means and population standard deviations over a set of samples.
struct EventRateStats {
  double mean_total = 0.0, sigma_total = 0.0;
  double mean_on = 0.0, sigma_on = 0.0;
  double mean_off = 0.0, sigma_off = 0.0;
};

EventRateStats event_rate_stats(std::span<const RateSample> samples);

struct EntropyResult {
  double entropy = 0.0;  // bits
  int levels = 0;
};

/// Shannon entropy of (gray value, floor(3x3 neighbourhood mean)) pairs over the
/// non-border pixels. The image must be at least 3x3.
EntropyResult entropy_2d(const GrayImage& img);

struct SweepCurve {
  std::vector<std::pair<double, double>> points;
};

struct ThresholdSweep {
  SweepCurve curve;          // (threshold, mean event rate)
  Eigen::MatrixXd per_image;  // rows: images, cols: thresholds
};

/// Mean ALL-polarity event rate per threshold. cfg supplies geometry, trajectory and
/// margin; its own threshold is ignored.
ThresholdSweep threshold_sweep(std::span<const RgbImage> corpus, std::span<const double> thresholds,
                               const ConversionConfig& cfg, int workers = 1);

struct EntropySweepOptions {
  double thresh = 0.18;
  int frame_w = 256;
  int frame_h = 256;
  int margin = 16;
  /// Image i uses saccade seed base_seed + i.
  std::uint64_t base_seed = 0;
  int workers = 1;
};

/// For every (kind, T): generate, Edge-Integral, shift to 2T + 1 levels, crop the valid
/// region and average entropy_2d over the corpus.
std::map<TrajectoryKind, SweepCurve> entropy_vs_steps(std::span<const RgbImage> corpus,
                                                      std::span<const TrajectoryKind> kinds,
                                                      std::span<const int> steps,
                                                      const EntropySweepOptions& opts);

/// Per-image entropies behind entropy_vs_steps for a single (kind, T).
std::vector<double> reconstruction_entropies(std::span<const RgbImage> corpus, TrajectoryKind kind,
                                             int steps, const EntropySweepOptions& opts);

struct Histogram {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<std::size_t> counts;
};

/// Equal-width bins over [0, max(rates)]; the maximum lands in the last bin.
Histogram event_rate_histogram(std::span<const double> rates, int bins);

}  // namespace estool
