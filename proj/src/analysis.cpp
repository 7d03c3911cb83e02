// Copyright 2026 The estool Authors.
// SPDX-License-Identifier: Apache-2.0
#include "estool/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "estool/error.hpp"
#include "estool/parallel.hpp"
#include "estool/reconstruct.hpp"
#include "estool/storage.hpp"

namespace estool {
namespace {

bool selected(const EventQuad& e, Polarity polarity) {
  return polarity == Polarity::kAll || (polarity == Polarity::kOn) == (e.p > 0);
}

bool inside(const EventStream& s, const EventQuad& e, int margin) {
  return e.x >= margin && e.x < s.width - margin && e.y >= margin && e.y < s.height - margin;
}

double valid_area(const EventStream& s, int margin) {
  if (margin < 0 || 2 * margin >= s.width || 2 * margin >= s.height)
    throw InvalidInput("event rate margin too large for frame");
  return static_cast<double>(s.width - 2 * margin) * (s.height - 2 * margin);
}

std::pair<double, double> mean_sigma(const std::vector<double>& xs) {
  if (xs.empty()) return {0.0, 0.0};
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  return {mean, std::sqrt(var / static_cast<double>(xs.size()))};
}

ValueMap<double> padded_canvas(const RgbImage& img, int frame_w, int frame_h) {
  return zero_pad(value_map<double>(resize_nearest(img, frame_w - 2, frame_h - 2)), 2);
}

}  // namespace

double event_rate(const EventStream& s, Polarity polarity, int margin) {
  const double area = valid_area(s, margin);
  if (s.steps == 0) return 0.0;
  const auto n = std::count_if(s.events.begin(), s.events.end(), [&](const EventQuad& e) {
    return selected(e, polarity) && inside(s, e, margin);
  });
  return static_cast<double>(n) / (area * s.steps);
}

double event_coverage(const EventStream& s, Polarity polarity, int margin) {
  const double area = valid_area(s, margin);
  std::vector<std::uint8_t> hit(static_cast<std::size_t>(s.width) * s.height, 0);
  std::size_t n = 0;
  for (const auto& e : s.events) {
    if (!selected(e, polarity) || !inside(s, e, margin)) continue;
    auto& h = hit[static_cast<std::size_t>(e.y) * s.width + e.x];
    if (!h) {
      h = 1;
      ++n;
    }
  }
  return static_cast<double>(n) / area;
}

RateSample rate_sample(const EventStream& s, int margin) {
  return {event_rate(s, Polarity::kAll, margin), event_rate(s, Polarity::kOn, margin),
          event_rate(s, Polarity::kOff, margin)};
}

EventRateStats event_rate_stats(std::span<const RateSample> samples) {
  std::vector<double> all, on, off;
  for (const auto& r : samples) {
    all.push_back(r.all);
    on.push_back(r.on);
    off.push_back(r.off);
  }
  EventRateStats st;
  std::tie(st.mean_total, st.sigma_total) = mean_sigma(all);
  std::tie(st.mean_on, st.sigma_on) = mean_sigma(on);
  std::tie(st.mean_off, st.sigma_off) = mean_sigma(off);
  return st;
}

EntropyResult entropy_2d(const GrayImage& img) {
  const Eigen::Index h = img.values.rows(), w = img.values.cols();
  if (h < 3 || w < 3) throw InvalidInput("entropy_2d: image must be at least 3x3");
  if (img.levels < 1) throw InvalidInput("entropy_2d: levels must be positive");
  if ((img.values < 0).any() || (img.values >= img.levels).any())
    throw InvalidInput("entropy_2d: gray value outside [0, levels)");

  RasterI window = RasterI::Zero(h - 2, w - 2);
  for (int dy = 0; dy < 3; ++dy)
    for (int dx = 0; dx < 3; ++dx) window += img.values.block(dy, dx, h - 2, w - 2);

  const std::int64_t levels = img.levels;
  std::unordered_map<std::int64_t, std::int64_t> freq;
  for (Eigen::Index y = 0; y < h - 2; ++y)
    for (Eigen::Index x = 0; x < w - 2; ++x)
      ++freq[img.values(y + 1, x + 1) * levels + window(y, x) / 9];

  std::vector<std::pair<std::int64_t, std::int64_t>> pairs(freq.begin(), freq.end());
  std::sort(pairs.begin(), pairs.end());
  const double total = static_cast<double>((h - 2) * (w - 2));
  double entropy = 0.0;
  for (const auto& [key, count] : pairs) {
    const double p = count / total;
    entropy -= p * std::log2(p);
  }
  return {entropy == 0.0 ? 0.0 : entropy, img.levels};
}

ThresholdSweep threshold_sweep(std::span<const RgbImage> corpus, std::span<const double> thresholds,
                               const ConversionConfig& cfg, int workers) {
  if (corpus.empty()) throw InvalidInput("threshold_sweep: empty corpus");
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (!(thresholds[i] > 0.0 && thresholds[i] < 1.0))
      throw InvalidInput("threshold_sweep: thresholds must lie in (0, 1)");
    if (i > 0 && !(thresholds[i] > thresholds[i - 1]))
      throw InvalidInput("threshold_sweep: thresholds must be strictly increasing");
  }
  const auto rows = parallel_map<std::vector<double>>(corpus.size(), workers, 0, [&](std::size_t i) {
    const auto canvas = padded_canvas(corpus[i], cfg.frame_w, cfg.frame_h);
    std::vector<double> rates;
    for (double th : thresholds)
      rates.push_back(
          event_rate(events_from_canvas(canvas, cfg.trajectory, th), Polarity::kAll, cfg.valid_margin));
    return rates;
  });
  ThresholdSweep out;
  out.per_image.resize(static_cast<Eigen::Index>(corpus.size()),
                       static_cast<Eigen::Index>(thresholds.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < thresholds.size(); ++j)
      out.per_image(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  const Eigen::VectorXd mean = out.per_image.colwise().mean();
  for (std::size_t j = 0; j < thresholds.size(); ++j)
    out.curve.points.emplace_back(thresholds[j], mean(static_cast<Eigen::Index>(j)));
  return out;
}

std::vector<double> reconstruction_entropies(std::span<const RgbImage> corpus, TrajectoryKind kind,
                                             int steps, const EntropySweepOptions& opts) {
  if (corpus.empty()) throw InvalidInput("entropy sweep: empty corpus");
  return parallel_map<double>(corpus.size(), opts.workers, 0, [&](std::size_t i) {
    const auto canvas = padded_canvas(corpus[i], opts.frame_w, opts.frame_h);
    const auto traj = make_trajectory(kind, steps, opts.base_seed + i);
    const auto frames = to_event_frames(events_from_canvas(canvas, traj, opts.thresh));
    const auto recon = edge_integral(frames, traj);
    GrayImage gray{edge_integral_valid_region(recon, opts.margin) + steps, 2 * steps + 1};
    return entropy_2d(gray).entropy;
  });
}

std::map<TrajectoryKind, SweepCurve> entropy_vs_steps(std::span<const RgbImage> corpus,
                                                      std::span<const TrajectoryKind> kinds,
                                                      std::span<const int> steps,
                                                      const EntropySweepOptions& opts) {
  if (corpus.empty()) throw InvalidInput("entropy sweep: empty corpus");
  std::map<TrajectoryKind, SweepCurve> curves;
  for (auto kind : kinds) {
    auto& curve = curves[kind];
    for (int t : steps) {
      const auto values = reconstruction_entropies(corpus, kind, t, opts);
      double sum = 0.0;
      for (double v : values) sum += v;
      curve.points.emplace_back(t, sum / static_cast<double>(values.size()));
    }
  }
  return curves;
}

Histogram event_rate_histogram(std::span<const double> rates, int bins) {
  if (bins < 1) throw InvalidInput("histogram needs at least one bin");
  Histogram hist;
  hist.counts.assign(static_cast<std::size_t>(bins), 0);
  if (rates.empty()) return hist;
  hist.hi = *std::max_element(rates.begin(), rates.end());
  for (double r : rates) {
    int bin = hist.hi > 0.0 ? static_cast<int>(r / hist.hi * bins) : 0;
    ++hist.counts[static_cast<std::size_t>(std::clamp(bin, 0, bins - 1))];
  }
  return hist;
}

}  // namespace estool
