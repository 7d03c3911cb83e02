// Copyright 2026 The estool Authors.
// SPDX-License-Identifier: Apache-2.0
#include "estool/cost_model.hpp"

#include <string>

#include "estool/error.hpp"

namespace estool::cost {
namespace {

int conv_extent(int in, int k, int s, int p) {
  if (k < 1 || s < 1 || p < 0) throw InvalidInput("kernel/stride must be >= 1, padding >= 0");
  const int out = (in + 2 * p - k) / s + 1;
  if (in + 2 * p < k || out < 1) throw InvalidInput("layer output extent is not positive");
  return out;
}

}  // namespace

std::string_view to_string(LayerKind kind) {
  switch (kind) {
    case LayerKind::kConv2d: return "conv2d";
    case LayerKind::kConv3d: return "conv3d";
    case LayerKind::kLinear: return "linear";
    case LayerKind::kPool: return "pool";
    case LayerKind::kResidual: return "residual";
  }
  return "unknown";
}

LayerKind parse_layer_kind(std::string_view name) {
  for (auto k : {LayerKind::kConv2d, LayerKind::kConv3d, LayerKind::kLinear, LayerKind::kPool,
                 LayerKind::kResidual})
    if (to_string(k) == name) return k;
  throw InvalidInput("unknown layer kind: " + std::string(name));
}

std::string_view to_string(Model model) {
  switch (model) {
    case Model::kCnn2d: return "cnn2d";
    case Model::kCnn3d: return "cnn3d";
    case Model::kLif: return "lif";
    case Model::kLiaf: return "liaf";
  }
  return "unknown";
}

Model parse_model(std::string_view name) {
  for (auto m : {Model::kCnn2d, Model::kCnn3d, Model::kLif, Model::kLiaf})
    if (to_string(m) == name) return m;
  throw InvalidInput("unknown model: " + std::string(name));
}

bool is_spiking(Model model) { return model == Model::kLif || model == Model::kLiaf; }

Dims3 LayerSpec::output() const {
  if (in_channels < 1 || out_channels < 1) throw InvalidInput("channel counts must be positive");
  switch (kind) {
    case LayerKind::kLinear: return {1, 1, 1};
    case LayerKind::kResidual:
      if (input.d < 1 || input.h < 1 || input.w < 1) throw InvalidInput("non-positive input dims");
      return input;
    case LayerKind::kConv2d:
      if (input.d != 1 || kernel.d != 1) throw InvalidInput("conv2d layers have depth 1");
      return {1, conv_extent(input.h, kernel.h, stride.h, padding.h),
              conv_extent(input.w, kernel.w, stride.w, padding.w)};
    case LayerKind::kConv3d:
    case LayerKind::kPool:
      return {conv_extent(input.d, kernel.d, stride.d, padding.d),
              conv_extent(input.h, kernel.h, stride.h, padding.h),
              conv_extent(input.w, kernel.w, stride.w, padding.w)};
  }
  throw InvalidInput("unknown layer kind");
}

int LayerSpec::output_channels() const {
  return kind == LayerKind::kPool || kind == LayerKind::kResidual ? in_channels : out_channels;
}

OpCount count_layer(const LayerSpec& layer) {
  const Dims3 out = layer.output();
  switch (layer.kind) {
    case LayerKind::kLinear: {
      const double in = layer.in_channels, n = layer.out_channels;
      return {(in - 1) * n + (layer.bias ? n : 0.0), in * n};
    }
    case LayerKind::kConv2d:
    case LayerKind::kConv3d: {
      const double fan_in = static_cast<double>(layer.kernel.volume()) * layer.in_channels;
      const double cells = static_cast<double>(out.volume()) * layer.out_channels;
      return {cells * (fan_in - 1 + (layer.bias ? 1 : 0)), cells * fan_in};
    }
    case LayerKind::kPool: return {};
    case LayerKind::kResidual: return {static_cast<double>(layer.output_volume()), 0.0};
  }
  return {};
}

OpCount count_network(const std::vector<LayerSpec>& net, Model model, int steps, double fire_rate) {
  if (steps < 1) throw InvalidInput("count_network: steps must be >= 1");
  if (!(fire_rate >= 0.0 && fire_rate <= 1.0)) throw InvalidInput("fire_rate must lie in [0, 1]");
  OpCount total;
  for (const auto& layer : net) {
    const OpCount dense = count_layer(layer);
    if (!is_spiking(model) || layer.after_decode) {
      total += dense;
      continue;
    }
    const bool synaptic = layer.kind == LayerKind::kConv2d || layer.kind == LayerKind::kConv3d ||
                          layer.kind == LayerKind::kLinear;
    if (model == Model::kLif && synaptic) {
      total += OpCount{dense.adds * fire_rate, 0.0} * steps;
    } else {
      total += dense * steps;
    }
    if (layer.stateful && layer.kind != LayerKind::kPool) {
      const double neurons = static_cast<double>(layer.output_volume());
      total += OpCount{neurons, neurons} * steps;
    }
  }
  return total;
}

double energy(const OpCount& ops, const EnergyModel& em) {
  return ops.adds * em.e_add + ops.mults * em.e_mult;
}

double power_per_frame(double total_energy, int frames) {
  if (frames < 1) throw InvalidInput("power_per_frame: frames must be >= 1");
  return total_energy / frames;
}

int frames_per_prediction(Model model, int steps) { return is_spiking(model) ? steps : 1; }

std::vector<LayerSpec> resnet_preset(int depth, Model model) {
  std::vector<int> blocks;
  if (depth == 18) blocks = {2, 2, 2, 2};
  else if (depth == 34) blocks = {3, 4, 6, 3};
  else throw InvalidInput("resnet preset depth must be 18 or 34");

  const bool volumetric = model == Model::kCnn3d;
  const LayerKind conv = volumetric ? LayerKind::kConv3d : LayerKind::kConv2d;
  const int kd = volumetric ? 3 : 1;
  const int pd = volumetric ? 1 : 0;

  std::vector<LayerSpec> net;
  auto push = [&](LayerSpec l) {
    net.push_back(l);
    return l.output();
  };

  LayerSpec stem;
  stem.name = "conv1";
  stem.kind = conv;
  stem.in_channels = model == Model::kCnn2d ? 1 : 2;
  stem.out_channels = 64;
  stem.input = {volumetric ? 8 : 1, 224, 224};
  stem.kernel = {kd, 7, 7};
  stem.stride = {1, 2, 2};
  stem.padding = {pd, 1, 1};
  Dims3 dims = push(stem);

  LayerSpec pool;
  pool.name = "maxpool";
  pool.kind = LayerKind::kPool;
  pool.in_channels = pool.out_channels = 64;
  pool.input = dims;
  pool.kernel = {kd, 3, 3};
  pool.stride = {volumetric ? 2 : 1, 2, 2};
  pool.padding = {pd, 1, 1};
  pool.stateful = false;
  dims = push(pool);

  int channels = 64;
  const int widths[] = {64, 128, 256, 512};
  for (int stage = 0; stage < 4; ++stage) {
    for (int b = 0; b < blocks[static_cast<std::size_t>(stage)]; ++b) {
      const int out = widths[stage];
      const int s = (stage > 0 && b == 0) ? 2 : 1;
      const std::string prefix = "layer" + std::to_string(stage + 1) + "." + std::to_string(b);
      LayerSpec c1;
      c1.name = prefix + ".conv1";
      c1.kind = conv;
      c1.in_channels = channels;
      c1.out_channels = out;
      c1.input = dims;
      c1.kernel = {kd, 3, 3};
      c1.stride = {volumetric ? s : 1, s, s};
      c1.padding = {pd, 1, 1};
      const Dims3 mid = push(c1);

      LayerSpec c2 = c1;
      c2.name = prefix + ".conv2";
      c2.in_channels = out;
      c2.input = mid;
      c2.stride = {1, 1, 1};
      // The block's closing membrane update sits after the residual sum.
      c2.stateful = false;
      const Dims3 block_out = push(c2);

      if (s != 1 || channels != out) {
        LayerSpec down;
        down.name = prefix + ".downsample";
        down.kind = conv;
        down.in_channels = channels;
        down.out_channels = out;
        down.input = dims;
        down.kernel = {1, 1, 1};
        down.stride = c1.stride;
        down.stateful = false;
        push(down);
      }

      LayerSpec add;
      add.name = prefix + ".residual";
      add.kind = LayerKind::kResidual;
      add.in_channels = add.out_channels = out;
      add.input = block_out;
      push(add);

      dims = block_out;
      channels = out;
    }
  }

  LayerSpec avg;
  avg.name = "avgpool";
  avg.kind = LayerKind::kPool;
  avg.in_channels = avg.out_channels = channels;
  avg.input = dims;
  avg.kernel = dims;
  avg.stride = {1, 1, 1};
  avg.stateful = false;
  push(avg);

  LayerSpec fc;
  fc.name = "fc";
  fc.kind = LayerKind::kLinear;
  fc.in_channels = channels;
  fc.out_channels = 1000;
  fc.bias = true;
  fc.stateful = false;
  fc.after_decode = true;
  push(fc);
  return net;
}

std::vector<LayerSpec> NetworkConfig::resolve(Model m) const {
  if (preset) {
    if (*preset == "resnet18") return resnet_preset(18, m);
    if (*preset == "resnet34") return resnet_preset(34, m);
    throw InvalidInput("unknown preset: " + *preset);
  }
  if (layers.empty()) throw InvalidInput("network config has neither a preset nor layers");
  return layers;
}

}  // namespace estool::cost
