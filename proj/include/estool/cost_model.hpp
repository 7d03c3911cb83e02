// Copyright 2026 The estool Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace estool::cost {

enum class LayerKind { kConv2d, kConv3d, kLinear, kPool, kResidual };

std::string_view to_string(LayerKind kind);
LayerKind parse_layer_kind(std::string_view name);

/// (depth, height, width); 2-D layers use depth 1.
struct Dims3 {
  int d = 1;
  int h = 1;
  int w = 1;

  friend bool operator==(const Dims3&, const Dims3&) = default;
  std::int64_t volume() const { return static_cast<std::int64_t>(d) * h * w; }
};

struct LayerSpec {
  std::string name;
  LayerKind kind = LayerKind::kConv2d;
  int in_channels = 1;
  int out_channels = 1;
  Dims3 kernel;
  Dims3 stride;
  Dims3 padding{0, 0, 0};
  Dims3 input;  // linear layers: in_channels features, input ignored
  bool bias = false;
  // SNN models only: the layer's outputs are neurons with membrane state.
  bool stateful = true;
  // SNN models only: the layer runs once on rate-decoded (analog) features.
  bool after_decode = false;

  /// Spatial (and depth) output extent; throws InvalidInput if any extent < 1.
  Dims3 output() const;
  int output_channels() const;
  std::int64_t output_volume() const { return output().volume() * output_channels(); }
};

/// FP32 additions and multiplications counted separately. Fractional values arise
/// from fire-rate scaling.
struct OpCount {
  double adds = 0.0;
  double mults = 0.0;

  OpCount& operator+=(const OpCount& o) {
    adds += o.adds;
    mults += o.mults;
    return *this;
  }
  friend OpCount operator+(OpCount a, const OpCount& b) { return a += b; }
  friend OpCount operator*(OpCount a, double k) { return {a.adds * k, a.mults * k}; }
  friend bool operator==(const OpCount&, const OpCount&) = default;
};

struct EnergyModel {
  double e_add = 1.273;   // pJ per FP32 addition
  double e_mult = 3.483;  // pJ per FP32 multiplication
  double sparsity = 0.30;
};

enum class Model { kCnn2d, kCnn3d, kLif, kLiaf };

std::string_view to_string(Model model);
Model parse_model(std::string_view name);
bool is_spiking(Model model);

/// Dense operand count of one layer. Pooling and normalization contribute nothing.
OpCount count_layer(const LayerSpec& layer);

/// Feed-forward operand count of a network under the given execution model.
///   CNN2D/CNN3D: one dense pass.
///   LIAF: dense counts x T, plus 1 add + 1 mult per neuron per step for the membrane.
///   LIF: synaptic layers take binary input, so they need no multiplications and their
///        additions scale with fire_rate; x T, plus the same membrane updates.
/// Layers flagged after_decode run once with dense counts.
OpCount count_network(const std::vector<LayerSpec>& net, Model model, int steps, double fire_rate);

/// adds * e_add + mults * e_mult, in pJ.
double energy(const OpCount& ops, const EnergyModel& em = {});

/// Energy per input frame; SNN models consume T frames per prediction, CNNs one.
double power_per_frame(double total_energy, int frames_per_prediction);
int frames_per_prediction(Model model, int steps);

/// ResNet-18/34 layer lists whose feature chains follow the dataset's benchmark setups:
/// 2-D CNN on 1 x 224 x 224 reconstructions, 3-D CNN on 2 x 8 x 224 x 224 event volumes,
/// and LIF/LIAF SNNs running 2-D convolutions on 2 x 224 x 224 frames for T steps.
std::vector<LayerSpec> resnet_preset(int depth, Model model);

/// Flat key=value network description; see parse_network_config.
struct NetworkConfig {
  std::optional<std::string> preset;
  std::optional<Model> model;
  std::optional<int> steps;
  std::optional<double> fire_rate;
  std::vector<LayerSpec> layers;

  /// Preset layers when a preset is named, explicit layers otherwise.
  std::vector<LayerSpec> resolve(Model model) const;
};

/// Lines are `key = value`; '#' starts a comment. Recognised keys: preset, model, steps,
/// fire_rate, and layer.<i>.<field> with fields kind, name, in, out, kernel, stride,
/// padding, input, bias, stateful, after_decode. Dims are written `HxW` or `DxHxW`.
NetworkConfig parse_network_config(std::istream& in);
NetworkConfig parse_network_config(std::string_view text);

}  // namespace estool::cost
