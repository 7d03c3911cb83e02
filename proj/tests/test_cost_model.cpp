// Copyright 2026 The estool Authors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>

#include "estool/cost_model.hpp"
#include "estool/error.hpp"
#include "support/oracles.hpp"

namespace estool::cost {
namespace {

LayerSpec linear(int in, int out, bool bias) {
  LayerSpec l;
  l.kind = LayerKind::kLinear;
  l.in_channels = in;
  l.out_channels = out;
  l.bias = bias;
  return l;
}

LayerSpec conv(int in_c, int out_c, int k, int ih, int iw, int stride, int pad, bool bias) {
  LayerSpec l;
  l.kind = LayerKind::kConv2d;
  l.in_channels = in_c;
  l.out_channels = out_c;
  l.kernel = {1, k, k};
  l.stride = {1, stride, stride};
  l.padding = {0, pad, pad};
  l.input = {1, ih, iw};
  l.bias = bias;
  return l;
}

TEST(CountLayer, Linear) {
  EXPECT_EQ(count_layer(linear(1, 1, false)), (OpCount{0, 1}));
  EXPECT_EQ(count_layer(linear(512, 1000, true)), (OpCount{512000, 512000}));
  EXPECT_EQ(count_layer(linear(512, 1000, false)), (OpCount{511000, 512000}));
}

TEST(CountLayer, ConvHandExample) {
  const auto l = conv(1, 1, 3, 4, 4, 1, 0, false);
  EXPECT_EQ(l.output(), (Dims3{1, 2, 2}));
  EXPECT_EQ(count_layer(l), (OpCount{32, 36}));
  const auto o = oracle::conv2d_ops(1, 1, 3, 3, 4, 4, 1, 0, false);
  EXPECT_EQ(o.adds, 32);
  EXPECT_EQ(o.mults, 36);
}

TEST(CountLayer, ConvMatchesEnumerationOracle) {
  struct Case {
    int in_c, out_c, k, ih, iw, stride, pad;
    bool bias;
  };
  const Case cases[] = {{3, 4, 3, 9, 7, 2, 1, true}, {2, 5, 1, 6, 6, 1, 0, false},
                        {1, 2, 5, 11, 13, 3, 2, true}, {4, 3, 3, 5, 5, 1, 1, false}};
  for (const auto& c : cases) {
    const auto ops = count_layer(conv(c.in_c, c.out_c, c.k, c.ih, c.iw, c.stride, c.pad, c.bias));
    const auto o = oracle::conv2d_ops(c.in_c, c.out_c, c.k, c.k, c.ih, c.iw, c.stride, c.pad, c.bias);
    EXPECT_EQ(ops.adds, static_cast<double>(o.adds));
    EXPECT_EQ(ops.mults, static_cast<double>(o.mults));
  }
}

TEST(CountLayer, PoolResidualAndErrors) {
  LayerSpec pool = conv(8, 8, 3, 20, 20, 2, 1, false);
  pool.kind = LayerKind::kPool;
  EXPECT_EQ(count_layer(pool), (OpCount{0, 0}));
  EXPECT_EQ(pool.output(), (Dims3{1, 10, 10}));
  LayerSpec add;
  add.kind = LayerKind::kResidual;
  add.in_channels = add.out_channels = 4;
  add.input = {1, 5, 6};
  EXPECT_EQ(count_layer(add), (OpCount{120, 0}));
  EXPECT_THROW(count_layer(conv(1, 1, 5, 4, 4, 1, 0, false)), InvalidInput);
  EXPECT_THROW(count_layer(conv(0, 1, 3, 4, 4, 1, 0, false)), InvalidInput);
}

TEST(Energy, Constants) {
  EXPECT_EQ(energy({0, 0}), 0.0);
  EXPECT_EQ(energy({1, 0}), 1.273);
  EXPECT_EQ(energy({0, 1}), 3.483);
  EXPECT_NEAR(energy({10, 10}), 47.56, 1e-12);
  const OpCount a{123, 456}, b{7, 8};
  EXPECT_NEAR(energy(a + b), energy(a) + energy(b), 1e-9);
  EXPECT_EQ(EnergyModel{}.sparsity, 0.30);
}

TEST(PowerPerFrame, Examples) {
  EXPECT_EQ(power_per_frame(80.0, 8), 10.0);
  EXPECT_EQ(power_per_frame(5.0, frames_per_prediction(Model::kCnn2d, 8)), 5.0);
  EXPECT_EQ(frames_per_prediction(Model::kLif, 8), 8);
  EXPECT_THROW(power_per_frame(1.0, 0), InvalidInput);
}

TEST(CountNetwork, SingleLinearLif) {
  LayerSpec l = linear(100, 10, false);
  l.stateful = true;
  const auto dense = count_layer(l);
  const auto ops = count_network({l}, Model::kLif, 8, 0.30);
  EXPECT_NEAR(ops.adds, 0.30 * 8 * dense.adds + 8 * 10, 1e-9);
  EXPECT_EQ(ops.mults, 8.0 * 10);  // leak multiplications only
  l.stateful = false;
  EXPECT_EQ(count_network({l}, Model::kLif, 8, 0.30).mults, 0.0);
}

TEST(CountNetwork, LiafVsLifToyNet) {
  std::vector<LayerSpec> net{conv(2, 4, 3, 8, 8, 1, 1, false), linear(256, 10, true)};
  net[1].stateful = false;
  net[1].after_decode = true;
  const auto lif = count_network(net, Model::kLif, 4, 0.3);
  const auto liaf = count_network(net, Model::kLiaf, 4, 0.3);
  const auto c = count_layer(net[0]);
  const double neurons = 4 * 8 * 8;
  EXPECT_NEAR(liaf.mults, 4 * c.mults + 4 * neurons + 2560, 1e-9);
  EXPECT_NEAR(lif.mults, 4 * neurons + 2560, 1e-9);
  EXPECT_GT(liaf.mults, lif.mults);
  EXPECT_THROW(count_network(net, Model::kLif, 0, 0.3), InvalidInput);
  EXPECT_THROW(count_network(net, Model::kLif, 4, 1.5), InvalidInput);
}

TEST(CountNetwork, FireRateScaling) {
  const auto net = resnet_preset(18, Model::kLif);
  const auto full = count_network(net, Model::kLif, 8, 1.0);
  const auto part = count_network(net, Model::kLif, 8, 0.3);
  const auto none = count_network(net, Model::kLif, 8, 0.0);
  EXPECT_GE(full.adds, part.adds);
  EXPECT_NEAR(part.adds - none.adds, 0.3 * (full.adds - none.adds), 1e-3);
  EXPECT_EQ(full.mults, part.mults);
}

TEST(CountNetwork, CnnEqualsLayerSum) {
  const auto net = resnet_preset(18, Model::kCnn2d);
  OpCount sum;
  for (const auto& l : net) sum += count_layer(l);
  EXPECT_EQ(count_network(net, Model::kCnn2d, 1, 0.3), sum);
  EXPECT_EQ(count_network(net, Model::kCnn2d, 8, 0.3), sum);
}

std::vector<std::pair<int, Dims3>> stage_outputs(const std::vector<LayerSpec>& net) {
  std::vector<std::pair<int, Dims3>> out;
  for (const auto& l : net)
    if (l.name == "conv1" || l.name == "maxpool" || l.name.ends_with(".residual") ||
        l.name == "avgpool")
      out.emplace_back(l.output_channels(), l.output());
  return out;
}

TEST(Presets, TwoDimensionalChain) {
  for (int depth : {18, 34}) {
    for (auto model : {Model::kCnn2d, Model::kLif, Model::kLiaf}) {
      const auto net = resnet_preset(depth, model);
      EXPECT_EQ(net.front().in_channels, model == Model::kCnn2d ? 1 : 2);
      EXPECT_EQ(net.front().input, (Dims3{1, 224, 224}));
      const auto outs = stage_outputs(net);
      EXPECT_EQ(outs[0], (std::pair<int, Dims3>{64, {1, 110, 110}}));
      EXPECT_EQ(outs[1], (std::pair<int, Dims3>{64, {1, 55, 55}}));
      // Distinct stage outputs after the stem, in order.
      std::vector<std::pair<int, Dims3>> stages;
      for (std::size_t i = 2; i < outs.size(); ++i)
        if (stages.empty() || !(stages.back() == outs[i])) stages.push_back(outs[i]);
      const std::vector<std::pair<int, Dims3>> expected{{64, {1, 55, 55}},
                                                        {128, {1, 28, 28}},
                                                        {256, {1, 14, 14}},
                                                        {512, {1, 7, 7}},
                                                        {512, {1, 1, 1}}};
      EXPECT_EQ(stages, expected);
      EXPECT_EQ(net.back().in_channels, 512);
      EXPECT_EQ(net.back().out_channels, 1000);
      EXPECT_TRUE(net.back().after_decode);
    }
  }
}

TEST(Presets, VolumetricChain) {
  const auto net = resnet_preset(18, Model::kCnn3d);
  EXPECT_EQ(net.front().in_channels, 2);
  EXPECT_EQ(net.front().input, (Dims3{8, 224, 224}));
  const auto outs = stage_outputs(net);
  EXPECT_EQ(outs[0], (std::pair<int, Dims3>{64, {8, 110, 110}}));
  EXPECT_EQ(outs[1], (std::pair<int, Dims3>{64, {4, 55, 55}}));
  std::vector<std::pair<int, Dims3>> stages;
  for (std::size_t i = 2; i < outs.size(); ++i)
    if (stages.empty() || !(stages.back() == outs[i])) stages.push_back(outs[i]);
  const std::vector<std::pair<int, Dims3>> expected{{64, {4, 55, 55}},
                                                    {128, {2, 28, 28}},
                                                    {256, {1, 14, 14}},
                                                    {512, {1, 7, 7}},
                                                    {512, {1, 1, 1}}};
  EXPECT_EQ(stages, expected);
}

TEST(Presets, BlockCounts) {
  auto residuals = [](const std::vector<LayerSpec>& net) {
    return std::count_if(net.begin(), net.end(),
                         [](const LayerSpec& l) { return l.kind == LayerKind::kResidual; });
  };
  EXPECT_EQ(residuals(resnet_preset(18, Model::kCnn2d)), 8);
  EXPECT_EQ(residuals(resnet_preset(34, Model::kCnn2d)), 16);
  EXPECT_THROW(resnet_preset(50, Model::kCnn2d), InvalidInput);
}

TEST(Presets, OrderingClaims) {
  for (int depth : {18, 34}) {
    const auto cnn2d = count_network(resnet_preset(depth, Model::kCnn2d), Model::kCnn2d, 8, 0.3);
    const auto cnn3d = count_network(resnet_preset(depth, Model::kCnn3d), Model::kCnn3d, 8, 0.3);
    const auto lif = count_network(resnet_preset(depth, Model::kLif), Model::kLif, 8, 0.3);
    EXPECT_GE(cnn3d.adds, cnn2d.adds);
    EXPECT_GE(cnn3d.mults, cnn2d.mults);
    EXPECT_LT(energy(lif), energy(cnn2d));
  }
}

TEST(NetworkConfig, ParsePresetAndLayers) {
  const auto p = parse_network_config("# comment\npreset = resnet34\nmodel = lif\nsteps = 4\n");
  EXPECT_EQ(p.preset, "resnet34");
  EXPECT_EQ(p.model, Model::kLif);
  EXPECT_EQ(p.steps, 4);
  EXPECT_EQ(p.resolve(Model::kLif).size(), resnet_preset(34, Model::kLif).size());

  const auto c = parse_network_config(
      "layer.0.kind = conv2d\nlayer.0.in = 1\nlayer.0.out = 1\nlayer.0.kernel = 3x3\n"
      "layer.0.input = 4x4\nlayer.1.kind = linear\nlayer.1.in = 4\nlayer.1.out = 2\n"
      "layer.1.bias = true\nlayer.1.after_decode = 1\nfire_rate = 0.25\n");
  ASSERT_EQ(c.layers.size(), 2u);
  EXPECT_EQ(count_layer(c.layers[0]), (OpCount{32, 36}));
  EXPECT_TRUE(c.layers[1].bias);
  EXPECT_TRUE(c.layers[1].after_decode);
  EXPECT_EQ(c.layers[0].name, "layer0");
  EXPECT_EQ(c.fire_rate, 0.25);
  const auto v = parse_network_config("layer.0.kind = conv3d\nlayer.0.kernel = 3x7x7\n");
  EXPECT_EQ(v.layers[0].kernel, (Dims3{3, 7, 7}));
}

TEST(NetworkConfig, Errors) {
  EXPECT_THROW(parse_network_config("bogus = 1\n"), InvalidInput);
  EXPECT_THROW(parse_network_config("steps\n"), InvalidInput);
  EXPECT_THROW(parse_network_config("steps = x\n"), InvalidInput);
  EXPECT_THROW(parse_network_config("layer.1.kind = conv2d\n"), InvalidInput);
  EXPECT_THROW(parse_network_config("layer.0.kind = lstm\n"), InvalidInput);
  EXPECT_THROW(parse_network_config("layer.0.kernel = 1x2x3x4\n"), InvalidInput);
  EXPECT_THROW(parse_network_config("").resolve(Model::kCnn2d), InvalidInput);
  EXPECT_THROW(parse_network_config("preset = vgg\n").resolve(Model::kCnn2d), InvalidInput);
}

}  // namespace
}  // namespace estool::cost
