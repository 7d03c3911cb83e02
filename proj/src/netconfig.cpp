// Copyright 2026 The estool Authors.
// SPDX-License-Identifier: Apache-2.0
#include <charconv>
#include <istream>
#include <map>
#include <sstream>
#include <string>

#include "estool/cost_model.hpp"
#include "estool/error.hpp"

namespace estool::cost {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(std::string_view text, std::string_view key) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw InvalidInput("bad numeric value for " + std::string(key) + ": " + std::string(text));
  return value;
}

bool parse_bool(std::string_view text, std::string_view key) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw InvalidInput("bad boolean for " + std::string(key) + ": " + std::string(text));
}

// A single number is a square 2-D extent.
Dims3 parse_dims(std::string_view text, std::string_view key) {
  std::vector<int> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find('x', start);
    parts.push_back(parse_number<int>(trim(text.substr(start, pos - start)), key));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  switch (parts.size()) {
    case 1: return {1, parts[0], parts[0]};
    case 2: return {1, parts[0], parts[1]};
    case 3: return {parts[0], parts[1], parts[2]};
    default: throw InvalidInput("dims must be N, HxW or DxHxW: " + std::string(key));
  }
}

void set_field(LayerSpec& l, std::string_view field, std::string_view value, std::string_view key) {
  if (field == "kind") l.kind = parse_layer_kind(value);
  else if (field == "name") l.name = std::string(value);
  else if (field == "in") l.in_channels = parse_number<int>(value, key);
  else if (field == "out") l.out_channels = parse_number<int>(value, key);
  else if (field == "kernel") l.kernel = parse_dims(value, key);
  else if (field == "stride") l.stride = parse_dims(value, key);
  else if (field == "padding") l.padding = parse_dims(value, key);
  else if (field == "input") l.input = parse_dims(value, key);
  else if (field == "bias") l.bias = parse_bool(value, key);
  else if (field == "stateful") l.stateful = parse_bool(value, key);
  else if (field == "after_decode") l.after_decode = parse_bool(value, key);
  else throw InvalidInput("unknown layer field: " + std::string(key));
}

}  // namespace

NetworkConfig parse_network_config(std::istream& in) {
  NetworkConfig cfg;
  std::map<int, LayerSpec> layers;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos)
      throw InvalidInput("line " + std::to_string(lineno) + ": expected key = value");
    const auto key = trim(view.substr(0, eq));
    const auto value = trim(view.substr(eq + 1));
    if (key.empty() || value.empty())
      throw InvalidInput("line " + std::to_string(lineno) + ": empty key or value");

    if (key == "preset") cfg.preset = std::string(value);
    else if (key == "model") cfg.model = parse_model(value);
    else if (key == "steps") cfg.steps = parse_number<int>(value, key);
    else if (key == "fire_rate") cfg.fire_rate = parse_number<double>(value, key);
    else if (key.starts_with("layer.")) {
      const auto rest = key.substr(6);
      const auto dot = rest.find('.');
      if (dot == std::string_view::npos) throw InvalidInput("expected layer.<i>.<field>: " + std::string(key));
      const int index = parse_number<int>(rest.substr(0, dot), key);
      if (index < 0) throw InvalidInput("negative layer index: " + std::string(key));
      set_field(layers[index], rest.substr(dot + 1), value, key);
    } else {
      throw InvalidInput("unknown key: " + std::string(key));
    }
  }
  int expected = 0;
  for (auto& [index, layer] : layers) {
    if (index != expected++) throw InvalidInput("layer indices must be contiguous from 0");
    if (layer.name.empty()) layer.name = "layer" + std::to_string(index);
    cfg.layers.push_back(std::move(layer));
  }
  return cfg;
}

NetworkConfig parse_network_config(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_network_config(in);
}

}  // namespace estool::cost
