// Copyright 2026 The estool Authors.
// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <CLI11/CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>

#include "estool/analysis.hpp"
#include "estool/cost_model.hpp"
#include "estool/error.hpp"
#include "estool/generator.hpp"
#include "estool/image_io.hpp"
#include "estool/manifest.hpp"
#include "estool/parallel.hpp"
#include "estool/reconstruct.hpp"
#include "estool/storage.hpp"

namespace estool::cli {
namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void init_logging() {
  static std::once_flag once;
  std::call_once(once, [] {
    auto logger = spdlog::stderr_color_mt("estool");
    spdlog::set_default_logger(logger);
    spdlog::set_pattern("[%l] %v");
  });
  spdlog::level::level_enum level = spdlog::level::warn;
  if (const char* env = std::getenv("ESTOOL_LOG"); env != nullptr && *env != '\0')
    level = spdlog::level::from_str(env);
  spdlog::set_level(level);
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_value(std::string_view text, std::string_view key) {
  T v{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end)
    throw ConfigError("invalid value for " + std::string(key) + ": " + std::string(text));
  return v;
}

TrajectoryKind parse_kind(std::string_view name) {
  try {
    return parse_trajectory_kind(name);
  } catch (const InvalidInput& e) {
    throw ConfigError(e.what());
  }
}

// Raw flag values; an option only overrides the config when it was given.
struct Flags {
  double threshold = 0;
  int steps = 0;
  std::string trajectory;
  std::uint64_t seed = 0;
  int workers = 0;
  int margin = 0;
  std::string out;
  std::string config;
  std::size_t queue_capacity = 0;
  CLI::Option* o_threshold = nullptr;
  CLI::Option* o_steps = nullptr;
  CLI::Option* o_trajectory = nullptr;
  CLI::Option* o_seed = nullptr;
  CLI::Option* o_workers = nullptr;
  CLI::Option* o_margin = nullptr;
  CLI::Option* o_out = nullptr;
  CLI::Option* o_config = nullptr;
  CLI::Option* o_queue = nullptr;
};

void add_common_flags(CLI::App& app, Flags& f) {
  f.o_threshold = app.add_option("--threshold", f.threshold, "Event trigger threshold on V in (0,1) [0.18]");
  f.o_steps = app.add_option("--steps", f.steps, "Time steps T [8]");
  f.o_trajectory =
      app.add_option("--trajectory", f.trajectory, "Motion path: odg, rcls or saccade [odg]");
  f.o_seed = app.add_option("--seed", f.seed, "Saccade seed; image i uses seed + i [0]");
  f.o_workers = app.add_option("--workers", f.workers, "Worker threads [1]");
  f.o_margin = app.add_option("--margin", f.margin, "Valid-region margin in pixels [16]");
  f.o_out = app.add_option("--out", f.out, "Output directory [out]");
  f.o_config = app.add_option("--config", f.config, "key = value run config file");
  f.o_queue = app.add_option("--queue-capacity", f.queue_capacity,
                             "Bounded task queue capacity, 0 for 2 x workers [0]");
}

RunConfig resolve_config(const Flags& f) {
  RunConfig cfg;
  if (f.o_config->count() > 0) {
    std::ifstream in(f.config);
    if (!in) throw IoError("cannot open config " + f.config);
    apply_config_file(cfg, in);
  }
  if (f.o_threshold->count() > 0) cfg.threshold = f.threshold;
  if (f.o_steps->count() > 0) cfg.steps = f.steps;
  if (f.o_trajectory->count() > 0) cfg.trajectory = parse_kind(f.trajectory);
  if (f.o_seed->count() > 0) cfg.seed = f.seed;
  if (f.o_workers->count() > 0) cfg.workers = f.workers;
  if (f.o_margin->count() > 0) cfg.margin = f.margin;
  if (f.o_out->count() > 0) cfg.out = f.out;
  if (f.o_queue->count() > 0) cfg.queue_capacity = f.queue_capacity;
  cfg.validate();
  return cfg;
}

std::vector<RgbImage> load_corpus(const Manifest& m) {
  if (m.entries.empty()) throw ValidationError("manifest has no entries");
  std::vector<RgbImage> corpus;
  corpus.reserve(m.entries.size());
  for (const auto& e : m.entries) {
    try {
      corpus.push_back(read_image(m.resolve(e)));
    } catch (const std::exception& ex) {
      spdlog::warn("skipping {}: {}", e.path, ex.what());
    }
  }
  if (corpus.empty()) throw IoError("no image in the manifest could be read");
  return corpus;
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw IoError("cannot write " + path.string());
}

Json rate_json(double mean, double sigma) { return Json{{"mean", mean}, {"sigma", sigma}}; }

// ---------------------------------------------------------------------------

struct ConvertResult {
  bool ok = false;
  std::size_t events = 0;
  RateSample rate;
  std::string error;
};

int cmd_convert(const std::string& manifest_path, const RunConfig& cfg, std::ostream& out) {
  const Manifest m = read_manifest(manifest_path);
  if (m.entries.empty()) throw ValidationError("manifest has no entries");

  std::vector<fs::path> targets;
  std::set<fs::path> unique;
  for (const auto& e : m.entries) {
    fs::path rel = fs::path(e.path).lexically_normal();
    if (rel.empty() || *rel.begin() == "..")
      throw ValidationError("manifest path escapes the corpus root: " + e.path);
    rel.replace_extension(".evs");
    if (!unique.insert(rel).second)
      throw ValidationError("two manifest entries map to " + rel.string());
    targets.push_back(cfg.out / rel);
    fs::create_directories(targets.back().parent_path());
  }

  const auto results = parallel_map<ConvertResult>(
      m.entries.size(), cfg.workers, cfg.queue_capacity, [&](std::size_t i) {
        ConvertResult r;
        try {
          ConversionConfig cc;
          cc.thresh = cfg.threshold;
          cc.trajectory = make_trajectory(cfg.trajectory, cfg.steps, cfg.seed + i);
          cc.valid_margin = cfg.margin;
          const EventStream s = generate_events(read_image(m.resolve(m.entries[i])), cc);
          write_stream(targets[i], s);
          r.ok = true;
          r.events = s.events.size();
          r.rate = rate_sample(s, cfg.margin);
        } catch (const std::exception& e) {
          r.error = e.what();
        }
        return r;
      });

  std::vector<RateSample> samples;
  Json per_image = Json::array();
  Json failed = Json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    const auto& e = m.entries[i];
    if (!r.ok) {
      spdlog::warn("skipping {}: {}", e.path, r.error);
      failed.push_back(Json{{"path", e.path}, {"error", r.error}});
      continue;
    }
    spdlog::info("{}: {} events", e.path, r.events);
    samples.push_back(r.rate);
    per_image.push_back(Json{{"path", e.path},
                             {"label", e.label},
                             {"events", r.events},
                             {"rate_all", r.rate.all},
                             {"rate_on", r.rate.on},
                             {"rate_off", r.rate.off}});
  }

  Json doc;
  doc["threshold"] = cfg.threshold;
  doc["steps"] = cfg.steps;
  doc["trajectory"] = std::string(to_string(cfg.trajectory));
  doc["seed"] = cfg.seed;
  doc["margin"] = cfg.margin;
  doc["images"] = m.entries.size();
  doc["converted"] = samples.size();
  if (!samples.empty()) {
    const auto st = event_rate_stats(samples);
    doc["event_rate"] = Json{{"all", rate_json(st.mean_total, st.sigma_total)},
                             {"on", rate_json(st.mean_on, st.sigma_on)},
                             {"off", rate_json(st.mean_off, st.sigma_off)}};
    out << "converted " << samples.size() << "/" << m.entries.size() << " images, mean event rate "
        << std::fixed << std::setprecision(3) << 100.0 * st.mean_total << "%\n";
  }
  doc["samples"] = std::move(per_image);
  doc["failed"] = std::move(failed);
  write_text(cfg.out / "stats.json", doc.dump(2) + "\n");

  if (samples.empty()) {
    spdlog::error("no image could be converted");
    return kIoError;
  }
  return kOk;
}

int cmd_reconstruct(const std::string& evs, const RunConfig& cfg, const std::string& pgm,
                    std::ostream& out) {
  const EventStream s = read_stream(fs::path(evs));
  if (s.steps > 127) throw ValidationError("too many steps for an 8-bit gray image");
  const Trajectory traj = make_trajectory(cfg.trajectory, s.steps, cfg.seed);
  const auto recon = edge_integral(to_event_frames(s), traj);
  const int scale = 255 / (2 * s.steps);
  const RasterI levels = (edge_integral_valid_region(recon, cfg.margin) + s.steps) * scale;
  const fs::path target = pgm.empty() ? cfg.out / fs::path(evs).filename().replace_extension(".pgm")
                                      : fs::path(pgm);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  write_pgm(target, levels);
  out << "wrote " << target.string() << " (" << levels.cols() << "x" << levels.rows() << ", "
      << 2 * s.steps + 1 << " levels x " << scale << ")\n";
  return kOk;
}

int cmd_stats(const std::string& dir, const RunConfig& cfg, int bins, std::ostream& out) {
  if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".evs") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw ValidationError("no .evs files under " + dir);

  const auto samples = parallel_map<RateSample>(
      files.size(), cfg.workers, cfg.queue_capacity,
      [&](std::size_t i) { return rate_sample(read_stream(files[i]), cfg.margin); });
  const auto st = event_rate_stats(samples);

  std::ostringstream report;
  report << "streams " << files.size() << ", margin " << cfg.margin << "\n";
  report << std::left << std::setw(10) << "polarity" << std::right << std::setw(12) << "mean(%)"
         << std::setw(12) << "sigma(%)" << "\n";
  report << std::fixed << std::setprecision(3);
  const std::pair<const char*, std::pair<double, double>> rows[] = {
      {"ALL", {st.mean_total, st.sigma_total}},
      {"ON", {st.mean_on, st.sigma_on}},
      {"OFF", {st.mean_off, st.sigma_off}}};
  for (const auto& [name, ms] : rows)
    report << std::left << std::setw(10) << name << std::right << std::setw(12) << 100.0 * ms.first
           << std::setw(12) << 100.0 * ms.second << "\n";

  std::vector<double> rates;
  for (const auto& s : samples) rates.push_back(s.all);
  const Histogram h = event_rate_histogram(rates, bins);
  std::ostringstream csv;
  csv << "bin_lo,bin_hi,count\n" << std::setprecision(17);
  const double width = (h.hi - h.lo) / static_cast<double>(h.counts.size());
  for (std::size_t b = 0; b < h.counts.size(); ++b)
    csv << h.lo + width * static_cast<double>(b) << ','
        << h.lo + width * static_cast<double>(b + 1) << ',' << h.counts[b] << '\n';

  write_text(cfg.out / "stats_report.txt", report.str());
  write_text(cfg.out / "rate_histogram.csv", csv.str());
  out << report.str();
  return kOk;
}

int cmd_sweep(const std::string& manifest_path, const RunConfig& cfg,
              const std::vector<double>& thresholds, std::ostream& out) {
  const auto corpus = load_corpus(read_manifest(manifest_path));
  ConversionConfig cc;
  cc.trajectory = make_trajectory(cfg.trajectory, cfg.steps, cfg.seed);
  cc.valid_margin = cfg.margin;
  const auto sweep = threshold_sweep(corpus, thresholds, cc, cfg.workers);
  std::ostringstream csv;
  csv << "threshold,mean_event_rate\n" << std::setprecision(17);
  for (const auto& [t, r] : sweep.curve.points) csv << t << ',' << r << '\n';
  write_text(cfg.out / "sweep.csv", csv.str());
  out << csv.str();
  return kOk;
}

int cmd_entropy(const std::string& manifest_path, const RunConfig& cfg,
                const std::vector<std::string>& kind_names, const std::vector<int>& steps,
                std::ostream& out) {
  std::vector<TrajectoryKind> kinds;
  for (const auto& k : kind_names) kinds.push_back(parse_kind(k));
  for (int t : steps)
    if (t < 1) throw ConfigError("entropy steps must be >= 1");
  const auto corpus = load_corpus(read_manifest(manifest_path));
  EntropySweepOptions opts;
  opts.thresh = cfg.threshold;
  opts.margin = cfg.margin;
  opts.base_seed = cfg.seed;
  opts.workers = cfg.workers;
  const auto curves = entropy_vs_steps(corpus, kinds, steps, opts);
  std::ostringstream csv;
  csv << "trajectory,steps,mean_entropy\n" << std::setprecision(17);
  for (auto kind : kinds)
    for (const auto& [t, h] : curves.at(kind).points)
      csv << to_string(kind) << ',' << static_cast<int>(t) << ',' << h << '\n';
  write_text(cfg.out / "entropy.csv", csv.str());
  out << csv.str();
  return kOk;
}

struct CostFlags {
  std::string net;
  std::string preset = "resnet18";
  std::string model = "all";
  double fire_rate = 0.30;
  bool json = false;
  CLI::Option* o_net = nullptr;
  CLI::Option* o_preset = nullptr;
  CLI::Option* o_model = nullptr;
  CLI::Option* o_fire = nullptr;
};

int cmd_cost(const CostFlags& cf, const Flags& f, std::ostream& out) {
  cost::NetworkConfig net;
  if (cf.o_net->count() > 0) {
    std::ifstream in(cf.net);
    if (!in) throw IoError("cannot open network config " + cf.net);
    try {
      net = cost::parse_network_config(in);
    } catch (const InvalidInput& e) {
      throw ConfigError(e.what());
    }
  }
  if (cf.o_preset->count() > 0 || (!net.preset && net.layers.empty())) net.preset = cf.preset;

  int steps = net.steps.value_or(8);
  if (f.o_steps->count() > 0) steps = f.steps;
  double fire_rate = net.fire_rate.value_or(cost::EnergyModel{}.sparsity);
  if (cf.o_fire->count() > 0) fire_rate = cf.fire_rate;
  if (steps < 1) throw ConfigError("steps must be >= 1");
  if (!(fire_rate >= 0.0 && fire_rate <= 1.0)) throw ConfigError("fire rate must lie in [0, 1]");

  std::vector<cost::Model> models;
  std::string model_name = net.model ? std::string(to_string(*net.model)) : std::string("all");
  if (cf.o_model->count() > 0) model_name = cf.model;
  try {
    if (model_name == "all")
      models = {cost::Model::kCnn2d, cost::Model::kCnn3d, cost::Model::kLif, cost::Model::kLiaf};
    else
      models = {cost::parse_model(model_name)};
  } catch (const InvalidInput& e) {
    throw ConfigError(e.what());
  }

  const cost::EnergyModel em;
  Json rows = Json::array();
  std::ostringstream csv;
  csv << "model,adds,mults,energy_pj,frames_per_prediction,energy_per_frame_pj\n"
      << std::setprecision(17);
  for (auto model : models) {
    std::vector<cost::LayerSpec> layers;
    try {
      layers = net.resolve(model);
    } catch (const InvalidInput& e) {
      throw ConfigError(e.what());
    }
    const auto ops = cost::count_network(layers, model, steps, fire_rate);
    const double e = cost::energy(ops, em);
    const int frames = cost::frames_per_prediction(model, steps);
    const double p = cost::power_per_frame(e, frames);
    csv << to_string(model) << ',' << ops.adds << ',' << ops.mults << ',' << e << ',' << frames
        << ',' << p << '\n';
    rows.push_back(Json{{"model", std::string(to_string(model))},
                        {"adds", ops.adds},
                        {"mults", ops.mults},
                        {"energy_pj", e},
                        {"frames_per_prediction", frames},
                        {"energy_per_frame_pj", p}});
  }
  if (cf.json) {
    Json doc{{"steps", steps}, {"fire_rate", fire_rate}, {"e_add_pj", em.e_add},
             {"e_mult_pj", em.e_mult}, {"models", rows}};
    out << doc.dump(2) << "\n";
  } else {
    out << csv.str();
  }
  return kOk;
}

int cmd_inspect(const std::string& evs, std::size_t limit, bool csv, std::ostream& out) {
  const EventStream s = read_stream(fs::path(evs));
  if (csv) {
    export_csv(out, s);
    return kOk;
  }
  std::size_t on = 0;
  for (const auto& e : s.events) on += e.p > 0 ? 1 : 0;
  out << "magic ESEV\nversion " << kEvsVersion << "\nwidth " << s.width << "\nheight " << s.height
      << "\nsteps " << s.steps << "\nthreshold " << std::setprecision(9) << s.thresh
      << "\nevents " << s.events.size() << " (on " << on << ", off " << s.events.size() - on
      << ")\n";
  const std::size_t n = std::min(limit, s.events.size());
  if (n > 0) out << "x,y,t,p\n";
  for (std::size_t i = 0; i < n; ++i) {
    const auto& e = s.events[i];
    out << e.x << ',' << e.y << ',' << int{e.t} << ',' << int{e.p} << '\n';
  }
  return kOk;
}

}  // namespace

void RunConfig::validate() const {
  if (!(threshold > 0.0 && threshold < 1.0)) throw ConfigError("threshold must lie in (0, 1)");
  if (steps < 1 || steps > 255) throw ConfigError("steps must lie in [1, 255]");
  if (trajectory == TrajectoryKind::kOdg && steps > kOdgMaxSteps)
    throw ConfigError("the odg trajectory supports at most 8 steps");
  if (trajectory == TrajectoryKind::kCustom) throw ConfigError("custom trajectories are not supported");
  if (workers < 1) throw ConfigError("workers must be >= 1");
  if (margin < 0) throw ConfigError("margin must be >= 0");
  if (out.empty()) throw ConfigError("output directory must not be empty");
}

void apply_config_file(RunConfig& cfg, std::istream& in) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view v(line);
    if (const auto hash = v.find('#'); hash != std::string_view::npos) v = v.substr(0, hash);
    v = trim(v);
    if (v.empty()) continue;
    const auto eq = v.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    const auto key = trim(v.substr(0, eq));
    const auto value = trim(v.substr(eq + 1));
    if (key == "threshold") cfg.threshold = parse_value<double>(value, key);
    else if (key == "steps") cfg.steps = parse_value<int>(value, key);
    else if (key == "trajectory") cfg.trajectory = parse_kind(value);
    else if (key == "seed") cfg.seed = parse_value<std::uint64_t>(value, key);
    else if (key == "workers") cfg.workers = parse_value<int>(value, key);
    else if (key == "margin") cfg.margin = parse_value<int>(value, key);
    else if (key == "out") cfg.out = std::string(value);
    else if (key == "queue_capacity") cfg.queue_capacity = parse_value<std::size_t>(value, key);
    else throw ConfigError("config line " + std::to_string(lineno) + ": unknown key " + std::string(key));
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  init_logging();
  CLI::App app{"Static-image to event-stream dataset toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags flags;
  add_common_flags(app, flags);

  std::string input;
  auto* convert = app.add_subcommand("convert", "Convert a manifest of images to EVS streams");
  convert->add_option("manifest", input, "Manifest file: path<TAB>label per line")->required();
  convert->footer("Writes <out>/<path>.evs per entry and <out>/stats.json.");

  std::string pgm;
  auto* reconstruct = app.add_subcommand("reconstruct", "Edge-Integral reconstruction to PGM");
  reconstruct->add_option("evs", input, "EVS stream file")->required();
  reconstruct->add_option("--pgm", pgm, "Output PGM path [<out>/<stem>.pgm]");
  reconstruct->footer("Gray level k in [0, 2T] is written as k * floor(255 / 2T). The image "
                      "is cropped by --margin on every side.");

  int bins = 20;
  auto* stats = app.add_subcommand("stats", "Event-rate statistics of a directory of streams");
  stats->add_option("dir", input, "Directory searched recursively for .evs files")->required();
  stats->add_option("--bins", bins, "Histogram bins [20]")->check(CLI::PositiveNumber);
  stats->footer("Writes <out>/stats_report.txt and <out>/rate_histogram.csv "
                "(columns bin_lo,bin_hi,count; rates are fractions).");

  std::vector<double> thresholds;
  for (int i = 0; i <= 15; ++i) thresholds.push_back(0.10 + 0.02 * i);
  auto* sweep = app.add_subcommand("sweep", "Mean event rate against threshold");
  sweep->add_option("manifest", input, "Manifest file")->required();
  sweep->add_option("--thresholds", thresholds, "Strictly increasing thresholds [0.10:0.02:0.40]")
      ->delimiter(',');
  sweep->footer("Writes <out>/sweep.csv with columns threshold,mean_event_rate.");

  std::vector<std::string> kinds{"odg", "rcls", "saccade"};
  std::vector<int> step_list{1, 2, 3, 4, 5, 6, 7, 8};
  auto* entropy = app.add_subcommand("entropy", "2D-entropy of reconstructions against T");
  entropy->add_option("manifest", input, "Manifest file")->required();
  entropy->add_option("--kinds", kinds, "Trajectories [odg,rcls,saccade]")->delimiter(',');
  entropy->add_option("--steps-list", step_list, "Values of T [1..8]")->delimiter(',');
  entropy->footer("Writes <out>/entropy.csv with columns trajectory,steps,mean_entropy (bits).");

  CostFlags cf;
  auto* cost_cmd = app.add_subcommand("cost", "Operand and energy estimate of a network");
  cf.o_net = cost_cmd->add_option("--net", cf.net, "Network config (key = value)");
  cf.o_preset = cost_cmd->add_option("--preset", cf.preset, "resnet18 or resnet34 [resnet18]");
  cf.o_model = cost_cmd->add_option("--model", cf.model, "cnn2d, cnn3d, lif, liaf or all [all]");
  cf.o_fire = cost_cmd->add_option("--fire-rate", cf.fire_rate, "Spike fire rate [0.30]");
  cost_cmd->add_flag("--json", cf.json, "Emit JSON instead of CSV");
  cost_cmd->footer("CSV columns: model,adds,mults,energy_pj,frames_per_prediction,"
                   "energy_per_frame_pj.");

  std::size_t limit = 10;
  bool as_csv = false;
  auto* inspect = app.add_subcommand("inspect", "Dump an EVS header and records");
  inspect->add_option("evs", input, "EVS stream file")->required();
  inspect->add_option("--limit", limit, "Records to print [10]");
  inspect->add_flag("--csv", as_csv, "Print every record as x,y,t,p CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kConfigError;
  }

  try {
    if (cost_cmd->parsed()) return cmd_cost(cf, flags, out);
    const RunConfig cfg = resolve_config(flags);
    if (convert->parsed()) return cmd_convert(input, cfg, out);
    if (reconstruct->parsed()) return cmd_reconstruct(input, cfg, pgm, out);
    if (stats->parsed()) return cmd_stats(input, cfg, bins, out);
    if (sweep->parsed()) {
      try {
        return cmd_sweep(input, cfg, thresholds, out);
      } catch (const InvalidInput& e) {
        throw ConfigError(e.what());
      }
    }
    if (entropy->parsed()) return cmd_entropy(input, cfg, kinds, step_list, out);
    if (inspect->parsed()) return cmd_inspect(input, limit, as_csv, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kIoError;
  } catch (const fs::filesystem_error& e) {
    err << "I/O error: " << e.what() << "\n";
    return kIoError;
  } catch (const FormatError& e) {
    err << "validation failure: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const ValidationError& e) {
    err << "validation failure: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const InvalidInput& e) {
    err << "validation failure: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return kConfigError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("estool");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace estool::cli
