#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "snow/params.hpp"

namespace snow {

/// Which analysis tables `simulate` and `analyze` write.
struct EmitFlags {
    bool events = true;
    bool latency = true;
    bool directions = true;
    bool tips = true;
    bool envelope = true;
};

/// Everything the command line and config files control. Config files are
/// flat key=value text with exactly these keys: alpha, beta, gamma, epsilon,
/// radius, max_steps, stop_margin, preset, out_dir, render_px, emit.events,
/// emit.latency, emit.directions, emit.tips, emit.envelope, sweep.alpha,
/// sweep.beta, sweep.gamma, sweep.epsilon (comma-separated lists).
struct RunConfig {
    SimParams sim;
    std::string preset;
    std::string out_dir = "out";
    int render_px = 512;
    EmitFlags emit;
    std::vector<double> sweep_alpha;
    std::vector<double> sweep_beta;
    std::vector<double> sweep_gamma;
    std::vector<double> sweep_epsilon;
};

/// Named parameter sets from the growth regimes studied here.
struct Preset {
    std::string name;
    SimParams sim;
};

const std::vector<Preset>& presets();
std::optional<Preset> find_preset(const std::string& name);

/// Applies one key=value pair; throws std::invalid_argument on unknown keys
/// or malformed values. A "preset" key replaces the simulation parameters
/// with the preset's before later keys refine them.
void apply_config_kv(RunConfig& config, const std::string& key, const std::string& value);

/// Reads a flat key=value file ('#' starts a comment line).
void apply_config_file(RunConfig& config, const std::filesystem::path& path);

}  // namespace snow
