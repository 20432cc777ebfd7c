#include "snow/config.hpp"

#include <fstream>
#include <stdexcept>

namespace snow {

namespace {

double to_double(const std::string& value, const std::string& key) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad value for " + key + ": '" + value + "'");
    }
}

std::int64_t to_int(const std::string& value, const std::string& key) {
    try {
        std::size_t used = 0;
        const std::int64_t v = std::stoll(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad value for " + key + ": '" + value + "'");
    }
}

bool to_bool(const std::string& value, const std::string& key) {
    if (value == "1" || value == "true" || value == "on" || value == "yes") return true;
    if (value == "0" || value == "false" || value == "off" || value == "no") return false;
    throw std::invalid_argument("bad value for " + key + ": '" + value + "'");
}

std::vector<double> to_list(const std::string& value, const std::string& key) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= value.size()) {
        const std::size_t pos = value.find(',', start);
        const std::string item =
            pos == std::string::npos ? value.substr(start) : value.substr(start, pos - start);
        if (!item.empty()) out.push_back(to_double(item, key));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    if (out.empty()) throw std::invalid_argument(key + ": empty list");
    return out;
}

}  // namespace

const std::vector<Preset>& presets() {
    static const std::vector<Preset> table = {
        // main-branch latency study: alpha=1, beta=0.4, gamma=0.001, edge at 200
        {"fig5", {1.0, 0.4, 0.001, 0.0, 200, 1'000'000, 5}},
        // side-branch direction study: alpha=1, beta=0.35, gamma=0.001
        {"fig7", {1.0, 0.35, 0.001, 0.0, 100, 1'000'000, 5}},
        // shell redistribution on: plate regime
        {"fig11a", {1.0, 0.4, 0.001, 0.1, 100, 1'000'000, 5}},
        // weak redistribution: plate core, dendrite rim
        {"fig11b", {1.0, 0.4, 0.001, 0.01, 100, 1'000'000, 5}},
    };
    return table;
}

std::optional<Preset> find_preset(const std::string& name) {
    for (const Preset& p : presets())
        if (p.name == name) return p;
    return std::nullopt;
}

void apply_config_kv(RunConfig& config, const std::string& key, const std::string& value) {
    if (key == "alpha")
        config.sim.alpha = to_double(value, key);
    else if (key == "beta")
        config.sim.beta = to_double(value, key);
    else if (key == "gamma")
        config.sim.gamma = to_double(value, key);
    else if (key == "epsilon")
        config.sim.epsilon = to_double(value, key);
    else if (key == "radius")
        config.sim.radius = static_cast<int>(to_int(value, key));
    else if (key == "max_steps")
        config.sim.max_steps = to_int(value, key);
    else if (key == "stop_margin")
        config.sim.stop_margin = static_cast<int>(to_int(value, key));
    else if (key == "preset") {
        const auto preset = find_preset(value);
        if (!preset) throw std::invalid_argument("unknown preset '" + value + "'");
        config.preset = value;
        config.sim = preset->sim;
    } else if (key == "out_dir")
        config.out_dir = value;
    else if (key == "render_px")
        config.render_px = static_cast<int>(to_int(value, key));
    else if (key == "emit.events")
        config.emit.events = to_bool(value, key);
    else if (key == "emit.latency")
        config.emit.latency = to_bool(value, key);
    else if (key == "emit.directions")
        config.emit.directions = to_bool(value, key);
    else if (key == "emit.tips")
        config.emit.tips = to_bool(value, key);
    else if (key == "emit.envelope")
        config.emit.envelope = to_bool(value, key);
    else if (key == "sweep.alpha")
        config.sweep_alpha = to_list(value, key);
    else if (key == "sweep.beta")
        config.sweep_beta = to_list(value, key);
    else if (key == "sweep.gamma")
        config.sweep_gamma = to_list(value, key);
    else if (key == "sweep.epsilon")
        config.sweep_epsilon = to_list(value, key);
    else
        throw std::invalid_argument("unknown config key '" + key + "'");
}

void apply_config_file(RunConfig& config, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file " + path.string());
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path.string() + ":" + std::to_string(lineno) +
                                        ": expected key=value");
        apply_config_kv(config, line.substr(0, eq), line.substr(eq + 1));
    }
}

}  // namespace snow
