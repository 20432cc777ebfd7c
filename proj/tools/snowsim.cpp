// snowsim: hexagonal snow-crystal growth simulator and analysis CLI.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "snow/analysis.hpp"
#include "snow/automaton.hpp"
#include "snow/config.hpp"
#include "snow/io.hpp"
#include "snow/line_model.hpp"
#include "snow/raster.hpp"

namespace fs = std::filesystem;
using namespace snow;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void print_help() {
    std::cout <<
        R"(snowsim - hexagonal snow-crystal growth simulator

usage: snowsim <command> [--key value ...]

commands:
  simulate            run the 2D automaton; writes state.txt, trace.txt and
                      the analysis tables selected by the emit.* flags
  simulate-1d         run the 1D line model; writes line_compare.csv
                      (the line length is taken from --radius)
  analyze TRACE       recompute the analysis tables from a saved trace
  render STATE        rasterize a saved state to render.pgm
  sweep               run a parameter grid in parallel; writes sweep.csv
                      plus one run directory per grid point

options (every option is also a config-file key; --config FILE loads flat
key=value text, and command-line flags override it):
  --alpha X           diffusion coefficient (> 0)
  --beta X            background vapour level (0 < beta < 1)
  --gamma X           vapour added per step to receptive cells (>= 0)
  --epsilon X         shell redistribution strength (0 = plain model)
  --radius N          grid radius in cells (>= 2)
  --max_steps N       step budget
  --stop_margin N     stop this many cells short of the edge (>= 1)
  --preset NAME       fig5 | fig7 | fig11a | fig11b; replaces the simulation
                      parameters, later flags refine them
  --out_dir DIR       output directory (default: out)
  --render_px N       image side length in pixels (>= 64)
  --emit.events B     write events.csv            (default: true)
  --emit.latency B    write latency.csv           (default: true)
  --emit.directions B write directions.csv        (default: true)
  --emit.tips B       write tips.csv              (default: true)
  --emit.envelope B   write envelope.csv          (default: true)
  --sweep.alpha LIST  comma-separated values for the sweep grid
  --sweep.beta LIST, --sweep.gamma LIST, --sweep.epsilon LIST

exit status: 0 success, 1 usage error, 2 runtime failure
)";
}

struct CommandLine {
    std::string command;
    std::vector<std::string> positionals;
    std::vector<std::pair<std::string, std::string>> assignments;
    std::string config_path;
    bool help = false;
};

CommandLine parse_argv(int argc, char** argv) {
    CommandLine cli;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--help" || arg == "-h" || arg == "help") {
            cli.help = true;
            return cli;
        }
        if (arg.rfind("--", 0) == 0) {
            std::string key = arg.substr(2);
            std::string value;
            const std::size_t eq = key.find('=');
            if (eq != std::string::npos) {
                value = key.substr(eq + 1);
                key = key.substr(0, eq);
            } else {
                if (i + 1 >= argc) throw UsageError("missing value for --" + key);
                value = argv[++i];
            }
            if (key == "config")
                cli.config_path = value;
            else
                cli.assignments.emplace_back(key, value);
        } else if (cli.command.empty()) {
            cli.command = arg;
        } else {
            cli.positionals.push_back(arg);
        }
    }
    if (cli.command.empty()) throw UsageError("no command given");
    return cli;
}

RunConfig resolve_config(const CommandLine& cli) {
    RunConfig cfg;
    try {
        if (!cli.config_path.empty()) apply_config_file(cfg, cli.config_path);
        for (const auto& [key, value] : cli.assignments) apply_config_kv(cfg, key, value);
        validate(cfg.sim);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return cfg;
}

void emit_tables(const SimTrace& trace, const RunConfig& cfg, const fs::path& dir) {
    if (cfg.emit.events) write_events_csv(trace, dir / "events.csv");
    if (cfg.emit.latency) write_latency_csv(trace, dir / "latency.csv");
    if (cfg.emit.directions) write_directions_csv(trace, dir / "directions.csv");
    if (cfg.emit.tips) write_tips_csv(trace, dir / "tips.csv");
    if (cfg.emit.envelope) {
        try {
            const EnvelopeFit fit =
                fit_envelope(side_branch_tips(trace), default_envelope_options(trace));
            write_envelope_csv(fit, dir / "envelope.csv");
        } catch (const std::domain_error& e) {
            std::cerr << "note: envelope not written (" << e.what() << ")\n";
        }
    }
}

const char* stop_reason_name(StopReason reason) {
    return reason == StopReason::MarginReached ? "margin" : "budget";
}

int cmd_simulate(const CommandLine& cli) {
    const RunConfig cfg = resolve_config(cli);
    if (!cli.positionals.empty()) throw UsageError("simulate takes no positional arguments");
    fs::create_directories(cfg.out_dir);

    const SimTrace trace = run(cfg.sim);
    save_state(*trace.final_state, fs::path(cfg.out_dir) / "state.txt");
    save_trace(trace, fs::path(cfg.out_dir) / "trace.txt");
    emit_tables(trace, cfg, cfg.out_dir);

    std::int64_t frozen = 0;
    for (auto t : trace.freeze_time)
        if (t >= 0) ++frozen;
    std::cout << "steps=" << trace.steps << " stop=" << stop_reason_name(trace.stop_reason)
              << " frozen_cells=" << frozen << " fill=" << format_double(fill_factor(trace))
              << "\n";
    return kExitOk;
}

int cmd_simulate_1d(const CommandLine& cli) {
    const RunConfig cfg = resolve_config(cli);
    if (!cli.positionals.empty()) throw UsageError("simulate-1d takes no positional arguments");
    fs::create_directories(cfg.out_dir);

    LineParams lp;
    lp.n = cfg.sim.radius;
    lp.alpha = cfg.sim.alpha;
    lp.beta = cfg.sim.beta;
    lp.gamma = cfg.sim.gamma;
    lp.max_steps = cfg.sim.max_steps;
    try {
        validate(lp);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    const LineTrace trace = simulate_line(lp);
    const auto rows = compare_line_model(trace);

    std::string out = "k,B,T,L,L_hat,ds_hat,ds_first,ds_min,ds_max,L_lt_Lhat,dshat_le_ds\n";
    for (const auto& r : rows) {
        out += std::to_string(r.k) + "," + std::to_string(r.first_boundary) + "," +
               std::to_string(r.freeze_time) + "," + std::to_string(r.latency) + "," +
               format_double(r.predicted_latency) + "," +
               format_double(r.predicted_accumulation) + "," + format_double(r.ds_first) +
               "," + format_double(r.ds_min) + "," + format_double(r.ds_max) + "," +
               (r.latency_below_prediction ? "1" : "0") + "," +
               (r.accumulation_above_prediction ? "1" : "0") + "\n";
    }
    std::ofstream file(fs::path(cfg.out_dir) / "line_compare.csv", std::ios::binary);
    if (!file) throw std::runtime_error("cannot write line_compare.csv");
    file << out;

    std::cout << "cells_frozen=" << trace.frozen_count() << "/" << lp.n
              << " steps=" << trace.steps << (trace.completed ? " (completed)" : " (budget)")
              << "\n";
    return kExitOk;
}

int cmd_analyze(const CommandLine& cli) {
    const RunConfig cfg = resolve_config(cli);
    if (cli.positionals.size() != 1) throw UsageError("analyze needs exactly one trace file");
    const SimTrace trace = load_trace(cli.positionals[0]);
    fs::create_directories(cfg.out_dir);
    emit_tables(trace, cfg, cfg.out_dir);
    std::cout << "analyzed " << cli.positionals[0] << " into " << cfg.out_dir << "\n";
    return kExitOk;
}

int cmd_render(const CommandLine& cli) {
    const RunConfig cfg = resolve_config(cli);
    if (cli.positionals.size() != 1) throw UsageError("render needs exactly one state file");
    const GridState state = load_state(cli.positionals[0]);
    fs::create_directories(cfg.out_dir);
    const GrayImage img = render_raster(state, cfg.render_px);
    write_pgm(img, fs::path(cfg.out_dir) / "render.pgm");
    std::cout << "wrote " << (fs::path(cfg.out_dir) / "render.pgm").string() << " ("
              << img.width << "x" << img.height << ")\n";
    return kExitOk;
}

int cmd_sweep(const CommandLine& cli) {
    const RunConfig cfg = resolve_config(cli);
    if (!cli.positionals.empty()) throw UsageError("sweep takes no positional arguments");
    if (cfg.sweep_alpha.empty() && cfg.sweep_beta.empty() && cfg.sweep_gamma.empty() &&
        cfg.sweep_epsilon.empty())
        throw UsageError("sweep needs at least one non-empty sweep.* list");

    const auto axis = [](const std::vector<double>& list, double fallback) {
        return list.empty() ? std::vector<double>{fallback} : list;
    };
    const auto alphas = axis(cfg.sweep_alpha, cfg.sim.alpha);
    const auto betas = axis(cfg.sweep_beta, cfg.sim.beta);
    const auto gammas = axis(cfg.sweep_gamma, cfg.sim.gamma);
    const auto epsilons = axis(cfg.sweep_epsilon, cfg.sim.epsilon);

    std::vector<SimParams> grid;
    for (double a : alphas)
        for (double b : betas)
            for (double g : gammas)
                for (double e : epsilons) {
                    SimParams p = cfg.sim;
                    p.alpha = a;
                    p.beta = b;
                    p.gamma = g;
                    p.epsilon = e;
                    try {
                        validate(p);
                    } catch (const std::invalid_argument& err) {
                        throw UsageError(err.what());
                    }
                    grid.push_back(p);
                }

    fs::create_directories(cfg.out_dir);
    struct Result {
        SimParams params;
        std::int64_t steps = 0;
        StopReason reason = StopReason::BudgetExhausted;
        std::int64_t frozen = 0;
        double fill = 0.0;
    };
    std::vector<Result> results(grid.size());

    std::atomic<std::size_t> next{0};
    const unsigned workers =
        std::min({std::max(1u, std::thread::hardware_concurrency()),
                  static_cast<unsigned>(grid.size()), 8u});
    const auto work = [&]() {
        while (true) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= grid.size()) return;
            const SimTrace trace = run(grid[idx]);
            char name[32];
            std::snprintf(name, sizeof(name), "run%03zu", idx);
            const fs::path dir = fs::path(cfg.out_dir) / name;
            fs::create_directories(dir);
            save_state(*trace.final_state, dir / "state.txt");
            save_trace(trace, dir / "trace.txt");
            write_events_csv(trace, dir / "events.csv");
            Result& r = results[idx];
            r.params = grid[idx];
            r.steps = trace.steps;
            r.reason = trace.stop_reason;
            for (auto t : trace.freeze_time)
                if (t >= 0) ++r.frozen;
            r.fill = fill_factor(trace);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();

    std::string out = "run,alpha,beta,gamma,epsilon,radius,steps,stop,frozen_cells,fill\n";
    for (std::size_t idx = 0; idx < results.size(); ++idx) {
        const Result& r = results[idx];
        char name[32];
        std::snprintf(name, sizeof(name), "run%03zu", idx);
        out += std::string(name) + "," + format_double(r.params.alpha) + "," +
               format_double(r.params.beta) + "," + format_double(r.params.gamma) + "," +
               format_double(r.params.epsilon) + "," + std::to_string(r.params.radius) + "," +
               std::to_string(r.steps) + "," + stop_reason_name(r.reason) + "," +
               std::to_string(r.frozen) + "," + format_double(r.fill) + "\n";
    }
    std::ofstream file(fs::path(cfg.out_dir) / "sweep.csv", std::ios::binary);
    if (!file) throw std::runtime_error("cannot write sweep.csv");
    file << out;
    std::cout << "sweep: " << grid.size() << " runs into " << cfg.out_dir << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        const CommandLine cli = parse_argv(argc, argv);
        if (cli.help) {
            print_help();
            return kExitOk;
        }
        if (cli.command == "simulate") return cmd_simulate(cli);
        if (cli.command == "simulate-1d") return cmd_simulate_1d(cli);
        if (cli.command == "analyze") return cmd_analyze(cli);
        if (cli.command == "render") return cmd_render(cli);
        if (cli.command == "sweep") return cmd_sweep(cli);
        throw UsageError("unknown command '" + cli.command + "'");
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n\n";
        print_help();
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}
