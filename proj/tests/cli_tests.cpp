// End-to-end checks of the snowsim binary: exit codes, emitted files, and
// byte-level determinism. Takes the binary path as argv[1].

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int failures = 0;

void record(const std::string& name, bool ok, const std::string& info = "") {
    std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), info.empty() ? "" : " ",
                info.c_str());
    if (!ok) ++failures;
}

std::string binary;
fs::path work;

int run_cli(const std::string& args) {
    const std::string cmd = binary + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return "<missing:" + path.string() + ">";
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t line_count(const fs::path& path) {
    const std::string body = slurp(path);
    return static_cast<std::size_t>(std::count(body.begin(), body.end(), '\n'));
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: cli_tests <snowsim-binary>\n";
        return 2;
    }
    binary = argv[1];
    work = fs::temp_directory_path() / "snowsim_cli_tests";
    fs::remove_all(work);
    fs::create_directories(work);

    record("help exits 0", run_cli("--help") == 0);
    record("no command exits 1", run_cli("") == 1);
    record("unknown command exits 1", run_cli("frobnicate") == 1);
    record("unknown flag exits 1", run_cli("simulate --bogus 1") == 1);
    record("bad parameter value exits 1", run_cli("simulate --alpha -1") == 1);
    record("missing trace exits 2", run_cli("analyze " + (work / "nope.txt").string()) == 2);

    const std::string common = "--radius 16 --beta 0.42 --gamma 0.01 --max_steps 4000";
    const fs::path out_a = work / "a";
    const fs::path out_b = work / "b";
    record("simulate exits 0",
           run_cli("simulate " + common + " --out_dir " + out_a.string()) == 0);
    record("simulate twice exits 0",
           run_cli("simulate " + common + " --out_dir " + out_b.string()) == 0);

    for (const char* name :
         {"state.txt", "trace.txt", "events.csv", "latency.csv", "directions.csv", "tips.csv"})
        record(std::string("simulate wrote ") + name, fs::exists(out_a / name));

    bool identical = true;
    for (const char* name :
         {"state.txt", "trace.txt", "events.csv", "latency.csv", "directions.csv", "tips.csv"})
        identical = identical && slurp(out_a / name) == slurp(out_b / name);
    record("identical configs give byte-identical outputs", identical);

    const fs::path out_c = work / "c";
    record("analyze exits 0", run_cli("analyze " + (out_a / "trace.txt").string() +
                                      " --out_dir " + out_c.string()) == 0);
    bool roundtrip = true;
    for (const char* name : {"events.csv", "latency.csv", "directions.csv", "tips.csv"})
        roundtrip = roundtrip && slurp(out_a / name) == slurp(out_c / name);
    record("analyze reproduces the simulate tables", roundtrip);

    const fs::path out_r = work / "r";
    record("render exits 0", run_cli("render " + (out_a / "state.txt").string() +
                                     " --render_px 96 --out_dir " + out_r.string()) == 0);
    const std::string pgm = slurp(out_r / "render.pgm");
    record("render wrote a P5 header", pgm.rfind("P5\n96 96\n255\n", 0) == 0);
    record("render size matches the header",
           pgm.size() == std::string("P5\n96 96\n255\n").size() + 96 * 96);

    const fs::path out_1d = work / "line";
    record("simulate-1d exits 0",
           run_cli("simulate-1d --radius 50 --out_dir " + out_1d.string()) == 0);
    record("line table has one row per interior cell",
           line_count(out_1d / "line_compare.csv") == 50);  // header + 49 rows

    const fs::path out_s = work / "sweep";
    record("sweep exits 0",
           run_cli("sweep --radius 12 --gamma 0.01 --sweep.beta 0.35,0.45 --out_dir " +
                   out_s.string()) == 0);
    record("sweep summary has one row per grid point",
           line_count(out_s / "sweep.csv") == 3);  // header + 2
    record("sweep run directories exist",
           fs::exists(out_s / "run000" / "trace.txt") &&
               fs::exists(out_s / "run001" / "trace.txt"));
    record("sweep without lists exits 1", run_cli("sweep --radius 12") == 1);

    const fs::path cfg = work / "run.cfg";
    {
        std::ofstream file(cfg);
        file << "radius=14\nbeta=0.42\ngamma=0.01\nout_dir=" << (work / "cfg_out").string()
             << "\n";
    }
    record("config file drives simulate", run_cli("simulate --config " + cfg.string()) == 0 &&
                                              fs::exists(work / "cfg_out" / "events.csv"));
    // the flag wins over the file
    record("flags override config values",
           run_cli("simulate --config " + cfg.string() + " --out_dir " +
                   (work / "cfg_out2").string()) == 0 &&
               fs::exists(work / "cfg_out2" / "events.csv"));

    std::printf("%s: %d failure(s)\n", failures == 0 ? "OK" : "FAILED", failures);
    return failures == 0 ? 0 : 1;
}
