#include "snow/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace snow {

namespace {

constexpr int kSourceSentinel = -999;

std::string csv_int(std::int64_t v) { return std::to_string(v); }

void append_line(std::string& out, const std::string& line) {
    out += line;
    out += '\n';
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

std::int64_t parse_int(const std::string& text, const char* what) {
    std::int64_t v = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw std::runtime_error(std::string("bad integer for ") + what + ": '" + text + "'");
    return v;
}

double parse_double(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(std::string("bad number for ") + what + ": '" + text + "'");
    }
}

void write_text(const std::filesystem::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

std::string params_header(const SimParams& p) {
    std::string out;
    append_line(out, "alpha=" + format_double(p.alpha));
    append_line(out, "beta=" + format_double(p.beta));
    append_line(out, "gamma=" + format_double(p.gamma));
    append_line(out, "epsilon=" + format_double(p.epsilon));
    append_line(out, "radius=" + std::to_string(p.radius));
    append_line(out, "max_steps=" + std::to_string(p.max_steps));
    append_line(out, "stop_margin=" + std::to_string(p.stop_margin));
    return out;
}

void apply_param_kv(SimParams& p, const std::string& key, const std::string& value) {
    if (key == "alpha")
        p.alpha = parse_double(value, "alpha");
    else if (key == "beta")
        p.beta = parse_double(value, "beta");
    else if (key == "gamma")
        p.gamma = parse_double(value, "gamma");
    else if (key == "epsilon")
        p.epsilon = parse_double(value, "epsilon");
    else if (key == "radius")
        p.radius = static_cast<int>(parse_int(value, "radius"));
    else if (key == "max_steps")
        p.max_steps = parse_int(value, "max_steps");
    else if (key == "stop_margin")
        p.stop_margin = static_cast<int>(parse_int(value, "stop_margin"));
    else
        throw std::runtime_error("unknown parameter key '" + key + "'");
}

std::string events_csv_string(const SimTrace& trace) {
    struct Row {
        std::int64_t t;
        AxialCoord cell;
        std::size_t idx;
    };
    std::vector<Row> rows;
    for (std::size_t i = 0; i < trace.freeze_time.size(); ++i)
        if (trace.freeze_time[i] >= 0)
            rows.push_back({trace.freeze_time[i], trace.geo->coord_of(static_cast<int>(i)), i});
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.t != b.t) return a.t < b.t;
        if (a.cell.i != b.cell.i) return a.cell.i < b.cell.i;
        return a.cell.j < b.cell.j;
    });

    std::string out;
    append_line(out, "i,j,B,T,L,angle_deg,src_i,src_j");
    for (const Row& r : rows) {
        const std::int64_t b = trace.first_boundary[r.idx];
        const std::int32_t src = trace.source[r.idx];
        std::string line = csv_int(r.cell.i) + "," + csv_int(r.cell.j) + "," + csv_int(b) +
                           "," + csv_int(r.t) + "," + csv_int(r.t - b) + ",";
        if (trace.angle[r.idx] >= 0)
            line += csv_int(angle_degrees(static_cast<DirectionAngle>(trace.angle[r.idx])));
        if (src >= 0) {
            const AxialCoord sc = trace.geo->coord_of(src);
            line += "," + csv_int(sc.i) + "," + csv_int(sc.j);
        } else {
            line += "," + csv_int(kSourceSentinel) + "," + csv_int(kSourceSentinel);
        }
        append_line(out, line);
    }
    return out;
}

std::string pending_csv_string(const SimTrace& trace) {
    struct Row {
        std::int64_t b;
        AxialCoord cell;
        std::size_t idx;
    };
    std::vector<Row> rows;
    for (std::size_t i = 0; i < trace.first_boundary.size(); ++i)
        if (trace.first_boundary[i] >= 0 && trace.freeze_time[i] < 0)
            rows.push_back(
                {trace.first_boundary[i], trace.geo->coord_of(static_cast<int>(i)), i});
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.b != b.b) return a.b < b.b;
        if (a.cell.i != b.cell.i) return a.cell.i < b.cell.i;
        return a.cell.j < b.cell.j;
    });

    std::string out;
    append_line(out, "i,j,B,angle_deg,src_i,src_j");
    for (const Row& r : rows) {
        std::string line = csv_int(r.cell.i) + "," + csv_int(r.cell.j) + "," + csv_int(r.b) + ",";
        if (trace.angle[r.idx] >= 0)
            line += csv_int(angle_degrees(static_cast<DirectionAngle>(trace.angle[r.idx])));
        const std::int32_t src = trace.source[r.idx];
        if (src >= 0) {
            const AxialCoord sc = trace.geo->coord_of(src);
            line += "," + csv_int(sc.i) + "," + csv_int(sc.j);
        } else {
            line += "," + csv_int(kSourceSentinel) + "," + csv_int(kSourceSentinel);
        }
        append_line(out, line);
    }
    return out;
}

std::int8_t angle_from_degrees(std::int64_t deg) {
    for (std::size_t k = 0; k < 6; ++k)
        if (angle_degrees(static_cast<DirectionAngle>(k)) == deg)
            return static_cast<std::int8_t>(k);
    throw std::runtime_error("bad angle value " + std::to_string(deg));
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

void write_events_csv(const SimTrace& trace, const std::filesystem::path& path) {
    write_text(path, events_csv_string(trace));
}

void write_latency_csv(const SimTrace& trace, const std::filesystem::path& path) {
    const MainBranchSeries series = main_branch_latency_series(trace);
    std::string out;
    append_line(out, "j,L");
    for (const auto& [j, latency] : series.latencies)
        append_line(out, std::to_string(j) + "," + csv_int(latency));
    write_text(path, out);
}

void write_tips_csv(const SimTrace& trace, const std::filesystem::path& path) {
    std::string out;
    append_line(out, "root_j,tip_i,tip_j,E,F,D");
    int j = 1;
    while (trace.frozen({0, j})) {
        const SideBranch branch = side_branch(trace, {0, j});
        const StraightPath path_ = straight_path(trace, {0, j});
        const BranchCluster cluster = side_branch_cluster(trace, {0, j});
        append_line(out, std::to_string(j) + "," + std::to_string(branch.tip.i) + "," +
                             std::to_string(branch.tip.j) + "," + std::to_string(branch.length) +
                             "," + std::to_string(path_.length) + "," +
                             std::to_string(cluster.reach));
        ++j;
    }
    write_text(path, out);
}

void write_directions_csv(const SimTrace& trace, const std::filesystem::path& path) {
    std::string out;
    append_line(out, "i,j,angle_deg");
    for (const auto& [cell, angle] : direction_trace(trace))
        append_line(out, std::to_string(cell.i) + "," + std::to_string(cell.j) + "," +
                             std::to_string(angle_degrees(angle)));
    write_text(path, out);
}

void write_envelope_csv(const EnvelopeFit& fit, const std::filesystem::path& path) {
    std::string out;
    append_line(out, "slope,intercept,theta_rad,n_support");
    append_line(out, format_double(fit.slope) + "," + format_double(fit.intercept) + "," +
                         format_double(fit.theta) + "," + std::to_string(fit.support.size()));
    write_text(path, out);
}

void save_state(const GridState& g, const std::filesystem::path& path) {
    std::string out;
    append_line(out, "format=snowsim-state-v1");
    out += params_header(g.params);
    append_line(out, "t=" + std::to_string(g.t));
    append_line(out, "cells:");
    append_line(out, "i,j,s,u,v,class,edge");
    const int n = g.geo->cell_count();
    for (int idx = 0; idx < n; ++idx) {
        const AxialCoord c = g.geo->coord_of(idx);
        const auto k = static_cast<std::size_t>(idx);
        const char cls = g.cls[k] == CellClass::Frozen     ? 'F'
                         : g.cls[k] == CellClass::Boundary ? 'B'
                                                           : 'N';
        append_line(out, std::to_string(c.i) + "," + std::to_string(c.j) + "," +
                             format_double(g.s[k]) + "," + format_double(g.u[k]) + "," +
                             format_double(g.v[k]) + "," + cls + "," +
                             (g.geo->is_edge(idx) ? "1" : "0"));
    }
    write_text(path, out);
}

GridState load_state(const std::filesystem::path& path) {
    const std::vector<std::string> lines = read_lines(path);
    std::size_t row = 0;
    if (row >= lines.size() || lines[row] != "format=snowsim-state-v1")
        throw std::runtime_error(path.string() + ": not a snowsim state file");
    ++row;

    SimParams params;
    std::int64_t t = 0;
    while (row < lines.size() && lines[row] != "cells:") {
        const std::size_t eq = lines[row].find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path.string() + ": bad header line '" + lines[row] + "'");
        const std::string key = lines[row].substr(0, eq);
        const std::string value = lines[row].substr(eq + 1);
        if (key == "t")
            t = parse_int(value, "t");
        else
            apply_param_kv(params, key, value);
        ++row;
    }
    if (row >= lines.size()) throw std::runtime_error(path.string() + ": missing cells block");
    ++row;  // cells:
    ++row;  // column header

    GridState g;
    g.geo = std::make_shared<HexIndex>(params.radius);
    g.params = params;
    g.t = t;
    const std::size_t n = static_cast<std::size_t>(g.geo->cell_count());
    g.s.assign(n, 0.0);
    g.u.assign(n, 0.0);
    g.v.assign(n, 0.0);
    g.cls.assign(n, CellClass::NonReceptive);

    std::size_t seen = 0;
    for (; row < lines.size(); ++row) {
        if (lines[row].empty()) continue;
        const auto f = split(lines[row], ',');
        if (f.size() != 7)
            throw std::runtime_error(path.string() + ": bad cell row '" + lines[row] + "'");
        const AxialCoord c{static_cast<int>(parse_int(f[0], "i")),
                           static_cast<int>(parse_int(f[1], "j"))};
        const int idx = g.geo->index_of(c);
        if (idx < 0) throw std::runtime_error(path.string() + ": cell outside grid");
        const auto k = static_cast<std::size_t>(idx);
        g.s[k] = parse_double(f[2], "s");
        g.u[k] = parse_double(f[3], "u");
        g.v[k] = parse_double(f[4], "v");
        if (f[5] == "F")
            g.cls[k] = CellClass::Frozen;
        else if (f[5] == "B")
            g.cls[k] = CellClass::Boundary;
        else if (f[5] == "N")
            g.cls[k] = CellClass::NonReceptive;
        else
            throw std::runtime_error(path.string() + ": bad class '" + f[5] + "'");
        ++seen;
    }
    if (seen != n)
        throw std::runtime_error(path.string() + ": expected " + std::to_string(n) +
                                 " cells, found " + std::to_string(seen));
    return g;
}

void save_trace(const SimTrace& trace, const std::filesystem::path& path) {
    std::string out;
    append_line(out, "format=snowsim-trace-v1");
    out += params_header(trace.params);
    append_line(out, "steps=" + std::to_string(trace.steps));
    append_line(out, std::string("stop_reason=") +
                         (trace.stop_reason == StopReason::MarginReached ? "margin" : "budget"));
    append_line(out, "events:");
    out += events_csv_string(trace);
    append_line(out, "pending:");
    out += pending_csv_string(trace);
    write_text(path, out);
}

SimTrace load_trace(const std::filesystem::path& path) {
    const std::vector<std::string> lines = read_lines(path);
    std::size_t row = 0;
    if (row >= lines.size() || lines[row] != "format=snowsim-trace-v1")
        throw std::runtime_error(path.string() + ": not a snowsim trace file");
    ++row;

    SimParams params;
    std::int64_t steps = 0;
    StopReason reason = StopReason::BudgetExhausted;
    while (row < lines.size() && lines[row] != "events:") {
        const std::size_t eq = lines[row].find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path.string() + ": bad header line '" + lines[row] + "'");
        const std::string key = lines[row].substr(0, eq);
        const std::string value = lines[row].substr(eq + 1);
        if (key == "steps")
            steps = parse_int(value, "steps");
        else if (key == "stop_reason")
            reason = value == "margin" ? StopReason::MarginReached : StopReason::BudgetExhausted;
        else
            apply_param_kv(params, key, value);
        ++row;
    }
    if (row >= lines.size()) throw std::runtime_error(path.string() + ": missing events block");
    ++row;  // events:
    ++row;  // column header

    SimTrace tr = SimTrace::empty(std::make_shared<HexIndex>(params.radius), params);
    tr.steps = steps;
    tr.stop_reason = reason;

    auto fill_common = [&](const std::vector<std::string>& f, std::size_t idx,
                           std::size_t angle_col) {
        if (!f[angle_col].empty())
            tr.angle[idx] = angle_from_degrees(parse_int(f[angle_col], "angle_deg"));
        const int si = static_cast<int>(parse_int(f[angle_col + 1], "src_i"));
        const int sj = static_cast<int>(parse_int(f[angle_col + 2], "src_j"));
        if (si != kSourceSentinel || sj != kSourceSentinel) {
            const int src = tr.geo->index_of({si, sj});
            if (src < 0) throw std::runtime_error(path.string() + ": source outside grid");
            tr.source[idx] = static_cast<std::int32_t>(src);
        }
    };

    for (; row < lines.size() && lines[row] != "pending:"; ++row) {
        if (lines[row].empty()) continue;
        const auto f = split(lines[row], ',');
        if (f.size() != 8)
            throw std::runtime_error(path.string() + ": bad event row '" + lines[row] + "'");
        const int idx = tr.geo->index_of({static_cast<int>(parse_int(f[0], "i")),
                                          static_cast<int>(parse_int(f[1], "j"))});
        if (idx < 0) throw std::runtime_error(path.string() + ": event cell outside grid");
        const auto k = static_cast<std::size_t>(idx);
        tr.first_boundary[k] = parse_int(f[2], "B");
        tr.freeze_time[k] = parse_int(f[3], "T");
        fill_common(f, k, 5);
    }
    if (row < lines.size() && lines[row] == "pending:") {
        ++row;  // pending:
        ++row;  // column header
        for (; row < lines.size(); ++row) {
            if (lines[row].empty()) continue;
            const auto f = split(lines[row], ',');
            if (f.size() != 6)
                throw std::runtime_error(path.string() + ": bad pending row '" + lines[row] + "'");
            const int idx = tr.geo->index_of({static_cast<int>(parse_int(f[0], "i")),
                                              static_cast<int>(parse_int(f[1], "j"))});
            if (idx < 0) throw std::runtime_error(path.string() + ": pending cell outside grid");
            const auto k = static_cast<std::size_t>(idx);
            tr.first_boundary[k] = parse_int(f[2], "B");
            fill_common(f, k, 3);
        }
    }
    return tr;
}

}  // namespace snow
