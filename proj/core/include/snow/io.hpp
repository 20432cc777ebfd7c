#pragma once

#include <filesystem>
#include <string>

#include "snow/analysis.hpp"
#include "snow/automaton.hpp"

namespace snow {

/// Shortest round-trip decimal form of a double (locale-free).
std::string format_double(double value);

/// One row per frozen cell, sorted by (T, i, j), header
/// i,j,B,T,L,angle_deg,src_i,src_j. The seed has source (-999,-999) and an
/// empty angle field.
void write_events_csv(const SimTrace& trace, const std::filesystem::path& path);

/// Main-branch latencies, header j,L.
void write_latency_csv(const SimTrace& trace, const std::filesystem::path& path);

/// Per side-branch root, header root_j,tip_i,tip_j,E,F,D.
void write_tips_csv(const SimTrace& trace, const std::filesystem::path& path);

/// Growth direction of every cell that became boundary, header i,j,angle_deg.
void write_directions_csv(const SimTrace& trace, const std::filesystem::path& path);

/// Single data row, header slope,intercept,theta_rad,n_support.
void write_envelope_csv(const EnvelopeFit& fit, const std::filesystem::path& path);

/// State file: key=value parameter header, then a cells block
/// (i,j,s,u,v,class,edge). Loads back bit-exactly.
void save_state(const GridState& g, const std::filesystem::path& path);
GridState load_state(const std::filesystem::path& path);

/// Trace file: key=value parameter header, the events CSV block, then a
/// pending block for cells that became boundary without freezing. Enough to
/// redo every analysis without re-simulating (diagnostics and the final
/// state are not kept).
void save_trace(const SimTrace& trace, const std::filesystem::path& path);
SimTrace load_trace(const std::filesystem::path& path);

}  // namespace snow
