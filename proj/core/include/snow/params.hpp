#pragma once

#include <cstdint>

namespace snow {

/// Parameters of a 2D run. epsilon = 0 recovers the plain diffusion model;
/// epsilon > 0 enables the shell redistribution rule.
struct SimParams {
    double alpha = 1.0;      ///< diffusion coefficient, > 0
    double beta = 0.4;       ///< background vapour level, in (0, 1)
    double gamma = 0.001;    ///< vapour added per step to receptive cells, >= 0
    double epsilon = 0.0;    ///< shell redistribution strength, >= 0
    int radius = 100;        ///< grid radius R in cells, >= 2
    std::int64_t max_steps = 1'000'000;
    int stop_margin = 5;     ///< stop when the crystal is this close to the edge, >= 1

    friend bool operator==(const SimParams&, const SimParams&) = default;
};

/// Throws std::invalid_argument naming the offending field.
void validate(const SimParams& params);

}  // namespace snow
