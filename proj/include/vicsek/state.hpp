#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace vicsek {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

/// State of all agents at one time step. Stored as parallel arrays; index i
/// is the agent identity.
struct WorldState {
    long t = 0;
    std::vector<double> theta; // headings, radians, unwrapped
    std::vector<Vec2> pos;     // positions, each coordinate in [0, B]

    [[nodiscard]] int size() const { return static_cast<int>(theta.size()); }
};

/// One per-agent noise draw for a single step; entries bounded by delta.
using NoiseSample = std::vector<double>;

struct MetricsRecord {
    long t = 0;
    double d_theta = 0.0;   // max pairwise |theta_i - theta_j|
    double d_x = 0.0;       // max pairwise Euclidean distance
    int components = 1;     // connected components of the r-graph
    double mean_heading = 0.0;
};

} // namespace vicsek
