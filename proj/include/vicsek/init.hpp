#pragma once

#include <variant>
#include <vector>

#include "vicsek/params.hpp"
#include "vicsek/rng.hpp"
#include "vicsek/state.hpp"

namespace vicsek {

/// Headings uniform on [angle_lo, angle_hi), positions uniform on [0, B]^2.
struct UniformInit {
    double angle_lo;
    double angle_hi;
};

/// Exact initial state.
struct ExplicitInit {
    std::vector<double> thetas;
    std::vector<Vec2> positions;
};

/// Two coincident clusters gap apart, centered on the domain midline;
/// the first ceil(n/2) agents form the left cluster. Headings uniform on
/// [angle_lo, angle_hi).
struct TwoClustersInit {
    double gap;
    double angle_lo;
    double angle_hi;
};

using Initializer = std::variant<UniformInit, ExplicitInit, TwoClustersInit>;

/// Draw order: all headings in agent-index order, then all positions (x
/// before y per agent).
WorldState make_initial_state(const Initializer& init, const SimParams& params, RngStream& rng);

} // namespace vicsek
