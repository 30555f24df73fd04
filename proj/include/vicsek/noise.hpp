#pragma once

#include <span>
#include <vector>

#include "vicsek/params.hpp"
#include "vicsek/rng.hpp"
#include "vicsek/state.hpp"

namespace vicsek {

enum class ControllerPhase { AngleContract, BoundaryAlign, TwoGroupMerge, Idle };

const char* to_string(ControllerPhase p);

/// n i.i.d. draws, each in [-delta, delta], consumed in agent-index order.
/// Uniform: U[-delta, delta]. TwoPoint: +-delta with equal probability.
/// TruncatedGaussian: N(0, (delta/3)^2) rejection-sampled to [-delta, delta].
NoiseSample sample_noise(NoiseKind kind, double delta, int n, RngStream& rng);

/// Deterministic schedules realizing the bounded-noise control series.
/// All emitted magnitudes are (alpha + delta)/2, the midpoint of the
/// feasible band (alpha, delta). Returned vectors are parallel to the
/// given index lists.

/// Contract a component's heading spread: +m below the midpoint of the
/// component's min/max heading, -m at or above it.
std::vector<double> angle_control_series(const WorldState& world, std::span<const int> component,
                                         double alpha, double delta);

/// Perimeter split for a component whose members all sit on the boundary.
/// Agents are ranked anticlockwise along the perimeter starting from
/// corner (0,0); ranks 1..floor(w/2) turn anticlockwise (+m), the rest
/// clockwise (-m).
std::vector<double> boundary_control_series(const WorldState& world, std::span<const int> component,
                                            double alpha, double delta, double B);

/// Steer two groups' headings toward the midpoint of their mean headings:
/// +m below the midpoint, -m at or above. Result is ordered as
/// [group_a..., group_b...].
std::vector<double> two_group_control_series(const WorldState& world, std::span<const int> group_a,
                                             std::span<const int> group_b, double alpha, double delta);

struct ControlStep {
    NoiseSample noise;
    ControllerPhase phase = ControllerPhase::Idle;
};

/// Per-component schedule dispatch: angle contraction while a component's
/// spread exceeds 2*delta or some member is interior, the boundary split
/// once all members are on the boundary with tight spread, and two-group
/// steering as soon as two components have diameter < epsilon. All-zero
/// noise (Idle) once d_x(world) < epsilon.
ControlStep merge_controller(const WorldState& world, const SimParams& params, double alpha,
                             double epsilon);

} // namespace vicsek
