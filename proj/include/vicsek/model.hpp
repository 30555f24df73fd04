#pragma once

#include <span>
#include <vector>

#include "vicsek/params.hpp"
#include "vicsek/state.hpp"

namespace vicsek {

/// Piecewise projection of y onto [0, B]. Rejects non-finite y.
double clamp_coord(double y, double B);

/// Per-coordinate clamp of a point onto [0, B]^2.
Vec2 clamp_point(Vec2 p, double B);

/// Squared Euclidean distance; used everywhere so the r-comparison is
/// identical across the naive and grid paths.
inline double dist2(Vec2 a, Vec2 b) {
    double dx = a.x - b.x;
    double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

/// Indices j with ||x_i - x_j|| <= r, sorted ascending. Always contains i.
std::vector<int> neighbor_set(const WorldState& world, int i, double r);

/// One synchronous update: headings averaged over neighborhoods taken from
/// the old positions, noise added after averaging, positions advanced with
/// the new heading and clamped. Pure; the input world is untouched.
/// Dispatches to the cell grid when n >= params.grid_threshold.
WorldState step(const WorldState& world, const SimParams& params, std::span<const double> noise);

/// Serial reference path of step(): naive O(n^2) neighbor scan, no grid,
/// no threading. step() must match it bit for bit.
WorldState step_serial(const WorldState& world, const SimParams& params, std::span<const double> noise);

/// max pairwise |theta_i - theta_j| (= max - min of the raw headings).
double d_theta_metric(const WorldState& world);

/// Diagnostic variant with differences reduced mod 2pi into [-pi, pi].
/// Not used by any estimator.
double d_theta_wrapped(const WorldState& world);

/// max pairwise Euclidean distance.
double d_x_metric(const WorldState& world);

/// Partition of agent indices under the symmetric relation
/// ||x_i - x_j|| <= r, transitively closed. Components are sorted by
/// smallest member; members sorted ascending.
std::vector<std::vector<int>> connected_components(const WorldState& world, double r);

/// Arithmetic mean of all headings.
double mean_heading(const WorldState& world);

MetricsRecord compute_metrics(const WorldState& world, double r);

} // namespace vicsek
