#pragma once

#include <optional>
#include <vector>

#include "vicsek/init.hpp"
#include "vicsek/noise.hpp"
#include "vicsek/params.hpp"
#include "vicsek/state.hpp"

namespace vicsek {

/// Where each step's noise comes from.
struct RandomSource {};
struct ControllerSource {
    double alpha;
    double epsilon;
};
using NoiseSource = std::variant<RandomSource, ControllerSource>;

struct TrajectoryRecord {
    int run_index = 0;
    std::vector<MetricsRecord> records; // one per step 0..horizon
    std::vector<ControllerPhase> phases; // per step, controller runs only
};

struct EnsembleSummary {
    int runs = 0;
    double tau = 0.0;
    double a = 0.0;
    std::vector<double> mean_d_theta;  // per step
    std::vector<double> std_d_theta;   // sample std; NaN when runs == 1
    std::vector<double> ci_halfwidth;  // 1.96 * std / sqrt(runs); NaN when runs == 1
    std::vector<int> exceed_tau_count; // runs with d_theta(t) > tau
    std::vector<int> exceed_a_count;   // runs with d_x(t) > a
};

struct HittingTimeStats {
    double epsilon = 0.0;
    std::vector<std::optional<long>> samples; // nullopt = censored at horizon
    double finite_fraction = 0.0;
    std::vector<TrajectoryRecord> trajectories; // phase logs for inspection
};

struct EscapeEstimate {
    std::vector<double> frequency;    // per step, fraction of runs with d_x(t) > a
    std::vector<double> wilson_upper; // 95% Wilson upper bound
};

struct SweepRow {
    double delta = 0.0;
    double plateau = 0.0; // trailing-window average of mean d_theta
    bool pass = false;    // plateau < tau
};

/// One deterministic trajectory: the run's RngStream is (params.seed,
/// run_index), consumed first by the initializer, then by the noise draws.
TrajectoryRecord run_trajectory(const SimParams& params, const Initializer& init,
                                const NoiseSource& source, int run_index);

/// R independent runs (run_index 0..R-1), executed in parallel; aggregation
/// happens after the join in fixed run-index order, so results are
/// independent of thread count.
EnsembleSummary ensemble_mean(const SimParams& params, const Initializer& init,
                              const NoiseSource& source, int R, double tau = 0.0, double a = 0.0);

/// Per-step fraction of runs with d_x(t) > a, plus the 95% Wilson upper
/// bound. Every run's initial state must satisfy d_x(0) <= a/3.
EscapeEstimate escape_probability(const SimParams& params, const Initializer& init, double a, int R);

/// Estimated P{max_{t<=T} d_theta(t) > tau} for T = 0..horizon. Nondecreasing
/// in T by the running-max construction.
std::vector<double> sup_exceedance(const SimParams& params, const Initializer& init, double tau,
                                   int R);

/// First time d_x(t) < epsilon per run, censored at the horizon.
HittingTimeStats hitting_time_stats(const SimParams& params, const Initializer& init, double epsilon,
                                    const NoiseSource& source, int R);

/// For each delta: ensemble mean, trailing-window plateau, pass/fail vs tau.
std::vector<SweepRow> delta_sweep(const SimParams& params, const Initializer& init,
                                  const std::vector<double>& deltas, double tau, int R);

/// Trailing-window average (last 20% of the records) of a per-step series.
double plateau_statistic(const std::vector<double>& series);

/// 95% Wilson score upper bound for k successes out of n.
double wilson_upper(int k, int n);

} // namespace vicsek
