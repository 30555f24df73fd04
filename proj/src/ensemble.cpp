#include "vicsek/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "vicsek/model.hpp"

namespace vicsek {

TrajectoryRecord run_trajectory(const SimParams& params, const Initializer& init,
                                const NoiseSource& source, int run_index) {
    params.validate();
    RngStream rng(params.seed, static_cast<std::uint64_t>(run_index));
    WorldState world = make_initial_state(init, params, rng);

    const bool controlled = std::holds_alternative<ControllerSource>(source);
    TrajectoryRecord traj;
    traj.run_index = run_index;
    traj.records.reserve(params.horizon + 1);
    traj.records.push_back(compute_metrics(world, params.r));

    for (long k = 0; k < params.horizon; ++k) {
        NoiseSample noise;
        if (controlled) {
            const auto& ctl = std::get<ControllerSource>(source);
            ControlStep cs = merge_controller(world, params, ctl.alpha, ctl.epsilon);
            noise = std::move(cs.noise);
            traj.phases.push_back(cs.phase);
        } else {
            noise = sample_noise(params.noise_kind, params.delta, params.n, rng);
        }
        world = step(world, params, noise);
        traj.records.push_back(compute_metrics(world, params.r));
    }
    return traj;
}

namespace {

std::vector<TrajectoryRecord> run_batch(const SimParams& params, const Initializer& init,
                                        const NoiseSource& source, int R) {
    if (R < 1) throw std::invalid_argument("ensemble: run count must be >= 1");
    std::vector<TrajectoryRecord> out(R);
#pragma omp parallel for schedule(dynamic)
    for (int run = 0; run < R; ++run) out[run] = run_trajectory(params, init, source, run);
    return out;
}

} // namespace

EnsembleSummary ensemble_mean(const SimParams& params, const Initializer& init,
                              const NoiseSource& source, int R, double tau, double a) {
    auto trajs = run_batch(params, init, source, R);
    const std::size_t T = trajs[0].records.size();
    EnsembleSummary s;
    s.runs = R;
    s.tau = tau;
    s.a = a;
    s.mean_d_theta.assign(T, 0.0);
    s.std_d_theta.assign(T, 0.0);
    s.ci_halfwidth.assign(T, 0.0);
    s.exceed_tau_count.assign(T, 0);
    s.exceed_a_count.assign(T, 0);

    // Fixed run-index summation order: results do not depend on how the
    // runs were scheduled across threads.
    for (std::size_t t = 0; t < T; ++t) {
        double sum = 0.0;
        for (int run = 0; run < R; ++run) {
            const auto& rec = trajs[run].records[t];
            sum += rec.d_theta;
            if (rec.d_theta > tau) ++s.exceed_tau_count[t];
            if (rec.d_x > a) ++s.exceed_a_count[t];
        }
        const double mean = sum / R;
        s.mean_d_theta[t] = mean;
        if (R > 1) {
            double ss = 0.0;
            for (int run = 0; run < R; ++run) {
                double d = trajs[run].records[t].d_theta - mean;
                ss += d * d;
            }
            s.std_d_theta[t] = std::sqrt(ss / (R - 1));
            s.ci_halfwidth[t] = 1.96 * s.std_d_theta[t] / std::sqrt(static_cast<double>(R));
        } else {
            s.std_d_theta[t] = std::numeric_limits<double>::quiet_NaN();
            s.ci_halfwidth[t] = std::numeric_limits<double>::quiet_NaN();
        }
    }
    return s;
}

double wilson_upper(int k, int n) {
    const double z = 1.959963984540054;
    const double z2 = z * z;
    const double p = static_cast<double>(k) / n;
    const double denom = 1.0 + z2 / n;
    const double center = p + z2 / (2.0 * n);
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    return (center + half) / denom;
}

EscapeEstimate escape_probability(const SimParams& params, const Initializer& init, double a,
                                  int R) {
    if (!(a > 0.0 && a <= params.r))
        throw std::invalid_argument("escape_probability: need 0 < a <= r");
    auto trajs = run_batch(params, init, RandomSource{}, R);
    for (const auto& tr : trajs)
        if (tr.records[0].d_x > a / 3.0)
            throw std::invalid_argument("escape_probability: initial state violates d_x(0) <= a/3");
    const std::size_t T = trajs[0].records.size();
    EscapeEstimate est;
    est.frequency.assign(T, 0.0);
    est.wilson_upper.assign(T, 0.0);
    for (std::size_t t = 0; t < T; ++t) {
        int k = 0;
        for (int run = 0; run < R; ++run)
            if (trajs[run].records[t].d_x > a) ++k;
        est.frequency[t] = static_cast<double>(k) / R;
        est.wilson_upper[t] = wilson_upper(k, R);
    }
    return est;
}

std::vector<double> sup_exceedance(const SimParams& params, const Initializer& init, double tau,
                                   int R) {
    if (!(tau > 0.0)) throw std::invalid_argument("sup_exceedance: tau must be > 0");
    auto trajs = run_batch(params, init, RandomSource{}, R);
    const std::size_t T = trajs[0].records.size();
    std::vector<int> exceeded(T, 0);
    for (int run = 0; run < R; ++run) {
        double running_max = -std::numeric_limits<double>::infinity();
        for (std::size_t t = 0; t < T; ++t) {
            running_max = std::max(running_max, trajs[run].records[t].d_theta);
            if (running_max > tau) ++exceeded[t];
        }
    }
    std::vector<double> out(T);
    for (std::size_t t = 0; t < T; ++t) out[t] = static_cast<double>(exceeded[t]) / R;
    return out;
}

HittingTimeStats hitting_time_stats(const SimParams& params, const Initializer& init,
                                    double epsilon, const NoiseSource& source, int R) {
    if (!(epsilon > 0.0 && epsilon < params.r))
        throw std::invalid_argument("hitting_time_stats: need 0 < epsilon < r");
    auto trajs = run_batch(params, init, source, R);
    HittingTimeStats st;
    st.epsilon = epsilon;
    st.samples.resize(R);
    int finite = 0;
    for (int run = 0; run < R; ++run) {
        st.samples[run] = std::nullopt;
        for (const auto& rec : trajs[run].records) {
            if (rec.d_x < epsilon) {
                st.samples[run] = rec.t;
                ++finite;
                break;
            }
        }
    }
    st.finite_fraction = static_cast<double>(finite) / R;
    st.trajectories = std::move(trajs);
    return st;
}

double plateau_statistic(const std::vector<double>& series) {
    if (series.empty()) throw std::invalid_argument("plateau_statistic: empty series");
    const std::size_t window = std::max<std::size_t>(1, (series.size() + 4) / 5);
    double sum = 0.0;
    for (std::size_t t = series.size() - window; t < series.size(); ++t) sum += series[t];
    return sum / static_cast<double>(window);
}

std::vector<SweepRow> delta_sweep(const SimParams& params, const Initializer& init,
                                  const std::vector<double>& deltas, double tau, int R) {
    if (deltas.empty()) throw std::invalid_argument("delta_sweep: empty delta list");
    std::vector<SweepRow> rows;
    rows.reserve(deltas.size());
    for (double d : deltas) {
        if (!(d >= 0.0)) throw std::invalid_argument("delta_sweep: delta must be >= 0");
        SimParams p = params;
        p.delta = d;
        auto summary = ensemble_mean(p, init, RandomSource{}, R, tau, params.r);
        SweepRow row;
        row.delta = d;
        row.plateau = plateau_statistic(summary.mean_d_theta);
        row.pass = row.plateau < tau;
        rows.push_back(row);
    }
    return rows;
}

} // namespace vicsek
