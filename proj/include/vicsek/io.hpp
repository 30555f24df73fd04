#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vicsek/ensemble.hpp"

namespace vicsek {

/// One row per (run, t); header is exactly
/// run,t,d_theta,d_x,components,mean_heading. Doubles are written with 17
/// significant digits and LF line endings, so re-parsing is bit-exact.
void write_metrics_csv(const std::vector<TrajectoryRecord>& trajectories, const std::string& path);

/// Header: t,mean_d_theta,std_d_theta,ci_halfwidth,runs,exceed_tau_count,exceed_a_count
void write_summary_csv(const EnsembleSummary& summary, const std::string& path);

/// Header: delta,plateau,pass
void write_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path);

/// Header: t,phase,d_theta,d_x,components,mean_heading
void write_control_log_csv(const TrajectoryRecord& trajectory, const std::string& path);

/// Standalone SVG: one mean-d_theta polyline per delta with its CI band,
/// axes labeled t and mean d_theta, legend entries "delta=<value>".
void render_plot(const std::vector<std::pair<double, EnsembleSummary>>& summaries,
                 const std::string& path);

} // namespace vicsek
