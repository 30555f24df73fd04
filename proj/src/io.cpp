#include "vicsek/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vicsek {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary); // binary keeps LF endings everywhere
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

void finish(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace

void write_metrics_csv(const std::vector<TrajectoryRecord>& trajectories, const std::string& path) {
    if (trajectories.empty()) throw std::invalid_argument("write_metrics_csv: empty trajectory list");
    auto out = open_out(path);
    out << "run,t,d_theta,d_x,components,mean_heading\n";
    for (const auto& tr : trajectories)
        for (const auto& rec : tr.records)
            out << tr.run_index << ',' << rec.t << ',' << fmt(rec.d_theta) << ',' << fmt(rec.d_x)
                << ',' << rec.components << ',' << fmt(rec.mean_heading) << '\n';
    finish(out, path);
}

void write_summary_csv(const EnsembleSummary& summary, const std::string& path) {
    auto out = open_out(path);
    out << "t,mean_d_theta,std_d_theta,ci_halfwidth,runs,exceed_tau_count,exceed_a_count\n";
    for (std::size_t t = 0; t < summary.mean_d_theta.size(); ++t)
        out << t << ',' << fmt(summary.mean_d_theta[t]) << ',' << fmt(summary.std_d_theta[t]) << ','
            << fmt(summary.ci_halfwidth[t]) << ',' << summary.runs << ','
            << summary.exceed_tau_count[t] << ',' << summary.exceed_a_count[t] << '\n';
    finish(out, path);
}

void write_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path) {
    auto out = open_out(path);
    out << "delta,plateau,pass\n";
    for (const auto& row : rows)
        out << fmt(row.delta) << ',' << fmt(row.plateau) << ',' << (row.pass ? 1 : 0) << '\n';
    finish(out, path);
}

void write_control_log_csv(const TrajectoryRecord& trajectory, const std::string& path) {
    auto out = open_out(path);
    out << "t,phase,d_theta,d_x,components,mean_heading\n";
    for (std::size_t k = 0; k < trajectory.records.size(); ++k) {
        const auto& rec = trajectory.records[k];
        // phases[k] produced the transition from step k to k+1; the final
        // record has no outgoing phase
        const char* phase = k < trajectory.phases.size() ? to_string(trajectory.phases[k]) : "end";
        out << rec.t << ',' << phase << ',' << fmt(rec.d_theta) << ',' << fmt(rec.d_x) << ','
            << rec.components << ',' << fmt(rec.mean_heading) << '\n';
    }
    finish(out, path);
}

namespace {

struct PlotScale {
    double x0, x1, y0, y1; // data range
    double px0 = 70, px1 = 740, py0 = 440, py1 = 40; // pixel range (y inverted)
    double sx(double x) const { return px0 + (x - x0) / (x1 - x0) * (px1 - px0); }
    double sy(double y) const { return py0 + (y - y0) / (y1 - y0) * (py1 - py0); }
};

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

} // namespace

void render_plot(const std::vector<std::pair<double, EnsembleSummary>>& summaries,
                 const std::string& path) {
    if (summaries.empty()) throw std::invalid_argument("render_plot: no series given");
    const std::size_t T = summaries[0].second.mean_d_theta.size();
    for (const auto& [d, s] : summaries)
        if (s.mean_d_theta.size() != T)
            throw std::invalid_argument("render_plot: series horizons differ");

    double ymax = 0.0;
    for (const auto& [d, s] : summaries)
        for (std::size_t t = 0; t < T; ++t) {
            double hw = std::isnan(s.ci_halfwidth[t]) ? 0.0 : s.ci_halfwidth[t];
            ymax = std::max(ymax, s.mean_d_theta[t] + hw);
        }
    if (ymax <= 0.0) ymax = 1.0;

    PlotScale sc{0.0, static_cast<double>(T - 1 > 0 ? T - 1 : 1), 0.0, ymax * 1.05};

    auto out = open_out(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" "
           "viewBox=\"0 0 800 500\">\n"
        << "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n"
        << "<line x1=\"70\" y1=\"440\" x2=\"740\" y2=\"440\" stroke=\"black\"/>\n"
        << "<line x1=\"70\" y1=\"440\" x2=\"70\" y2=\"40\" stroke=\"black\"/>\n"
        << "<text x=\"400\" y=\"480\" text-anchor=\"middle\" font-size=\"16\">t</text>\n"
        << "<text x=\"20\" y=\"240\" text-anchor=\"middle\" font-size=\"16\" "
           "transform=\"rotate(-90 20 240)\">mean d_theta</text>\n";

    // axis ticks
    for (int k = 0; k <= 5; ++k) {
        double xv = sc.x0 + (sc.x1 - sc.x0) * k / 5.0;
        double yv = sc.y0 + (sc.y1 - sc.y0) * k / 5.0;
        out << "<text x=\"" << sc.sx(xv) << "\" y=\"458\" text-anchor=\"middle\" font-size=\"11\">"
            << static_cast<long>(xv) << "</text>\n";
        char ybuf[32];
        std::snprintf(ybuf, sizeof ybuf, "%.3g", yv);
        out << "<text x=\"64\" y=\"" << sc.sy(yv) + 4
            << "\" text-anchor=\"end\" font-size=\"11\">" << ybuf << "</text>\n";
    }

    for (std::size_t s_idx = 0; s_idx < summaries.size(); ++s_idx) {
        const auto& [delta, s] = summaries[s_idx];
        const char* color = kPalette[s_idx % 6];

        bool have_ci = s.runs > 1;
        if (have_ci) {
            out << "<polygon fill=\"" << color << "\" fill-opacity=\"0.15\" stroke=\"none\" points=\"";
            for (std::size_t t = 0; t < T; ++t)
                out << sc.sx(static_cast<double>(t)) << ','
                    << sc.sy(s.mean_d_theta[t] + s.ci_halfwidth[t]) << ' ';
            for (std::size_t t = T; t-- > 0;)
                out << sc.sx(static_cast<double>(t)) << ','
                    << sc.sy(std::max(0.0, s.mean_d_theta[t] - s.ci_halfwidth[t])) << ' ';
            out << "\"/>\n";
        }

        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t t = 0; t < T; ++t)
            out << sc.sx(static_cast<double>(t)) << ',' << sc.sy(s.mean_d_theta[t]) << ' ';
        out << "\"/>\n";

        double ly = 60.0 + 20.0 * static_cast<double>(s_idx);
        char dbuf[32];
        std::snprintf(dbuf, sizeof dbuf, "%g", delta);
        out << "<line x1=\"600\" y1=\"" << ly << "\" x2=\"630\" y2=\"" << ly << "\" stroke=\""
            << color << "\" stroke-width=\"2\"/>\n"
            << "<text x=\"636\" y=\"" << ly + 4 << "\" font-size=\"13\">delta=" << dbuf
            << "</text>\n";
    }
    out << "</svg>\n";
    finish(out, path);
}

} // namespace vicsek
