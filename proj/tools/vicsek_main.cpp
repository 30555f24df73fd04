#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "vicsek/config.hpp"
#include "vicsek/ensemble.hpp"
#include "vicsek/io.hpp"

namespace {

using namespace vicsek;

struct CommonOpts {
    std::string config_path;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int runs = 0;
    std::string out;
    int threads = -1; // -1 = not given
};

void add_common(CLI::App* cmd, CommonOpts& o, bool config_required = true) {
    auto* c = cmd->add_option("--config", o.config_path, "JSON config file");
    if (config_required) c->required();
    cmd->add_option("--seed", o.seed, "override the config seed")->each([&](const std::string&) {
        o.seed_set = true;
    });
    cmd->add_option("--runs", o.runs, "override the run count");
    cmd->add_option("--out", o.out, "output file prefix");
    cmd->add_option("--threads", o.threads, "worker threads (0 = auto)");
}

void apply_threads(int threads) {
    if (threads < 0) {
        if (const char* env = std::getenv("VICSEK_THREADS")) threads = std::atoi(env);
    }
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

ExperimentConfig load(const CommonOpts& o) {
    ExperimentConfig cfg = load_config_file(o.config_path);
    if (o.seed_set) cfg.params.seed = o.seed;
    if (o.runs > 0) cfg.runs = o.runs;
    if (!o.out.empty()) cfg.outputs = o.out;
    apply_threads(o.threads);
    return cfg;
}

int cmd_simulate(const CommonOpts& o) {
    ExperimentConfig cfg = load(o);
    auto traj = run_trajectory(cfg.params, cfg.init, cfg.source, 0);
    write_metrics_csv({traj}, cfg.outputs + "_metrics.csv");
    std::cout << "wrote " << cfg.outputs << "_metrics.csv\n";
    return 0;
}

int cmd_ensemble(const CommonOpts& o) {
    ExperimentConfig cfg = load(o);
    auto summary = ensemble_mean(cfg.params, cfg.init, cfg.source, cfg.runs,
                                 /*tau=*/2.0 * cfg.params.delta, /*a=*/cfg.params.r);
    write_summary_csv(summary, cfg.outputs + "_summary.csv");
    std::cout << "wrote " << cfg.outputs << "_summary.csv\n";
    if (cfg.emit_plot) {
        render_plot({{cfg.params.delta, summary}}, cfg.outputs + "_dtheta.svg");
        std::cout << "wrote " << cfg.outputs << "_dtheta.svg\n";
    }
    return 0;
}

int cmd_sweep(const CommonOpts& o, const std::string& deltas_csv, double tau) {
    ExperimentConfig cfg = load(o);
    std::vector<double> deltas;
    std::stringstream ss(deltas_csv);
    std::string item;
    while (std::getline(ss, item, ',')) deltas.push_back(std::stod(item));
    auto rows = delta_sweep(cfg.params, cfg.init, deltas, tau, cfg.runs);
    write_sweep_csv(rows, cfg.outputs + "_sweep.csv");
    std::cout << "wrote " << cfg.outputs << "_sweep.csv\n";
    return 0;
}

int cmd_control_demo(const CommonOpts& o) {
    ExperimentConfig cfg = load(o);
    if (!std::holds_alternative<ControllerSource>(cfg.source))
        cfg.source = ControllerSource{cfg.params.delta / 2.0, cfg.params.r / 3.0};
    auto traj = run_trajectory(cfg.params, cfg.init, cfg.source, 0);
    write_control_log_csv(traj, cfg.outputs + "_control.csv");
    std::cout << "wrote " << cfg.outputs << "_control.csv\n";
    return 0;
}

int cmd_reproduce_fig2(const CommonOpts& o) {
    // Simulation setup: n=5, B=40, r=8, v=2, positions uniform on [0,40]^2,
    // 50 runs per noise amplitude. The source figure does not state its
    // delta values; {0.05, 0.02, 0.01} shows the ordering cleanly.
    ExperimentConfig cfg;
    cfg.params.n = 5;
    cfg.params.B = 40.0;
    cfg.params.r = 8.0;
    cfg.params.v = 2.0;
    cfg.params.horizon = 500;
    cfg.params.seed = 20240501;
    cfg.runs = 50;
    cfg.outputs = "fig2";
    if (!o.config_path.empty()) cfg = load_config_file(o.config_path);
    if (o.seed_set) cfg.params.seed = o.seed;
    if (o.runs > 0) cfg.runs = o.runs;
    if (!o.out.empty()) cfg.outputs = o.out;
    apply_threads(o.threads);

    const std::vector<double> deltas = {0.05, 0.02, 0.01};
    const double pi = 3.14159265358979323846;
    const std::vector<std::pair<std::string, double>> ranges = {{"pi40", pi / 40.0},
                                                                {"pi80", pi / 80.0}};
    for (const auto& [label, half_range] : ranges) {
        std::vector<std::pair<double, EnsembleSummary>> series;
        for (double d : deltas) {
            SimParams p = cfg.params;
            p.delta = d;
            Initializer init = UniformInit{-half_range, half_range};
            auto summary = ensemble_mean(p, init, RandomSource{}, cfg.runs, 2.0 * d, p.r);
            std::ostringstream name;
            name << cfg.outputs << "_" << label << "_delta" << d << "_summary.csv";
            write_summary_csv(summary, name.str());
            std::cout << "wrote " << name.str() << "\n";
            series.emplace_back(d, std::move(summary));
        }
        render_plot(series, cfg.outputs + "_" + label + ".svg");
        std::cout << "wrote " << cfg.outputs << "_" << label << ".svg\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bounded-domain Vicsek simulator and Monte-Carlo toolkit"};
    app.require_subcommand(1);

    CommonOpts sim_o, ens_o, sweep_o, ctl_o, fig2_o;
    std::string deltas_csv = "0.05,0.02,0.01";
    double tau = 0.1;

    auto* sim = app.add_subcommand("simulate", "one trajectory -> metrics CSV");
    add_common(sim, sim_o);
    auto* ens = app.add_subcommand("ensemble", "R runs -> summary CSV (+ SVG)");
    add_common(ens, ens_o);
    auto* swp = app.add_subcommand("sweep", "delta sweep -> table CSV");
    add_common(swp, sweep_o);
    swp->add_option("--deltas", deltas_csv, "comma-separated delta list");
    swp->add_option("--tau", tau, "synchronization threshold");
    auto* ctl = app.add_subcommand("control-demo", "merge controller run with phase log");
    add_common(ctl, ctl_o);
    auto* fig2 = app.add_subcommand("reproduce-fig2", "the two-panel ensemble experiment");
    add_common(fig2, fig2_o, /*config_required=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 1;
    }

    try {
        if (sim->parsed()) return cmd_simulate(sim_o);
        if (ens->parsed()) return cmd_ensemble(ens_o);
        if (swp->parsed()) return cmd_sweep(sweep_o, deltas_csv, tau);
        if (ctl->parsed()) return cmd_control_demo(ctl_o);
        if (fig2->parsed()) return cmd_reproduce_fig2(fig2_o);
    } catch (const vicsek::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
