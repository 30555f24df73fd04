#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "vicsek/config.hpp"
#include "vicsek/io.hpp"

using namespace vicsek;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* kMinimal = R"({
  "n": 5, "B": 40, "r": 8, "v": 2, "delta": 0.05,
  "noise_kind": "uniform", "horizon": 10, "seed": 42,
  "initializer": {"type": "uniform", "angle_lo": -0.0785, "angle_hi": 0.0785}
})";

} // namespace

TEST_CASE("parse_config accepts the minimal document") {
    auto cfg = parse_config(kMinimal);
    CHECK(cfg.params.n == 5);
    CHECK(cfg.params.B == 40.0);
    CHECK(cfg.params.r == 8.0);
    CHECK(cfg.params.v == 2.0);
    CHECK(cfg.params.delta == 0.05);
    CHECK(cfg.params.seed == 42);
    CHECK(std::holds_alternative<UniformInit>(cfg.init));
    CHECK(std::holds_alternative<RandomSource>(cfg.source));
}

TEST_CASE("parse_config rejects r >= B with a named bound") {
    std::string bad = R"({"n":5,"B":40,"r":50,"v":2,"seed":1})";
    try {
        parse_config(bad);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("r must satisfy 0 < r < B") != std::string::npos);
    }
}

TEST_CASE("parse_config rejects missing seed and unknown keys") {
    CHECK_THROWS_AS(parse_config(R"({"n":5,"B":40,"r":8,"v":2})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"n":5,"B":40,"r":8,"v":2,"seed":1,"bogus":1})"),
                    ConfigError);
    CHECK_THROWS_AS(
        parse_config(R"({"n":5,"B":40,"r":8,"v":2,"seed":1,
                         "initializer":{"type":"uniform","angle_lo":0,"angle_hi":1,"x":2}})"),
        ConfigError);
    CHECK_THROWS_AS(parse_config("not json"), ConfigError);
}

TEST_CASE("explicit initializer length must match n") {
    std::string bad = R"({"n":3,"B":40,"r":8,"v":2,"seed":1,
      "initializer":{"type":"explicit","thetas":[0,0],"positions":[[1,1],[2,2]]}})";
    CHECK_THROWS_AS(parse_config(bad), ConfigError);
}

TEST_CASE("controller_alpha selects the controller source") {
    std::string doc = R"({"n":5,"B":40,"r":8,"v":2,"delta":0.05,"seed":1,"controller_alpha":0.02})";
    auto cfg = parse_config(doc);
    REQUIRE(std::holds_alternative<ControllerSource>(cfg.source));
    CHECK(std::get<ControllerSource>(cfg.source).alpha == 0.02);

    std::string bad = R"({"n":5,"B":40,"r":8,"v":2,"delta":0.05,"seed":1,"controller_alpha":0.2})";
    CHECK_THROWS_AS(parse_config(bad), ConfigError);
}

TEST_CASE("initial state generators") {
    auto cfg = parse_config(kMinimal);
    RngStream rng(cfg.params.seed, 0);
    auto w = make_initial_state(cfg.init, cfg.params, rng);
    CHECK(w.t == 0);
    CHECK(w.size() == 5);
    for (int i = 0; i < 5; ++i) {
        CHECK(w.theta[i] >= -0.0785);
        CHECK(w.theta[i] < 0.0785);
        CHECK(w.pos[i].x >= 0.0);
        CHECK(w.pos[i].x <= 40.0);
    }

    SimParams p = cfg.params;
    p.n = 4;
    RngStream rng2(1, 0);
    auto tc = make_initial_state(TwoClustersInit{20.0, -0.1, 0.1}, p, rng2);
    CHECK(tc.pos[0].x == tc.pos[1].x);
    CHECK(tc.pos[2].x == tc.pos[3].x);
    CHECK(tc.pos[2].x - tc.pos[0].x == 20.0);

    ExplicitInit ex;
    ex.thetas = {0.5, -0.5, 1.0, 0.0};
    ex.positions = {{1, 2}, {3, 4}, {5, 6}, {7, 8}};
    RngStream rng3(1, 0);
    auto we = make_initial_state(ex, p, rng3);
    CHECK(we.theta == ex.thetas); // round-trips exactly
}

TEST_CASE("uniform initializer angle moments") {
    SimParams p;
    p.n = 100000;
    p.B = 40;
    p.r = 8;
    p.v = 2;
    RngStream rng(9, 0);
    auto w = make_initial_state(UniformInit{-0.0785, 0.0785}, p, rng);
    double mean = 0.0;
    for (double th : w.theta) mean += th;
    mean /= p.n;
    CHECK(std::abs(mean) < 4.0 * (0.0785 / std::sqrt(3.0)) / std::sqrt(100000.0));
}

TEST_CASE("metrics CSV format and determinism") {
    SimParams p;
    p.n = 2;
    p.B = 40;
    p.r = 8;
    p.v = 2;
    p.delta = 0.05;
    p.horizon = 2;
    p.seed = 13;
    UniformInit init{-0.1, 0.1};
    auto traj = run_trajectory(p, init, RandomSource{}, 0);

    const std::string path = "test_metrics_tmp.csv";
    write_metrics_csv({traj}, path);
    std::string first = slurp(path);
    write_metrics_csv({traj}, path);
    CHECK(first == slurp(path));

    std::istringstream lines(first);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "run,t,d_theta,d_x,components,mean_heading");
    int rows = 0;
    std::string line;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 3); // horizon 2 -> rows t = 0, 1, 2

    // numeric round trip on the d_theta column
    std::istringstream again(first);
    std::getline(again, header);
    std::getline(again, line);
    auto second_comma = line.find(',', line.find(',') + 1);
    auto third_comma = line.find(',', second_comma + 1);
    double parsed = std::stod(line.substr(second_comma + 1, third_comma - second_comma - 1));
    CHECK(parsed == traj.records[0].d_theta);

    CHECK(first.find("\r") == std::string::npos); // LF endings only
    std::remove(path.c_str());
}

TEST_CASE("render_plot writes one polyline and legend entry per series") {
    SimParams p;
    p.n = 3;
    p.B = 40;
    p.r = 8;
    p.v = 2;
    p.delta = 0.05;
    p.horizon = 5;
    p.seed = 3;
    UniformInit init{-0.1, 0.1};
    auto s1 = ensemble_mean(p, init, RandomSource{}, 4);
    p.delta = 0.02;
    auto s2 = ensemble_mean(p, init, RandomSource{}, 4);

    const std::string path = "test_plot_tmp.svg";
    render_plot({{0.05, s1}, {0.02, s2}}, path);
    std::string svg = slurp(path);
    std::size_t polylines = 0, pos = 0;
    while ((pos = svg.find("<polyline", pos)) != std::string::npos) {
        ++polylines;
        ++pos;
    }
    CHECK(polylines == 2);
    CHECK(svg.find("delta=0.05") != std::string::npos);
    CHECK(svg.find("delta=0.02") != std::string::npos);
    CHECK(svg.find("mean d_theta") != std::string::npos);
    std::remove(path.c_str());

    CHECK_THROWS_AS(render_plot({}, path), std::invalid_argument);
}
