#include "vicsek/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace vicsek {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw ConfigError("unknown key \"" + it.key() + "\" in " + where);
}

double require_number(const json& obj, const std::string& key) {
    if (!obj.contains(key)) throw ConfigError("missing required key \"" + key + "\"");
    if (!obj[key].is_number()) throw ConfigError("key \"" + key + "\" must be a number");
    return obj[key].get<double>();
}

Initializer parse_initializer(const json& j, int n) {
    if (!j.is_object()) throw ConfigError("\"initializer\" must be an object");
    if (!j.contains("type")) throw ConfigError("initializer requires a \"type\"");
    const std::string type = j["type"].get<std::string>();
    if (type == "uniform") {
        reject_unknown_keys(j, {"type", "angle_lo", "angle_hi"}, "initializer");
        UniformInit u{require_number(j, "angle_lo"), require_number(j, "angle_hi")};
        if (!(u.angle_lo < u.angle_hi))
            throw ConfigError("initializer: angle_lo must be < angle_hi");
        return u;
    }
    if (type == "explicit") {
        reject_unknown_keys(j, {"type", "thetas", "positions"}, "initializer");
        ExplicitInit e;
        if (!j.contains("thetas") || !j.contains("positions"))
            throw ConfigError("explicit initializer requires \"thetas\" and \"positions\"");
        e.thetas = j["thetas"].get<std::vector<double>>();
        for (const auto& p : j["positions"]) {
            if (!p.is_array() || p.size() != 2)
                throw ConfigError("explicit initializer: each position must be [x, y]");
            e.positions.push_back({p[0].get<double>(), p[1].get<double>()});
        }
        if (static_cast<int>(e.thetas.size()) != n || static_cast<int>(e.positions.size()) != n)
            throw ConfigError("explicit initializer: lists must have exactly n entries");
        return e;
    }
    if (type == "two_clusters") {
        reject_unknown_keys(j, {"type", "gap", "angle_lo", "angle_hi"}, "initializer");
        TwoClustersInit c{require_number(j, "gap"), -M_PI, M_PI};
        if (j.contains("angle_lo")) c.angle_lo = j["angle_lo"].get<double>();
        if (j.contains("angle_hi")) c.angle_hi = j["angle_hi"].get<double>();
        return c;
    }
    throw ConfigError("unknown initializer type \"" + type + "\"");
}

NoiseKind parse_noise_kind(const std::string& s) {
    if (s == "uniform") return NoiseKind::Uniform;
    if (s == "two_point") return NoiseKind::TwoPoint;
    if (s == "truncated_gaussian") return NoiseKind::TruncatedGaussian;
    throw ConfigError("noise_kind must be one of uniform, two_point, truncated_gaussian");
}

} // namespace

ExperimentConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config root must be a JSON object");
    reject_unknown_keys(j,
                        {"n", "B", "r", "v", "delta", "noise_kind", "horizon", "seed",
                         "initializer", "runs", "outputs", "emit_plot", "controller_alpha"},
                        "config");

    ExperimentConfig cfg;
    cfg.params.n = static_cast<int>(require_number(j, "n"));
    cfg.params.B = require_number(j, "B");
    cfg.params.r = require_number(j, "r");
    cfg.params.v = require_number(j, "v");
    cfg.params.delta = j.contains("delta") ? require_number(j, "delta") : 0.0;
    cfg.params.horizon = static_cast<long>(j.contains("horizon") ? require_number(j, "horizon") : 0);
    if (!j.contains("seed")) throw ConfigError("missing required key \"seed\" (runs must be reproducible)");
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
        throw ConfigError("key \"seed\" must be an integer");
    cfg.params.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("noise_kind")) cfg.params.noise_kind = parse_noise_kind(j["noise_kind"].get<std::string>());

    try {
        cfg.params.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }

    if (j.contains("initializer")) cfg.init = parse_initializer(j["initializer"], cfg.params.n);
    if (j.contains("runs")) {
        cfg.runs = static_cast<int>(require_number(j, "runs"));
        if (cfg.runs < 1) throw ConfigError("runs must satisfy runs >= 1");
    }
    if (j.contains("outputs")) cfg.outputs = j["outputs"].get<std::string>();
    if (j.contains("emit_plot")) {
        if (!j["emit_plot"].is_boolean()) throw ConfigError("emit_plot must be a boolean");
        cfg.emit_plot = j["emit_plot"].get<bool>();
    }
    if (j.contains("controller_alpha")) {
        double alpha = require_number(j, "controller_alpha");
        if (!(alpha > 0.0 && alpha < cfg.params.delta))
            throw ConfigError("controller_alpha must satisfy 0 < alpha < delta");
        cfg.source = ControllerSource{alpha, cfg.params.r / 3.0};
    }
    return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

} // namespace vicsek
