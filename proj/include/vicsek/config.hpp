#pragma once

#include <string>

#include "vicsek/ensemble.hpp"
#include "vicsek/init.hpp"
#include "vicsek/params.hpp"

namespace vicsek {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    SimParams params;
    Initializer init = UniformInit{-3.141592653589793, 3.141592653589793};
    NoiseSource source = RandomSource{};
    int runs = 1;
    std::string outputs = "out";
    bool emit_plot = false;
};

/// Parse the JSON config document. Unknown keys are rejected; range
/// violations name the offending key. The seed is mandatory.
ExperimentConfig parse_config(const std::string& text);

ExperimentConfig load_config_file(const std::string& path);

} // namespace vicsek
