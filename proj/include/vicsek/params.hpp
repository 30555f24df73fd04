#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vicsek {

enum class NoiseKind { Uniform, TwoPoint, TruncatedGaussian };

inline const char* to_string(NoiseKind k) {
    switch (k) {
        case NoiseKind::Uniform: return "uniform";
        case NoiseKind::TwoPoint: return "two_point";
        case NoiseKind::TruncatedGaussian: return "truncated_gaussian";
    }
    return "?";
}

/// Full model configuration. Invariants are enforced by validate(), which
/// every entry point calls before running.
struct SimParams {
    int n = 1;              // agent count
    double B = 40.0;        // side length of the square domain
    double r = 8.0;         // neighbor radius (inclusive)
    double v = 2.0;         // speed per step
    double delta = 0.0;     // noise amplitude bound (radians)
    NoiseKind noise_kind = NoiseKind::Uniform;
    long horizon = 0;       // max step count
    std::uint64_t seed = 0; // master seed

    // Neighbor queries switch from the naive scan to the cell grid at this
    // agent count. Not part of the model; both paths give identical results.
    int grid_threshold = 32;

    void validate() const {
        if (n < 1) throw std::invalid_argument("n must satisfy n >= 1");
        if (!(B > 0.0)) throw std::invalid_argument("B must satisfy B > 0");
        if (!(r > 0.0 && r < B)) throw std::invalid_argument("r must satisfy 0 < r < B");
        if (!(v > 0.0)) throw std::invalid_argument("v must satisfy v > 0");
        if (!(delta >= 0.0)) throw std::invalid_argument("delta must satisfy delta >= 0");
        if (horizon < 0) throw std::invalid_argument("horizon must satisfy horizon >= 0");
    }
};

} // namespace vicsek
