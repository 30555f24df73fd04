#pragma once

#include <cstdint>

namespace vicsek {

// splitmix64 finalizer
inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

/// Counter-based stream derived from (master_seed, run_index). Distinct
/// pairs give independent streams; the same pair replays the identical
/// sequence, so a draw is addressable by its counter position.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t run_index)
        : master_seed_(master_seed), run_index_(run_index) {
        base_ = mix64(master_seed + 0x9E3779B97F4A7C15ULL * mix64(run_index + 0x632BE59BD9B4E019ULL));
    }

    std::uint64_t next_u64() {
        ++counter_;
        return mix64(base_ + 0x9E3779B97F4A7C15ULL * counter_);
    }

    /// Uniform in [0, 1), 53-bit resolution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    [[nodiscard]] std::uint64_t master_seed() const { return master_seed_; }
    [[nodiscard]] std::uint64_t run_index() const { return run_index_; }
    [[nodiscard]] std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t master_seed_;
    std::uint64_t run_index_;
    std::uint64_t base_;
    std::uint64_t counter_ = 0;
};

} // namespace vicsek
