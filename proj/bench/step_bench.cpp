// Throughput comparison of the serial reference step against the
// grid-backed OpenMP step, with an output-equality check at each size.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "vicsek/model.hpp"
#include "vicsek/noise.hpp"
#include "vicsek/rng.hpp"

using namespace vicsek;

namespace {

WorldState random_world(const SimParams& p, RngStream& rng) {
    WorldState w;
    w.theta.resize(p.n);
    w.pos.resize(p.n);
    for (int i = 0; i < p.n; ++i) w.theta[i] = rng.uniform(-M_PI, M_PI);
    for (int i = 0; i < p.n; ++i) w.pos[i] = {rng.uniform(0, p.B), rng.uniform(0, p.B)};
    return w;
}

double time_steps(const WorldState& start, const SimParams& p, RngStream rng, int iters,
                  bool serial) {
    WorldState w = start;
    auto t0 = std::chrono::steady_clock::now();
    for (int k = 0; k < iters; ++k) {
        auto noise = sample_noise(p.noise_kind, p.delta, p.n, rng);
        w = serial ? step_serial(w, p, noise) : step(w, p, noise);
    }
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count() / iters;
}

bool identical(const WorldState& a, const WorldState& b) {
    for (int i = 0; i < a.size(); ++i)
        if (a.theta[i] != b.theta[i] || a.pos[i].x != b.pos[i].x || a.pos[i].y != b.pos[i].y)
            return false;
    return true;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP: disabled\n");
#endif
    std::printf("%8s %12s %12s %9s %6s\n", "n", "serial s/st", "omp s/st", "speedup", "equal");
    for (int n : {64, 512, 4096, 32768}) {
        SimParams p;
        p.n = n;
        p.B = 400.0;
        p.r = 8.0;
        p.v = 2.0;
        p.delta = 0.1;
        p.horizon = 1;
        p.seed = 1;
        RngStream init_rng(p.seed, 0);
        WorldState start = random_world(p, init_rng);

        auto noise = sample_noise(p.noise_kind, p.delta, p.n, init_rng);
        bool equal = identical(step_serial(start, p, noise), step(start, p, noise));

        int iters = n <= 512 ? 200 : (n <= 4096 ? 50 : 10);
        double ts = time_steps(start, p, RngStream(p.seed, 1), iters, true);
        double tp = time_steps(start, p, RngStream(p.seed, 1), iters, false);
        std::printf("%8d %12.3e %12.3e %8.2fx %6s\n", n, ts, tp, ts / tp, equal ? "yes" : "NO");
    }
    return 0;
}
