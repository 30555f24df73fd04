#include "vicsek/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "vicsek/grid.hpp"

namespace vicsek {

double clamp_coord(double y, double B) {
    if (!(B > 0.0)) throw std::invalid_argument("clamp_coord: B must be > 0");
    if (!std::isfinite(y)) throw std::invalid_argument("clamp_coord: non-finite coordinate");
    if (y < 0.0) return 0.0;
    if (y > B) return B;
    return y;
}

Vec2 clamp_point(Vec2 p, double B) {
    return {clamp_coord(p.x, B), clamp_coord(p.y, B)};
}

std::vector<int> neighbor_set(const WorldState& world, int i, double r) {
    const int n = world.size();
    if (i < 0 || i >= n) throw std::out_of_range("neighbor_set: agent index out of range");
    const double r2 = r * r;
    std::vector<int> out;
    for (int j = 0; j < n; ++j) {
        if (dist2(world.pos[i], world.pos[j]) <= r2) out.push_back(j);
    }
    return out;
}

namespace {

void check_step_inputs(const WorldState& world, const SimParams& params,
                       std::span<const double> noise) {
    if (static_cast<int>(noise.size()) != world.size())
        throw std::invalid_argument("step: noise length does not match agent count");
    for (double xi : noise)
        if (!std::isfinite(xi)) throw std::invalid_argument("step: non-finite noise entry");
    for (int i = 0; i < world.size(); ++i) {
        if (!std::isfinite(world.theta[i]))
            throw std::invalid_argument("step: non-finite heading");
        if (!std::isfinite(world.pos[i].x) || !std::isfinite(world.pos[i].y))
            throw std::invalid_argument("step: non-finite position");
    }
    params.validate();
}

// Heading mean over a sorted index list, accumulated in index order so the
// naive and grid paths agree bitwise.
double heading_mean(const WorldState& world, const std::vector<int>& nbrs) {
    double sum = 0.0;
    for (int j : nbrs) sum += world.theta[j];
    return sum / static_cast<double>(nbrs.size());
}

WorldState advance(const WorldState& world, const SimParams& params,
                   std::span<const double> noise, bool use_grid, bool parallel) {
    const int n = world.size();
    WorldState next;
    next.t = world.t + 1;
    next.theta.resize(n);
    next.pos.resize(n);

    CellGrid grid;
    if (use_grid) grid = build_grid(world, params.r, params.B);

    auto body = [&](int i) {
        std::vector<int> nbrs = use_grid ? grid_neighbor_set(grid, world, i, params.r)
                                         : neighbor_set(world, i, params.r);
        const double th = heading_mean(world, nbrs) + noise[i];
        next.theta[i] = th;
        Vec2 p{world.pos[i].x + params.v * std::cos(th),
               world.pos[i].y + params.v * std::sin(th)};
        next.pos[i] = clamp_point(p, params.B);
    };

    if (parallel) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i) body(i);
    } else {
        for (int i = 0; i < n; ++i) body(i);
    }
    return next;
}

} // namespace

WorldState step(const WorldState& world, const SimParams& params, std::span<const double> noise) {
    check_step_inputs(world, params, noise);
    const bool use_grid = world.size() >= params.grid_threshold;
    return advance(world, params, noise, use_grid, use_grid);
}

WorldState step_serial(const WorldState& world, const SimParams& params,
                       std::span<const double> noise) {
    check_step_inputs(world, params, noise);
    return advance(world, params, noise, /*use_grid=*/false, /*parallel=*/false);
}

double d_theta_metric(const WorldState& world) {
    auto [lo, hi] = std::minmax_element(world.theta.begin(), world.theta.end());
    return *hi - *lo;
}

double d_theta_wrapped(const WorldState& world) {
    const int n = world.size();
    const double two_pi = 2.0 * M_PI;
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double d = std::remainder(world.theta[i] - world.theta[j], two_pi);
            best = std::max(best, std::abs(d));
        }
    }
    return best;
}

double d_x_metric(const WorldState& world) {
    const int n = world.size();
    double best2 = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) best2 = std::max(best2, dist2(world.pos[i], world.pos[j]));
    return std::sqrt(best2);
}

std::vector<std::vector<int>> connected_components(const WorldState& world, double r) {
    const int n = world.size();
    const double r2 = r * r;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dist2(world.pos[i], world.pos[j]) <= r2) {
                int ra = find(i), rb = find(j);
                if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
            }
    std::vector<std::vector<int>> comps;
    std::vector<int> slot(n, -1);
    for (int i = 0; i < n; ++i) {
        int root = find(i);
        if (slot[root] < 0) {
            slot[root] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[slot[root]].push_back(i);
    }
    return comps; // roots are smallest members and appear in index order
}

double mean_heading(const WorldState& world) {
    double sum = 0.0;
    for (double th : world.theta) sum += th;
    return sum / static_cast<double>(world.size());
}

MetricsRecord compute_metrics(const WorldState& world, double r) {
    MetricsRecord rec;
    rec.t = world.t;
    rec.d_theta = d_theta_metric(world);
    rec.d_x = d_x_metric(world);
    rec.components = static_cast<int>(connected_components(world, r).size());
    rec.mean_heading = mean_heading(world);
    return rec;
}

} // namespace vicsek
