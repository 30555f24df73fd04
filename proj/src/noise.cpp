#include "vicsek/noise.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "vicsek/model.hpp"

namespace vicsek {

const char* to_string(ControllerPhase p) {
    switch (p) {
        case ControllerPhase::AngleContract: return "angle_contract";
        case ControllerPhase::BoundaryAlign: return "boundary_align";
        case ControllerPhase::TwoGroupMerge: return "two_group_merge";
        case ControllerPhase::Idle: return "idle";
    }
    return "?";
}

namespace {

double truncated_gaussian_draw(double delta, RngStream& rng) {
    const double sigma = delta / 3.0;
    for (;;) {
        // Box-Muller; u1 shifted into (0, 1] to keep the log finite.
        double u1 = 1.0 - rng.next_unit();
        double u2 = rng.next_unit();
        double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
        double x = sigma * z;
        if (std::abs(x) <= delta) return x;
    }
}

void check_alpha(double alpha, double delta) {
    if (!(alpha > 0.0 && alpha < delta))
        throw std::invalid_argument("control series: need 0 < alpha < delta");
}

} // namespace

NoiseSample sample_noise(NoiseKind kind, double delta, int n, RngStream& rng) {
    if (!(delta >= 0.0)) throw std::invalid_argument("sample_noise: delta must be >= 0");
    NoiseSample out(static_cast<std::size_t>(n), 0.0);
    if (delta == 0.0) return out;
    for (int i = 0; i < n; ++i) {
        switch (kind) {
            case NoiseKind::Uniform:
                out[i] = delta * (2.0 * rng.next_unit() - 1.0);
                break;
            case NoiseKind::TwoPoint:
                out[i] = (rng.next_u64() >> 63) ? delta : -delta;
                break;
            case NoiseKind::TruncatedGaussian:
                out[i] = truncated_gaussian_draw(delta, rng);
                break;
        }
    }
    return out;
}

std::vector<double> angle_control_series(const WorldState& world, std::span<const int> component,
                                         double alpha, double delta) {
    check_alpha(alpha, delta);
    if (component.empty()) throw std::invalid_argument("angle_control_series: empty component");
    double lo = world.theta[component[0]], hi = lo;
    for (int i : component) {
        lo = std::min(lo, world.theta[i]);
        hi = std::max(hi, world.theta[i]);
    }
    const double mid = 0.5 * (lo + hi);
    const double m = 0.5 * (alpha + delta);
    std::vector<double> out(component.size());
    for (std::size_t k = 0; k < component.size(); ++k)
        out[k] = world.theta[component[k]] < mid ? m : -m;
    return out;
}

namespace {

// Anticlockwise perimeter coordinate starting at corner (0,0): side y=0,
// then x=B, then y=B, then x=0. Corners belong to the side reached first.
double perimeter_coord(Vec2 p, double B) {
    if (p.y == 0.0) return p.x;
    if (p.x == B) return B + p.y;
    if (p.y == B) return 2.0 * B + (B - p.x);
    if (p.x == 0.0) return 3.0 * B + (B - p.y);
    throw std::invalid_argument("boundary_control_series: agent strictly interior");
}

} // namespace

std::vector<double> boundary_control_series(const WorldState& world, std::span<const int> component,
                                            double alpha, double delta, double B) {
    check_alpha(alpha, delta);
    if (component.empty()) throw std::invalid_argument("boundary_control_series: empty component");
    const std::size_t w = component.size();
    std::vector<std::size_t> order(w);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> pc(w);
    for (std::size_t k = 0; k < w; ++k) pc[k] = perimeter_coord(world.pos[component[k]], B);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pc[a] < pc[b]; });
    const double m = 0.5 * (alpha + delta);
    std::vector<double> out(w);
    for (std::size_t rank = 0; rank < w; ++rank) {
        // 1-based rank <= w/2 turns anticlockwise, the rest clockwise
        out[order[rank]] = (2 * (rank + 1) <= w) ? m : -m;
    }
    return out;
}

std::vector<double> two_group_control_series(const WorldState& world, std::span<const int> group_a,
                                             std::span<const int> group_b, double alpha,
                                             double delta) {
    check_alpha(alpha, delta);
    if (group_a.empty() || group_b.empty())
        throw std::invalid_argument("two_group_control_series: empty group");
    for (int i : group_a)
        for (int j : group_b)
            if (i == j) throw std::invalid_argument("two_group_control_series: groups overlap");
    auto group_mean = [&](std::span<const int> g) {
        double s = 0.0;
        for (int i : g) s += world.theta[i];
        return s / static_cast<double>(g.size());
    };
    const double mid = 0.5 * (group_mean(group_a) + group_mean(group_b));
    const double m = 0.5 * (alpha + delta);
    std::vector<double> out;
    out.reserve(group_a.size() + group_b.size());
    for (int i : group_a) out.push_back(world.theta[i] < mid ? m : -m);
    for (int i : group_b) out.push_back(world.theta[i] < mid ? m : -m);
    return out;
}

namespace {

double component_diameter(const WorldState& world, const std::vector<int>& comp) {
    double best2 = 0.0;
    for (std::size_t a = 0; a < comp.size(); ++a)
        for (std::size_t b = a + 1; b < comp.size(); ++b)
            best2 = std::max(best2, dist2(world.pos[comp[a]], world.pos[comp[b]]));
    return std::sqrt(best2);
}

double component_spread(const WorldState& world, const std::vector<int>& comp) {
    double lo = world.theta[comp[0]], hi = lo;
    for (int i : comp) {
        lo = std::min(lo, world.theta[i]);
        hi = std::max(hi, world.theta[i]);
    }
    return hi - lo;
}

bool on_boundary(Vec2 p, double B) {
    return p.x == 0.0 || p.x == B || p.y == 0.0 || p.y == B;
}

} // namespace

ControlStep merge_controller(const WorldState& world, const SimParams& params, double alpha,
                             double epsilon) {
    check_alpha(alpha, params.delta);
    const int n = world.size();
    ControlStep out;
    out.noise.assign(static_cast<std::size_t>(n), 0.0);
    if (d_x_metric(world) < epsilon) {
        out.phase = ControllerPhase::Idle;
        return out;
    }

    auto comps = connected_components(world, params.r);
    std::vector<int> tight; // component indices with diameter < epsilon
    for (std::size_t c = 0; c < comps.size(); ++c)
        if (component_diameter(world, comps[c]) < epsilon) tight.push_back(static_cast<int>(c));

    auto write = [&](const std::vector<int>& idx, const std::vector<double>& xi) {
        for (std::size_t k = 0; k < idx.size(); ++k) out.noise[idx[k]] = xi[k];
    };

    if (tight.size() >= 2) {
        // Merge the first two tight subgroups; everything else keeps its
        // heading spread contracted in the meantime.
        const auto& ga = comps[tight[0]];
        const auto& gb = comps[tight[1]];
        auto xi = two_group_control_series(world, ga, gb, alpha, params.delta);
        for (std::size_t k = 0; k < ga.size(); ++k) out.noise[ga[k]] = xi[k];
        for (std::size_t k = 0; k < gb.size(); ++k) out.noise[gb[k]] = xi[ga.size() + k];
        for (std::size_t c = 0; c < comps.size(); ++c) {
            if (static_cast<int>(c) == tight[0] || static_cast<int>(c) == tight[1]) continue;
            write(comps[c], angle_control_series(world, comps[c], alpha, params.delta));
        }
        out.phase = ControllerPhase::TwoGroupMerge;
        return out;
    }

    bool any_contract = false;
    bool any_boundary = false;
    for (const auto& comp : comps) {
        bool all_on_boundary = true;
        for (int i : comp) all_on_boundary &= on_boundary(world.pos[i], params.B);
        if (all_on_boundary && component_spread(world, comp) <= 2.0 * params.delta &&
            component_diameter(world, comp) >= epsilon) {
            write(comp, boundary_control_series(world, comp, alpha, params.delta, params.B));
            any_boundary = true;
        } else {
            write(comp, angle_control_series(world, comp, alpha, params.delta));
            if (component_diameter(world, comp) >= epsilon) any_contract = true;
        }
    }
    out.phase = any_contract ? ControllerPhase::AngleContract
              : any_boundary ? ControllerPhase::BoundaryAlign
                             : ControllerPhase::AngleContract;
    return out;
}

} // namespace vicsek
