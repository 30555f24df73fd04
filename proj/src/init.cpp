#include "vicsek/init.hpp"

#include <cmath>
#include <stdexcept>

namespace vicsek {

namespace {

WorldState from_uniform(const UniformInit& u, const SimParams& p, RngStream& rng) {
    if (!(u.angle_lo < u.angle_hi))
        throw std::invalid_argument("initializer: angle_lo must be < angle_hi");
    WorldState w;
    w.theta.resize(p.n);
    w.pos.resize(p.n);
    for (int i = 0; i < p.n; ++i) w.theta[i] = rng.uniform(u.angle_lo, u.angle_hi);
    for (int i = 0; i < p.n; ++i) {
        w.pos[i].x = rng.uniform(0.0, p.B);
        w.pos[i].y = rng.uniform(0.0, p.B);
    }
    return w;
}

WorldState from_explicit(const ExplicitInit& e, const SimParams& p) {
    if (static_cast<int>(e.thetas.size()) != p.n || static_cast<int>(e.positions.size()) != p.n)
        throw std::invalid_argument("initializer: explicit list length does not match n");
    WorldState w;
    w.theta = e.thetas;
    w.pos = e.positions;
    for (int i = 0; i < p.n; ++i) {
        if (!std::isfinite(w.theta[i])) throw std::invalid_argument("initializer: non-finite heading");
        if (w.pos[i].x < 0.0 || w.pos[i].x > p.B || w.pos[i].y < 0.0 || w.pos[i].y > p.B)
            throw std::invalid_argument("initializer: position outside [0,B]^2");
    }
    return w;
}

WorldState from_two_clusters(const TwoClustersInit& c, const SimParams& p, RngStream& rng) {
    if (!(c.gap >= 0.0)) throw std::invalid_argument("initializer: gap must be >= 0");
    if (!(c.angle_lo < c.angle_hi))
        throw std::invalid_argument("initializer: angle_lo must be < angle_hi");
    WorldState w;
    w.theta.resize(p.n);
    w.pos.resize(p.n);
    for (int i = 0; i < p.n; ++i) w.theta[i] = rng.uniform(c.angle_lo, c.angle_hi);
    const Vec2 left{0.5 * p.B - 0.5 * c.gap, 0.5 * p.B};
    const Vec2 right{0.5 * p.B + 0.5 * c.gap, 0.5 * p.B};
    const int half = (p.n + 1) / 2;
    for (int i = 0; i < p.n; ++i) w.pos[i] = i < half ? left : right;
    return w;
}

} // namespace

WorldState make_initial_state(const Initializer& init, const SimParams& params, RngStream& rng) {
    params.validate();
    WorldState w = std::visit(
        [&](const auto& v) -> WorldState {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, UniformInit>) return from_uniform(v, params, rng);
            else if constexpr (std::is_same_v<T, ExplicitInit>) return from_explicit(v, params);
            else return from_two_clusters(v, params, rng);
        },
        init);
    w.t = 0;
    return w;
}

} // namespace vicsek
