#include "vicsek/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vicsek/model.hpp"

namespace vicsek {

int CellGrid::cell_index(double coord) const {
    int c = static_cast<int>(coord / cell_size);
    return std::min(c, nx - 1); // coord == B lands in the last cell
}

CellGrid build_grid(const WorldState& world, double r, double B) {
    if (!(r > 0.0 && r < B)) throw std::invalid_argument("build_grid: need 0 < r < B");
    CellGrid g;
    g.cell_size = r;
    g.nx = g.ny = static_cast<int>(std::ceil(B / r));
    g.built_t = world.t;
    g.buckets.assign(static_cast<std::size_t>(g.nx) * g.ny, {});
    for (int i = 0; i < world.size(); ++i) {
        int cx = std::min(static_cast<int>(world.pos[i].x / r), g.nx - 1);
        int cy = std::min(static_cast<int>(world.pos[i].y / r), g.ny - 1);
        g.buckets[static_cast<std::size_t>(cx) + static_cast<std::size_t>(cy) * g.nx].push_back(i);
    }
    return g;
}

std::vector<int> grid_neighbor_set(const CellGrid& grid, const WorldState& world, int i, double r) {
    if (i < 0 || i >= world.size())
        throw std::out_of_range("grid_neighbor_set: agent index out of range");
    if (grid.built_t != world.t)
        throw std::invalid_argument("grid_neighbor_set: grid is stale (time step mismatch)");
    const double r2 = r * r;
    const int cx = grid.cell_index(world.pos[i].x);
    const int cy = grid.cell_index(world.pos[i].y);
    std::vector<int> out;
    for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
            int bx = cx + dx, by = cy + dy;
            if (bx < 0 || bx >= grid.nx || by < 0 || by >= grid.ny) continue;
            for (int j : grid.buckets[static_cast<std::size_t>(bx) + static_cast<std::size_t>(by) * grid.nx])
                if (dist2(world.pos[i], world.pos[j]) <= r2) out.push_back(j);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace vicsek
