#pragma once

#include <vector>

#include "vicsek/state.hpp"

namespace vicsek {

/// Uniform cell grid with cell size r over [0, B]^2. Coordinates equal to B
/// fall into the last cell. Immutable after build; queries against a world
/// at a different time step are rejected.
struct CellGrid {
    double cell_size = 0.0;
    int nx = 0;
    int ny = 0;
    long built_t = 0;
    std::vector<std::vector<int>> buckets; // nx * ny, row-major (cx + cy*nx)

    [[nodiscard]] int cell_index(double coord) const;
};

CellGrid build_grid(const WorldState& world, double r, double B);

/// Same set as neighbor_set(), sorted ascending; candidates come from the
/// 3x3 cell block around agent i.
std::vector<int> grid_neighbor_set(const CellGrid& grid, const WorldState& world, int i, double r);

} // namespace vicsek
