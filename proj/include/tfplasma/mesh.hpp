#pragma once

#include <functional>
#include <vector>

#include "tfplasma/state.hpp"

namespace tfp {

enum class BoundaryCondition { Periodic, ZeroGradient };

enum Side : int { X_LOW = 0, X_HIGH = 1, Y_LOW = 2, Y_HIGH = 3 };

/// Uniform structured grid, 1D or 2D, with a ghost layer wide enough for
/// the four-point interface stencil of the second-order flux.
struct Grid {
    int dim = 1;
    int nx = 0;
    int ny = 1;
    double x0 = 0.0, x1 = 1.0;
    double y0 = 0.0, y1 = 1.0;
    int nghost = 2;

    static Grid line(int nx, double x0, double x1, int nghost = 2);
    static Grid rect(int nx, int ny, double x0, double x1, double y0, double y1,
                     int nghost = 2);

    double dx() const { return (x1 - x0) / nx; }
    double dy() const { return (y1 - y0) / ny; }
    double x_center(int i) const { return x0 + (i + 0.5) * dx(); }
    double y_center(int j) const { return dim == 2 ? y0 + (j + 0.5) * dy() : 0.0; }
    double cell_volume() const { return dim == 2 ? dx() * dy() : dx(); }
};

/// Cell states over a grid, interior plus ghost layers, with per-side
/// boundary conditions.
struct Field {
    Grid grid;
    std::array<BoundaryCondition, 4> bc{};
    std::vector<ConsState> data;

    Field(const Grid& g, BoundaryCondition bc_all);
    Field(const Grid& g, const std::array<BoundaryCondition, 4>& bc_sides);

    int gx() const { return grid.nghost; }
    int gy() const { return grid.dim == 2 ? grid.nghost : 0; }

    ConsState& at(int i, int j) {
        return data[static_cast<std::size_t>(index(i, j))];
    }
    const ConsState& at(int i, int j) const {
        return data[static_cast<std::size_t>(index(i, j))];
    }

    /// Visits interior cells in fixed row-major order.
    void for_each_interior(const std::function<void(const ConsState&, int, int)>& fn) const;

    int index(int i, int j) const {
        const int stride = grid.nx + 2 * gx();
        return (j + gy()) * stride + (i + gx());
    }
};

/// Populates ghost layers from the boundary conditions. In 2D the x pass
/// runs first and the y pass covers the full extended rows, which fills the
/// corners consistently.
void fill_ghosts(Field& field);

using ForcingFn = std::function<Vec18(double x, double y, double t)>;

/// Flux-difference spatial operator over the interior cells (row-major),
/// plus optional forcing. Ghost cells must be filled. Each interface flux
/// is computed once into a dedicated array and shared by its neighbours.
std::vector<Vec18> spatial_rhs(const Field& field, int order, const ForcingFn& forcing,
                               double t, const PhysParams& params);

struct Totals {
    double e_i = 0.0;
    double e_e = 0.0;
    double e_m = 0.0;
    double mass_i = 0.0;
    double mass_e = 0.0;
};

/// Volume-weighted sums of the entropy densities and species masses,
/// accumulated in fixed index order.
Totals totals(const Field& field, const PhysParams& params);

} // namespace tfp
