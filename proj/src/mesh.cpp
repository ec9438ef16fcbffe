#include "tfplasma/mesh.hpp"

#include <string>

#include "tfplasma/diffusion.hpp"
#include "tfplasma/ecflux.hpp"
#include "tfplasma/errors.hpp"
#include "tfplasma/parallel.hpp"

namespace tfp {

Grid Grid::line(int nx, double x0, double x1, int nghost) {
    if (nx < 1) throw ConfigError("grid needs at least one cell");
    if (nghost < 2) throw ConfigError("ghost width must be at least 2");
    Grid g;
    g.dim = 1;
    g.nx = nx;
    g.ny = 1;
    g.x0 = x0;
    g.x1 = x1;
    g.nghost = nghost;
    return g;
}

Grid Grid::rect(int nx, int ny, double x0, double x1, double y0, double y1, int nghost) {
    if (nx < 1 || ny < 1) throw ConfigError("grid needs at least one cell per direction");
    if (nghost < 2) throw ConfigError("ghost width must be at least 2");
    Grid g;
    g.dim = 2;
    g.nx = nx;
    g.ny = ny;
    g.x0 = x0;
    g.x1 = x1;
    g.y0 = y0;
    g.y1 = y1;
    g.nghost = nghost;
    return g;
}

namespace {

void validate_bc(const Grid& grid, const std::array<BoundaryCondition, 4>& bc) {
    const bool px = bc[X_LOW] == BoundaryCondition::Periodic;
    if (px != (bc[X_HIGH] == BoundaryCondition::Periodic)) {
        throw ConfigError("periodic boundary requires both x sides periodic");
    }
    if (grid.dim == 2) {
        const bool py = bc[Y_LOW] == BoundaryCondition::Periodic;
        if (py != (bc[Y_HIGH] == BoundaryCondition::Periodic)) {
            throw ConfigError("periodic boundary requires both y sides periodic");
        }
    }
}

} // namespace

Field::Field(const Grid& g, BoundaryCondition bc_all)
    : Field(g, {bc_all, bc_all, bc_all, bc_all}) {}

Field::Field(const Grid& g, const std::array<BoundaryCondition, 4>& bc_sides)
    : grid(g), bc(bc_sides) {
    validate_bc(grid, bc);
    const int stride = grid.nx + 2 * gx();
    const int rows = grid.ny + 2 * gy();
    data.assign(static_cast<std::size_t>(stride * rows), ConsState{});
}

void Field::for_each_interior(const std::function<void(const ConsState&, int, int)>& fn) const {
    for (int j = 0; j < grid.ny; ++j) {
        for (int i = 0; i < grid.nx; ++i) {
            fn(at(i, j), i, j);
        }
    }
}

void fill_ghosts(Field& field) {
    const Grid& g = field.grid;
    const int ng = g.nghost;

    // x pass over interior rows.
    for (int j = 0; j < g.ny; ++j) {
        for (int k = 1; k <= ng; ++k) {
            field.at(-k, j) = (field.bc[X_LOW] == BoundaryCondition::Periodic)
                                  ? field.at(g.nx - k, j)
                                  : field.at(0, j);
            field.at(g.nx - 1 + k, j) = (field.bc[X_HIGH] == BoundaryCondition::Periodic)
                                            ? field.at(k - 1, j)
                                            : field.at(g.nx - 1, j);
        }
    }

    // y pass over the full extended rows, so corners inherit the x fill.
    if (g.dim == 2) {
        for (int i = -ng; i < g.nx + ng; ++i) {
            for (int k = 1; k <= ng; ++k) {
                field.at(i, -k) = (field.bc[Y_LOW] == BoundaryCondition::Periodic)
                                      ? field.at(i, g.ny - k)
                                      : field.at(i, 0);
                field.at(i, g.ny - 1 + k) = (field.bc[Y_HIGH] == BoundaryCondition::Periodic)
                                                ? field.at(i, k - 1)
                                                : field.at(i, g.ny - 1);
            }
        }
    }
}

namespace {

// One-dimensional entropy-stable flux sweep along a line of cells.
// cell(c) must be valid for c in [-2, n+2); writes fluxes for the n+1
// interfaces into flux[0..n], where interface k separates cells k-1 and k.
void sweep_line(int n, int order, const PhysParams& params, Axis dir,
                const std::function<const ConsState&(int)>& cell,
                std::vector<Vec18>& flux, int line_id, double t) {
    // Entropy variables on the extended range of cells.
    std::vector<Vec18> v(static_cast<std::size_t>(n + 4));
    for (int c = -2; c < n + 2; ++c) {
        try {
            v[static_cast<std::size_t>(c + 2)] = entropy_vars(cell(c), params);
        } catch (const AdmissibilityError& e) {
            throw StepFailure(e.what(), dir == Axis::X ? c : line_id,
                              dir == Axis::X ? line_id : c, t);
        }
    }

    // Eigensystems and scaled jumps per interface. The second-order jump at
    // interface k limits against the neighbouring interfaces' jumps.
    const int klo = (order == 2) ? -1 : 0;
    const int khi = (order == 2) ? n + 1 : n;
    std::vector<EigenSystem> es(static_cast<std::size_t>(khi - klo + 1));
    std::vector<Vec18> delta(static_cast<std::size_t>(khi - klo + 1));
    for (int k = klo; k <= khi; ++k) {
        try {
            const ConsState& ul = cell(k - 1);
            const ConsState& ur = cell(k);
            EigenSystem& e = es[static_cast<std::size_t>(k - klo)];
            e = eigen_system(ul, ur, dir, params);
            Vec18 dv{};
            const Vec18& vl = v[static_cast<std::size_t>(k + 1)];
            const Vec18& vr = v[static_cast<std::size_t>(k + 2)];
            for (int c = 0; c < n_vars; ++c) {
                dv[static_cast<std::size_t>(c)] =
                    vr[static_cast<std::size_t>(c)] - vl[static_cast<std::size_t>(c)];
            }
            delta[static_cast<std::size_t>(k - klo)] = e.scaled_vars(dv);
        } catch (const AdmissibilityError& e) {
            throw StepFailure(e.what(), dir == Axis::X ? k : line_id,
                              dir == Axis::X ? line_id : k, t);
        }
    }

    for (int k = 0; k <= n; ++k) {
        try {
            Vec18 f = ec_flux(cell(k - 1), cell(k), dir, params);
            const EigenSystem& e = es[static_cast<std::size_t>(k - klo)];
            Vec18 jump;
            if (order == 2) {
                const Vec18& dm = delta[static_cast<std::size_t>(k - 1 - klo)];
                const Vec18& dc = delta[static_cast<std::size_t>(k - klo)];
                const Vec18& dp = delta[static_cast<std::size_t>(k + 1 - klo)];
                for (int c = 0; c < n_vars; ++c) {
                    jump[static_cast<std::size_t>(c)] = limited_jump(
                        dm[static_cast<std::size_t>(c)], dc[static_cast<std::size_t>(c)],
                        dp[static_cast<std::size_t>(c)], LimiterKind::MinMod);
                }
            } else {
                jump = delta[static_cast<std::size_t>(k - klo)];
            }
            const Vec18 d = e.apply_r_lambda(jump);
            for (int c = 0; c < n_vars; ++c) {
                f[static_cast<std::size_t>(c)] -= 0.5 * d[static_cast<std::size_t>(c)];
            }
            flux[static_cast<std::size_t>(k)] = f;
        } catch (const AdmissibilityError& e) {
            throw StepFailure(e.what(), dir == Axis::X ? k : line_id,
                              dir == Axis::X ? line_id : k, t);
        }
    }
}

} // namespace

std::vector<Vec18> spatial_rhs(const Field& field, int order, const ForcingFn& forcing,
                               double t, const PhysParams& params) {
    if (order != 1 && order != 2) throw ConfigError("spatial order must be 1 or 2");
    const Grid& g = field.grid;
    const int nx = g.nx;
    const int ny = g.ny;
    const double inv_dx = 1.0 / g.dx();

    std::vector<Vec18> rhs(static_cast<std::size_t>(nx * ny), Vec18{});

    // x-direction: one interface array per row, rows partitioned across workers.
    parallel_ranges(ny, [&](int jlo, int jhi) {
        std::vector<Vec18> flux(static_cast<std::size_t>(nx + 1));
        for (int j = jlo; j < jhi; ++j) {
            sweep_line(nx, order, params, Axis::X,
                       [&field, j](int c) -> const ConsState& { return field.at(c, j); },
                       flux, j, t);
            for (int i = 0; i < nx; ++i) {
                Vec18& out = rhs[static_cast<std::size_t>(j * nx + i)];
                const Vec18& fr = flux[static_cast<std::size_t>(i + 1)];
                const Vec18& fl = flux[static_cast<std::size_t>(i)];
                for (int c = 0; c < n_vars; ++c) {
                    out[static_cast<std::size_t>(c)] -=
                        (fr[static_cast<std::size_t>(c)] - fl[static_cast<std::size_t>(c)]) * inv_dx;
                }
            }
        }
    });

    if (g.dim == 2) {
        const double inv_dy = 1.0 / g.dy();
        parallel_ranges(nx, [&](int ilo, int ihi) {
            std::vector<Vec18> flux(static_cast<std::size_t>(ny + 1));
            for (int i = ilo; i < ihi; ++i) {
                sweep_line(ny, order, params, Axis::Y,
                           [&field, i](int c) -> const ConsState& { return field.at(i, c); },
                           flux, i, t);
                for (int j = 0; j < ny; ++j) {
                    Vec18& out = rhs[static_cast<std::size_t>(j * nx + i)];
                    const Vec18& fr = flux[static_cast<std::size_t>(j + 1)];
                    const Vec18& fl = flux[static_cast<std::size_t>(j)];
                    for (int c = 0; c < n_vars; ++c) {
                        out[static_cast<std::size_t>(c)] -=
                            (fr[static_cast<std::size_t>(c)] - fl[static_cast<std::size_t>(c)]) * inv_dy;
                    }
                }
            }
        });
    }

    if (forcing) {
        parallel_ranges(ny, [&](int jlo, int jhi) {
            for (int j = jlo; j < jhi; ++j) {
                const double y = g.y_center(j);
                for (int i = 0; i < nx; ++i) {
                    const Vec18 k = forcing(g.x_center(i), y, t);
                    Vec18& out = rhs[static_cast<std::size_t>(j * nx + i)];
                    for (int c = 0; c < n_vars; ++c) {
                        out[static_cast<std::size_t>(c)] += k[static_cast<std::size_t>(c)];
                    }
                }
            }
        });
    }

    return rhs;
}

Totals totals(const Field& field, const PhysParams& params) {
    const double vol = field.grid.cell_volume();
    Totals sums;
    field.for_each_interior([&](const ConsState& u, int i, int j) {
        EntropyTriple e;
        try {
            e = entropy(u, params);
        } catch (const AdmissibilityError& err) {
            throw StepFailure(err.what(), i, j, 0.0);
        }
        sums.e_i += e.ion * vol;
        sums.e_e += e.electron * vol;
        sums.e_m += e.em * vol;
        sums.mass_i += u[RHO_I] * vol;
        sums.mass_e += u[RHO_E] * vol;
    });
    return sums;
}

} // namespace tfp
