#include "tfplasma/integrator.hpp"

#include <algorithm>
#include <cmath>

#include "tfplasma/errors.hpp"
#include "tfplasma/parallel.hpp"
#include "tfplasma/source_imex.hpp"

namespace tfp {

Tableau tableau(int order) {
    Tableau t;
    t.order = order;
    if (order == 2) {
        t.alpha = {{1.0}, {0.5, 0.5}};
        t.beta = {{1.0}, {0.0, 0.5}};
    } else if (order == 3) {
        t.alpha = {{1.0}, {0.75, 0.25}, {1.0 / 3.0, 0.0, 2.0 / 3.0}};
        t.beta = {{1.0}, {0.0, 0.25}, {0.0, 0.0, 2.0 / 3.0}};
    } else {
        throw ConfigError("unsupported Runge-Kutta order " + std::to_string(order));
    }
    // Stage times follow from the convex-combination structure.
    t.stage_time.assign(static_cast<std::size_t>(t.stages() + 1), 0.0);
    for (int m = 1; m <= t.stages(); ++m) {
        double c = 0.0;
        for (int l = 0; l < m; ++l) {
            c += t.alpha[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(l)] *
                     t.stage_time[static_cast<std::size_t>(l)] +
                 t.beta[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(l)];
        }
        t.stage_time[static_cast<std::size_t>(m)] = c;
    }
    return t;
}

double cfl_dt(const Field& field, double cfl, const PhysParams& params) {
    const Grid& g = field.grid;
    double rate = 0.0;
    field.for_each_interior([&](const ConsState& u, int i, int j) {
        try {
            double r = wave_speeds(u, Axis::X, params).max() / g.dx();
            if (g.dim == 2) r += wave_speeds(u, Axis::Y, params).max() / g.dy();
            rate = std::max(rate, r);
        } catch (const AdmissibilityError& e) {
            throw StepFailure(e.what(), i, j, 0.0);
        }
    });
    return cfl / rate;
}

namespace {

// out += w * field (all cells; ghosts are refilled before any use).
void accumulate(Field& out, double w, const Field& f) {
    const std::size_t n = out.data.size();
    for (std::size_t c = 0; c < n; ++c) {
        for (int k = 0; k < n_vars; ++k) {
            out.data[c][static_cast<std::size_t>(k)] +=
                w * f.data[c][static_cast<std::size_t>(k)];
        }
    }
}

void check_interior(const Field& f, const PhysParams& params, double t) {
    f.for_each_interior([&](const ConsState& u, int i, int j) {
        try {
            check_admissible(u, params);
        } catch (const AdmissibilityError& e) {
            throw StepFailure(e.what(), i, j, t);
        }
    });
}

} // namespace

Field explicit_step(const Field& field, double t, double dt, const Tableau& tab,
                    const SpatialOp& rhs_op, const PhysParams& params,
                    bool with_source) {
    const int nx = field.grid.nx;
    std::vector<Field> stages;
    stages.reserve(static_cast<std::size_t>(tab.stages() + 1));
    stages.push_back(field);

    for (int m = 1; m <= tab.stages(); ++m) {
        Field next(field.grid, field.bc);
        const auto& arow = tab.alpha[static_cast<std::size_t>(m - 1)];
        const auto& brow = tab.beta[static_cast<std::size_t>(m - 1)];
        for (int l = 0; l < m; ++l) {
            const double a = arow[static_cast<std::size_t>(l)];
            const double b = brow[static_cast<std::size_t>(l)];
            if (a != 0.0) accumulate(next, a, stages[static_cast<std::size_t>(l)]);
            if (b == 0.0) continue;

            const double ts = t + tab.stage_time[static_cast<std::size_t>(l)] * dt;
            Field& prev = stages[static_cast<std::size_t>(l)];
            const std::vector<Vec18> rhs = rhs_op(prev, ts);
            parallel_ranges(field.grid.ny, [&](int jlo, int jhi) {
                for (int j = jlo; j < jhi; ++j) {
                    for (int i = 0; i < nx; ++i) {
                        Vec18 incr = rhs[static_cast<std::size_t>(j * nx + i)];
                        if (with_source) {
                            Vec18 s;
                            try {
                                s = source(prev.at(i, j), params);
                            } catch (const AdmissibilityError& e) {
                                throw StepFailure(e.what(), i, j, ts);
                            }
                            for (int c = 0; c < n_vars; ++c) {
                                incr[static_cast<std::size_t>(c)] += s[static_cast<std::size_t>(c)];
                            }
                        }
                        ConsState& u = next.at(i, j);
                        for (int c = 0; c < n_vars; ++c) {
                            u[static_cast<std::size_t>(c)] +=
                                b * dt * incr[static_cast<std::size_t>(c)];
                        }
                    }
                }
            });
        }
        stages.push_back(std::move(next));
    }

    Field result = std::move(stages.back());
    check_interior(result, params, t + dt);
    return result;
}

Field imex_step(const Field& field, double t, double dt, const Tableau& tab,
                const SpatialOp& rhs_op, const PhysParams& params,
                bool with_source) {
    const int nx = field.grid.nx;
    std::vector<Field> stages;
    stages.reserve(static_cast<std::size_t>(tab.stages() + 1));
    stages.push_back(field);

    for (int m = 1; m <= tab.stages(); ++m) {
        const auto& arow = tab.alpha[static_cast<std::size_t>(m - 1)];
        const auto& brow = tab.beta[static_cast<std::size_t>(m - 1)];

        // Table rows carry a single forward-Euler-type update per stage;
        // that update is replaced by the implicit-source substep.
        int lstar = -1;
        for (int l = 0; l < m; ++l) {
            if (brow[static_cast<std::size_t>(l)] != 0.0) {
                if (lstar >= 0) throw ConfigError("tableau has multiple updates per stage");
                lstar = l;
            }
        }
        if (lstar < 0) throw ConfigError("tableau stage lacks an update term");
        const double a = arow[static_cast<std::size_t>(lstar)];
        if (a == 0.0) throw ConfigError("tableau update term has zero convex weight");
        const double euler_dt = dt * brow[static_cast<std::size_t>(lstar)] / a;

        Field next(field.grid, field.bc);
        for (int l = 0; l < m; ++l) {
            if (l == lstar) continue;
            const double al = arow[static_cast<std::size_t>(l)];
            if (al != 0.0) accumulate(next, al, stages[static_cast<std::size_t>(l)]);
        }

        const double ts = t + tab.stage_time[static_cast<std::size_t>(lstar)] * dt;
        Field& prev = stages[static_cast<std::size_t>(lstar)];
        const std::vector<Vec18> rhs = rhs_op(prev, ts);
        parallel_ranges(field.grid.ny, [&](int jlo, int jhi) {
            for (int j = jlo; j < jhi; ++j) {
                for (int i = 0; i < nx; ++i) {
                    const Vec18& incr = rhs[static_cast<std::size_t>(j * nx + i)];
                    const ConsState& u = prev.at(i, j);
                    ConsState updated;
                    try {
                        if (with_source) {
                            updated = imex_substep(u, incr, euler_dt, params);
                        } else {
                            for (int c = 0; c < n_vars; ++c) {
                                updated[static_cast<std::size_t>(c)] =
                                    u[static_cast<std::size_t>(c)] +
                                    euler_dt * incr[static_cast<std::size_t>(c)];
                            }
                        }
                    } catch (const AdmissibilityError& e) {
                        throw StepFailure(e.what(), i, j, ts);
                    } catch (const SingularSystemError& e) {
                        throw StepFailure(e.what(), i, j, ts);
                    }
                    ConsState& out = next.at(i, j);
                    for (int c = 0; c < n_vars; ++c) {
                        out[static_cast<std::size_t>(c)] +=
                            a * updated[static_cast<std::size_t>(c)];
                    }
                }
            }
        });
        stages.push_back(std::move(next));
    }

    Field result = std::move(stages.back());
    check_interior(result, params, t + dt);
    return result;
}

} // namespace tfp
