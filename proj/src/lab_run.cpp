#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <limits>
#include <string>

#include "tfplasma/errors.hpp"
#include "tfplasma/lab.hpp"
#include "tfplasma/source_imex.hpp"

namespace tfp {

namespace {

std::string snapshot_path(const std::string& dir, long index) {
    return dir + "/snap_" + std::to_string(index) + ".csv";
}

} // namespace

RunReport run(const ScenarioConfig& config) {
    config.validate();
    ScenarioSetup setup = build_scenario(config);
    Field field = std::move(setup.field);
    const PhysParams& params = setup.params;
    const Tableau tab = tableau(config.rk_order);

    std::filesystem::create_directories(config.output_dir);

    const ForcingFn& forcing = setup.forcing;
    const int order = config.order;
    const SpatialOp rhs_op = [&forcing, order, &params](Field& f, double ts) {
        fill_ghosts(f);
        return spatial_rhs(f, order, forcing, ts, params);
    };

    RunReport report;
    auto record = [&](double t, double dt) {
        const Totals sums = totals(field, params);
        report.series.push_back({t, dt, sums.e_i, sums.e_e, sums.e_m,
                                 sums.mass_i, sums.mass_e});
    };

    const auto wall_start = std::chrono::steady_clock::now();
    double t = 0.0;
    long snap_index = 0;
    double next_snapshot = config.snapshot_interval > 0.0
                               ? config.snapshot_interval
                               : std::numeric_limits<double>::infinity();
    write_snapshot(field, params, snapshot_path(config.output_dir, snap_index++));
    record(0.0, 0.0);

    try {
        while (t < config.t_end) {
            double dt = cfl_dt(field, config.cfl, params);
            if (config.stepper == StepperKind::Explicit && config.source_enabled) {
                dt = std::min(dt, explicit_source_dt(field, params, config.sigma_src));
            }
            // Land exactly on the next snapshot time or on t_end.
            const double target = std::min(config.t_end, next_snapshot);
            const bool hit_target = t + dt >= target;
            if (hit_target) dt = target - t;

            field = (config.stepper == StepperKind::Explicit)
                        ? explicit_step(field, t, dt, tab, rhs_op, params,
                                        config.source_enabled)
                        : imex_step(field, t, dt, tab, rhs_op, params,
                                    config.source_enabled);
            t = hit_target ? target : t + dt;
            ++report.steps_taken;
            record(t, dt);

            if (hit_target && target == next_snapshot) {
                if (next_snapshot < config.t_end) {
                    write_snapshot(field, params,
                                   snapshot_path(config.output_dir, snap_index++));
                }
                next_snapshot += config.snapshot_interval;
            }
        }
    } catch (...) {
        // Leave partial outputs on disk for post-mortem inspection.
        write_series(report.series, config.output_dir + "/series.csv");
        throw;
    }

    write_snapshot(field, params, snapshot_path(config.output_dir, snap_index++));
    write_series(report.series, config.output_dir + "/series.csv");

    if (setup.exact_density && field.grid.dim == 1) {
        report.final_l1_error = l1_error(field, setup.exact_density, t);
    }

    const auto wall_end = std::chrono::steady_clock::now();
    report.wall_seconds = std::chrono::duration<double>(wall_end - wall_start).count();
    return report;
}

} // namespace tfp
