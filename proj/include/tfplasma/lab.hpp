#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tfplasma/integrator.hpp"
#include "tfplasma/mesh.hpp"

namespace tfp {

enum class ScenarioKind { Manufactured, Soliton1d, BrioWu, Soliton2d };
enum class StepperKind { Explicit, Imex };

/// Everything a run needs from a scenario builder: the initial field, the
/// model constants the scenario fixes, and (for the forced problem) the
/// forcing term and the reference density profile.
struct ScenarioSetup {
    Field field;
    PhysParams params;
    ForcingFn forcing;                                    // may be empty
    std::function<double(double, double)> exact_density;  // (x, t); may be empty
};

/// Forced 1D problem on (0,1) with a travelling ion/electron density wave.
/// The forcing closes the charge/current sources only when
/// lambda_hat_d^2 * r_hat_g = 1, so the builder ties the Debye length to the
/// chosen Larmor radius.
ScenarioSetup build_manufactured(int nx, double r_hat_g = 100.0);

/// Stationary density hump on (0,12), periodic, mass ratio 25.
ScenarioSetup build_soliton1d(int nx, double r_hat_g);

/// Two-species shock tube on (0,1), zero-gradient boundaries, mass ratio 1836,
/// pressures non-dimensionalized by 1e-4.
ScenarioSetup build_briowu(int nx, double r_hat_g);

/// Radial density hump on (0,2)^2, zero-gradient boundaries.
ScenarioSetup build_soliton2d(int nx, int ny, double r_hat_g);

/// L1 distance of the ion density from a reference profile (1D fields).
double l1_error(const Field& field,
                const std::function<double(double, double)>& exact_density, double t);

struct ScenarioConfig {
    ScenarioKind scenario = ScenarioKind::Soliton1d;
    int nx = 200;
    int ny = 100;
    int order = 2;        // spatial order: 1 or 2
    int rk_order = 3;     // 2 or 3
    StepperKind stepper = StepperKind::Imex;
    double cfl = 0.45;
    double sigma_src = 0.5;  // explicit source safety factor
    double t_end = 1.0;
    double snapshot_interval = 0.0;  // 0: initial and final snapshots only
    std::string output_dir = ".";
    bool source_enabled = true;
    std::map<std::string, double> phys_overrides;  // gamma, lambda_m, r_hat_g, ...

    void validate() const;
};

struct SeriesRow {
    double t;
    double dt;
    double e_i;
    double e_e;
    double e_m;
    double mass_i;
    double mass_e;
};

struct RunReport {
    long steps_taken = 0;
    double wall_seconds = 0.0;
    std::optional<double> final_l1_error;
    std::vector<SeriesRow> series;
};

using ConfigPairs = std::vector<std::pair<std::string, std::string>>;

/// Reads `key = value` lines ('#' starts a comment). Unknown keys are
/// rejected later, when the config is materialized.
ConfigPairs read_config_pairs(const std::string& path);

/// Builds a config from key/value pairs; later pairs win. Throws
/// ConfigError on unknown keys or malformed values.
ScenarioConfig make_config(const ConfigPairs& pairs);

/// Builds the scenario a config describes (with overrides applied).
ScenarioSetup build_scenario(const ScenarioConfig& config);

/// Runs a configured scenario end to end, writing snapshots and the
/// diagnostics series under output_dir.
RunReport run(const ScenarioConfig& config);

/// Primitive-variable snapshot (full round-trip precision).
void write_snapshot(const Field& field, const PhysParams& params, const std::string& path);

/// Re-ingests a snapshot written for the same grid and boundary set.
Field read_snapshot(const std::string& path, const Grid& grid,
                    const std::array<BoundaryCondition, 4>& bc, const PhysParams& params);

void write_series(const std::vector<SeriesRow>& series, const std::string& path);

/// One sweep result row; `value` is the swept parameter value.
std::string sweep_csv_header(const std::string& key);
std::string sweep_csv_row(double value, const RunReport& report);

const char* scenario_name(ScenarioKind kind);

} // namespace tfp
