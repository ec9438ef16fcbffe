#include <cmath>
#include <numbers>

#include "tfplasma/errors.hpp"
#include "tfplasma/lab.hpp"

namespace tfp {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

PhysParams canonical_params(ScenarioKind kind, double r_hat_g) {
    PhysParams params;
    params.gamma = 5.0 / 3.0;
    params.r_hat_g = r_hat_g;
    params.c_hat = 10.0;
    params.xi = 1.0;
    params.kappa = 1.0;
    switch (kind) {
        case ScenarioKind::Manufactured:
            params.lambda_m = 2.0;
            // The forcing closes the charge/current balance only when
            // lambda_hat_d^2 * r_hat_g = 1.
            params.lambda_hat_d = 1.0 / std::sqrt(r_hat_g);
            break;
        case ScenarioKind::Soliton1d:
        case ScenarioKind::Soliton2d:
            params.lambda_m = 25.0;
            params.lambda_hat_d = 1.0;
            break;
        case ScenarioKind::BrioWu:
            params.lambda_m = 1836.0;
            params.lambda_hat_d = 0.01;
            break;
    }
    return params;
}

// Stationary soliton plasma: electron pressure tied to the ion density,
// ion/electron pressure ratio 1/100, charge-neutral densities.
PrimState soliton_prim(double rho_i, const PhysParams& params) {
    PrimState q{};
    q.rho_i = rho_i;
    q.v_i = {0.0, 0.0, 0.0};
    q.rho_e = rho_i / params.lambda_m;
    q.v_e = {0.0, 0.0, 0.0};
    q.p_e = 5.0 * rho_i;
    q.p_i = q.p_e / 100.0;
    q.B = {0.0, 0.0, 0.0};
    q.E = {0.0, 0.0, 0.0};
    return q;
}

Field assemble_field(ScenarioKind kind, int nx, int ny, const PhysParams& params) {
    switch (kind) {
        case ScenarioKind::Manufactured: {
            Field field(Grid::line(nx, 0.0, 1.0), BoundaryCondition::Periodic);
            for (int i = 0; i < nx; ++i) {
                const double x = field.grid.x_center(i);
                const double rho = 2.0 + std::sin(two_pi * x);
                PrimState q{};
                q.rho_i = rho;
                q.v_i = {1.0, 0.0, 0.0};
                q.p_i = 1.0;
                q.rho_e = rho;
                q.v_e = {1.0, 0.0, 0.0};
                q.p_e = 1.0;
                q.B = {0.0, std::sin(two_pi * x), 0.0};
                q.E = {0.0, 0.0, -std::sin(two_pi * x)};
                field.at(i, 0) = prim_to_cons(q, params);
            }
            return field;
        }
        case ScenarioKind::Soliton1d: {
            const double length = 12.0;
            Field field(Grid::line(nx, 0.0, length), BoundaryCondition::Periodic);
            for (int i = 0; i < nx; ++i) {
                const double x = field.grid.x_center(i);
                const double rho = 1.0 + std::exp(-25.0 * std::abs(x - length / 3.0));
                field.at(i, 0) = prim_to_cons(soliton_prim(rho, params), params);
            }
            return field;
        }
        case ScenarioKind::BrioWu: {
            const double p0 = 1e-4;  // pressure reference of the non-dimensionalization
            Field field(Grid::line(nx, 0.0, 1.0), BoundaryCondition::ZeroGradient);
            for (int i = 0; i < nx; ++i) {
                const bool left = field.grid.x_center(i) < 0.5;
                PrimState q{};
                q.rho_i = left ? 1.0 : 0.125;
                q.p_i = (left ? 5e-5 : 5e-6) / p0;
                q.rho_e = q.rho_i / params.lambda_m;
                q.p_e = q.p_i;
                q.v_i = {0.0, 0.0, 0.0};
                q.v_e = {0.0, 0.0, 0.0};
                q.B = {0.75, left ? 1.0 : -1.0, 0.0};
                q.E = {0.0, 0.0, 0.0};
                field.at(i, 0) = prim_to_cons(q, params);
            }
            return field;
        }
        case ScenarioKind::Soliton2d: {
            const double lx = 2.0;
            const double ly = 2.0;
            Field field(Grid::rect(nx, ny, 0.0, lx, 0.0, ly), BoundaryCondition::ZeroGradient);
            for (int j = 0; j < ny; ++j) {
                const double y = field.grid.y_center(j);
                for (int i = 0; i < nx; ++i) {
                    const double x = field.grid.x_center(i);
                    const double r2 = (x - lx / 2.0) * (x - lx / 2.0) +
                                      (y - ly / 2.0) * (y - ly / 2.0);
                    const double rho = 1.0 + 5.0 * std::exp(-500.0 * r2);
                    field.at(i, j) = prim_to_cons(soliton_prim(rho, params), params);
                }
            }
            return field;
        }
    }
    throw ConfigError("unhandled scenario");
}

ScenarioSetup assemble_scenario(ScenarioKind kind, int nx, int ny, const PhysParams& params) {
    ScenarioSetup setup{assemble_field(kind, nx, ny, params), params, nullptr, nullptr};
    if (kind == ScenarioKind::Manufactured) {
        setup.forcing = [](double x, double, double t) {
            const double w = 2.0 + std::sin(two_pi * (x - t));
            Vec18 k{};
            k[EX] = -w;
            k[PHI] = w;
            return k;
        };
        setup.exact_density = [](double x, double t) {
            return 2.0 + std::sin(two_pi * (x - t));
        };
    }
    return setup;
}

} // namespace

ScenarioSetup build_manufactured(int nx, double r_hat_g) {
    return assemble_scenario(ScenarioKind::Manufactured, nx, 1,
                             canonical_params(ScenarioKind::Manufactured, r_hat_g));
}

ScenarioSetup build_soliton1d(int nx, double r_hat_g) {
    return assemble_scenario(ScenarioKind::Soliton1d, nx, 1,
                             canonical_params(ScenarioKind::Soliton1d, r_hat_g));
}

ScenarioSetup build_briowu(int nx, double r_hat_g) {
    return assemble_scenario(ScenarioKind::BrioWu, nx, 1,
                             canonical_params(ScenarioKind::BrioWu, r_hat_g));
}

ScenarioSetup build_soliton2d(int nx, int ny, double r_hat_g) {
    return assemble_scenario(ScenarioKind::Soliton2d, nx, ny,
                             canonical_params(ScenarioKind::Soliton2d, r_hat_g));
}

ScenarioSetup build_scenario(const ScenarioConfig& config) {
    double default_rg = 1e-2;
    if (config.scenario == ScenarioKind::Manufactured) default_rg = 100.0;
    if (config.scenario == ScenarioKind::BrioWu) default_rg = 10.0;
    const auto rg = config.phys_overrides.find("r_hat_g");
    PhysParams params = canonical_params(
        config.scenario, rg == config.phys_overrides.end() ? default_rg : rg->second);
    for (const auto& [key, value] : config.phys_overrides) {
        if (key == "gamma") params.gamma = value;
        else if (key == "lambda_m") params.lambda_m = value;
        else if (key == "r_hat_g") params.r_hat_g = value;
        else if (key == "lambda_hat_d") params.lambda_hat_d = value;
        else if (key == "c_hat") params.c_hat = value;
        else if (key == "xi") params.xi = value;
        else if (key == "kappa") params.kappa = value;
    }
    params.validate();
    return assemble_scenario(config.scenario, config.nx, config.ny, params);
}

double l1_error(const Field& field,
                const std::function<double(double, double)>& exact_density, double t) {
    const Grid& g = field.grid;
    double acc = 0.0;
    for (int i = 0; i < g.nx; ++i) {
        acc += std::abs(field.at(i, 0)[RHO_I] - exact_density(g.x_center(i), t)) * g.dx();
    }
    return acc;
}

const char* scenario_name(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::Manufactured: return "manufactured";
        case ScenarioKind::Soliton1d: return "soliton1d";
        case ScenarioKind::BrioWu: return "briowu";
        case ScenarioKind::Soliton2d: return "soliton2d";
    }
    return "unknown";
}

} // namespace tfp
