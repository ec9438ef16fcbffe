#pragma once

#include <functional>
#include <vector>

#include "tfplasma/mesh.hpp"

namespace tfp {

/// Strong-stability-preserving Runge-Kutta coefficients. Every stage is a
/// convex combination of forward-Euler-type updates: each alpha row sums to
/// one and all entries are non-negative.
struct Tableau {
    int order = 0;
    std::vector<std::vector<double>> alpha;
    std::vector<std::vector<double>> beta;
    std::vector<double> stage_time;  // fraction of dt at which stage l is evaluated

    int stages() const { return static_cast<int>(alpha.size()); }
};

/// Coefficient set for order 2 or 3.
Tableau tableau(int order);

/// Advective time-step bound: cfl divided by the largest per-cell sum of
/// directional wave speeds over mesh spacings.
double cfl_dt(const Field& field, double cfl, const PhysParams& params);

/// Spatial operator: fills ghosts and returns the flux-difference (plus
/// forcing) increment for the interior cells at the given stage time.
using SpatialOp = std::function<std::vector<Vec18>(Field&, double)>;

/// One SSP-RK step with fluxes and sources both explicit.
Field explicit_step(const Field& field, double t, double dt, const Tableau& tab,
                    const SpatialOp& rhs_op, const PhysParams& params,
                    bool with_source = true);

/// One SSP-RK step with fluxes explicit and the stiff source absorbed into
/// each intermediate Euler update through the exact per-cell solve.
Field imex_step(const Field& field, double t, double dt, const Tableau& tab,
                const SpatialOp& rhs_op, const PhysParams& params,
                bool with_source = true);

} // namespace tfp
