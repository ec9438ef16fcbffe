#pragma once

#include <array>

namespace tfp {

inline constexpr int n_vars = 18;

using Vec3 = std::array<double, 3>;
using Vec5 = std::array<double, 5>;
using Vec8 = std::array<double, 8>;
using Vec18 = std::array<double, n_vars>;

/// Component order of the conservative state vector: ion fluid block,
/// electron fluid block, electromagnetic block with cleaning potentials.
enum Comp : int {
    RHO_I = 0, MX_I = 1, MY_I = 2, MZ_I = 3, EN_I = 4,
    RHO_E = 5, MX_E = 6, MY_E = 7, MZ_E = 8, EN_E = 9,
    BX = 10, BY = 11, BZ = 12,
    EX = 13, EY = 14, EZ = 15,
    PHI = 16, PSI = 17,
};

using ConsState = Vec18;
using EntropyVars = Vec18;

enum class Axis { X = 0, Y = 1 };
enum class Species { Ion = 0, Electron = 1 };

/// Non-dimensional model constants. The derived charge-to-mass quantities
/// follow from the ion charge and mass being the reference scales.
struct PhysParams {
    double gamma = 5.0 / 3.0;   // ratio of specific heats
    double lambda_m = 1.0;      // ion/electron mass ratio m_i/m_e
    double r_hat_g = 1.0;       // normalized Larmor radius
    double lambda_hat_d = 1.0;  // normalized Debye length
    double c_hat = 10.0;        // normalized speed of light
    double xi = 1.0;            // electric-field cleaning speed factor
    double kappa = 1.0;         // magnetic-field cleaning speed factor

    double r_i() const { return 1.0; }
    double r_e() const { return -lambda_m; }
    double r_eg() const { return -r_hat_g / lambda_m; }
    double debye_k() const { return lambda_hat_d * lambda_hat_d * r_hat_g; }

    /// Throws ConfigError if any constant is outside its admissible range.
    void validate() const;
};

/// Primitive description of one cell state.
struct PrimState {
    double rho_i;
    Vec3 v_i;
    double p_i;
    double rho_e;
    Vec3 v_e;
    double p_e;
    Vec3 B;
    Vec3 E;
    double phi;
    double psi;
};

/// Entropy densities of the three sub-systems.
struct EntropyTriple {
    double ion;
    double electron;
    double em;
};

struct WaveSpeeds {
    double ion;
    double electron;
    double maxwell;

    double max() const;
};

ConsState prim_to_cons(const PrimState& prim, const PhysParams& params);
PrimState cons_to_prim(const ConsState& cons, const PhysParams& params);

/// Throws AdmissibilityError unless densities and pressures are positive.
void check_admissible(const ConsState& cons, const PhysParams& params);

Vec18 physical_flux(const ConsState& cons, Axis dir, const PhysParams& params);

/// Electromagnetic block of the physical flux. Linear in the state, so it
/// needs no admissibility check.
Vec8 maxwell_flux(const ConsState& cons, Axis dir, const PhysParams& params);

Vec18 source(const ConsState& cons, const PhysParams& params);

EntropyTriple entropy(const ConsState& cons, const PhysParams& params);
EntropyVars entropy_vars(const ConsState& cons, const PhysParams& params);
EntropyTriple entropy_potential(const ConsState& cons, Axis dir, const PhysParams& params);
WaveSpeeds wave_speeds(const ConsState& cons, Axis dir, const PhysParams& params);

} // namespace tfp
