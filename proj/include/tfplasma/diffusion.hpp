#pragma once

#include "tfplasma/state.hpp"

namespace tfp {

enum class LimiterKind { MinMod };

/// Interface eigensystem: block-diagonal scaled right eigenvectors
/// (ion 5x5, electron 5x5, EM diagonal) and the Rusanov block eigenvalues.
/// The scaling makes R R^T equal the entropy symmetrizer du/dV at the
/// evaluation state, so R Lambda R^T dissipates entropy for Lambda >= 0.
struct EigenSystem {
    std::array<std::array<double, 5>, 5> ion;       // [row][col]
    std::array<std::array<double, 5>, 5> electron;  // [row][col]
    Vec8 em_diag;
    double lam_ion;
    double lam_electron;
    double lam_global;

    /// W = R^T V
    Vec18 scaled_vars(const Vec18& v) const;

    /// R (Lambda w) with the block eigenvalues applied componentwise.
    Vec18 apply_r_lambda(const Vec18& w) const;

    /// R w (no eigenvalue weighting).
    Vec18 apply_r(const Vec18& w) const;

    /// Per-component eigenvalue diagonal.
    Vec18 lambda_diag() const;
};

EigenSystem eigen_system(const ConsState& left, const ConsState& right, Axis dir,
                         const PhysParams& params);

/// Minmod slope limiter.
double minmod_phi(double theta);

/// Limited jump at an interface from the three neighbouring jumps
/// (left, centre, right). Zero-denominator ratios count as theta = 0.
double limited_jump(double delta_minus, double delta_centre, double delta_plus,
                    LimiterKind limiter);

/// Limited jump at interface i+1/2 from one scalar component of the scaled
/// entropy variables at cells i-1, i, i+1, i+2.
double reconstruct_jump(double w_mm, double w_m, double w_p, double w_pp,
                        LimiterKind limiter);

/// First-order dissipation term D [V].
Vec18 diffusion_jump_o1(const ConsState& left, const ConsState& right, Axis dir,
                        const PhysParams& params);

/// Second-order dissipation term D [P] built from sign-preserving
/// reconstruction of the scaled entropy variables. The stencil holds the
/// four states around the centre interface.
Vec18 diffusion_jump_o2(const std::array<ConsState, 4>& stencil, Axis dir,
                        const PhysParams& params);

/// Entropy-stable interface flux: EC flux minus half the dissipation jump.
/// Order 1 uses only the middle pair of the stencil.
Vec18 es_interface_flux(const std::array<ConsState, 4>& stencil, Axis dir,
                        int order, const PhysParams& params);

} // namespace tfp
