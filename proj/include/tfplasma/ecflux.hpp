#pragma once

#include "tfplasma/state.hpp"

namespace tfp {

/// Two states meeting at a cell interface normal to `dir`.
struct InterfacePair {
    ConsState left;
    ConsState right;
    Axis dir;
};

/// Logarithmic mean of two positive numbers, with a series branch near
/// equal arguments so no precision is lost to cancellation.
double log_mean(double a, double b);

/// Entropy-conservative two-point flux for one fluid species.
Vec5 ec_flux_fluid(const ConsState& left, const ConsState& right, Axis dir,
                   Species species, const PhysParams& params);

/// Entropy-conservative two-point flux for the electromagnetic block
/// (plain average; the flux is linear).
Vec8 ec_flux_maxwell(const ConsState& left, const ConsState& right, Axis dir,
                     const PhysParams& params);

/// Assembled 18-component entropy-conservative flux.
Vec18 ec_flux(const ConsState& left, const ConsState& right, Axis dir,
              const PhysParams& params);

Vec18 ec_flux(const InterfacePair& pair, const PhysParams& params);

} // namespace tfp
