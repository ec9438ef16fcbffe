#include "tfplasma/ecflux.hpp"

#include <cmath>
#include <string>

#include "tfplasma/errors.hpp"

namespace tfp {

double log_mean(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw AdmissibilityError("log_mean requires positive arguments, got " +
                                 std::to_string(a) + ", " + std::to_string(b));
    }
    if (a == b) return a;
    if (a > b) std::swap(a, b);  // canonical order keeps the mean bitwise symmetric
    if (b / a - 1.0 < 1e-2) {
        // (b-a)/log(b/a) rewritten through zeta = (b-a)/(b+a).
        const double zeta = (b - a) / (b + a);
        const double z2 = zeta * zeta;
        return (a + b) / (2.0 * (1.0 + z2 * (1.0 / 3.0 + z2 * (1.0 / 5.0 + z2 / 7.0))));
    }
    return (b - a) / std::log1p((b - a) / a);
}

namespace {

struct FluidSide {
    double rho;
    Vec3 v;
    double p;
};

FluidSide fluid_side(const ConsState& u, Species s, const PhysParams& params) {
    const PrimState q = cons_to_prim(u, params);
    if (s == Species::Ion) return {q.rho_i, q.v_i, q.p_i};
    return {q.rho_e, q.v_e, q.p_e};
}

Vec5 param_vector(const FluidSide& f) {
    const double w = std::sqrt(f.rho / f.p);
    return {w, w * f.v[0], w * f.v[1], w * f.v[2], w * f.p};
}

} // namespace

Vec5 ec_flux_fluid(const ConsState& left, const ConsState& right, Axis dir,
                   Species species, const PhysParams& params) {
    const Vec5 zl = param_vector(fluid_side(left, species, params));
    const Vec5 zr = param_vector(fluid_side(right, species, params));

    Vec5 zb{};
    for (int k = 0; k < 5; ++k) {
        zb[static_cast<std::size_t>(k)] =
            0.5 * (zl[static_cast<std::size_t>(k)] + zr[static_cast<std::size_t>(k)]);
    }
    const double z1_ln = log_mean(zl[0], zr[0]);
    const double z5_ln = log_mean(zl[4], zr[4]);
    const double m2 = zb[1] / zb[0];
    const double m3 = zb[2] / zb[0];
    const double m4 = zb[3] / zb[0];
    const double m5 = zb[4] / zb[0];
    const double g = (params.gamma + 1.0) / (params.gamma - 1.0);

    Vec5 f{};
    if (dir == Axis::X) {
        f[0] = zb[1] * z5_ln;
        f[1] = m5 + m2 * f[0];
        f[2] = m3 * f[0];
        f[3] = m4 * f[0];
    } else {
        f[0] = zb[2] * z5_ln;
        f[1] = m2 * f[0];
        f[2] = m5 + m3 * f[0];
        f[3] = m4 * f[0];
    }
    f[4] = (g * f[0] / z1_ln + zb[1] * f[1] + zb[2] * f[2] + zb[3] * f[3]) / (2.0 * zb[0]);
    return f;
}

Vec8 ec_flux_maxwell(const ConsState& left, const ConsState& right, Axis dir,
                     const PhysParams& params) {
    const Vec8 fl = maxwell_flux(left, dir, params);
    const Vec8 fr = maxwell_flux(right, dir, params);
    Vec8 f{};
    for (int k = 0; k < 8; ++k) {
        f[static_cast<std::size_t>(k)] = 0.5 * (fl[static_cast<std::size_t>(k)] +
                                                fr[static_cast<std::size_t>(k)]);
    }
    return f;
}

Vec18 ec_flux(const ConsState& left, const ConsState& right, Axis dir,
              const PhysParams& params) {
    const Vec5 fi = ec_flux_fluid(left, right, dir, Species::Ion, params);
    const Vec5 fe = ec_flux_fluid(left, right, dir, Species::Electron, params);
    const Vec8 fm = ec_flux_maxwell(left, right, dir, params);
    Vec18 f{};
    for (int k = 0; k < 5; ++k) f[static_cast<std::size_t>(k)] = fi[static_cast<std::size_t>(k)];
    for (int k = 0; k < 5; ++k) f[static_cast<std::size_t>(5 + k)] = fe[static_cast<std::size_t>(k)];
    for (int k = 0; k < 8; ++k) f[static_cast<std::size_t>(10 + k)] = fm[static_cast<std::size_t>(k)];
    return f;
}

Vec18 ec_flux(const InterfacePair& pair, const PhysParams& params) {
    return ec_flux(pair.left, pair.right, pair.dir, params);
}

} // namespace tfp
