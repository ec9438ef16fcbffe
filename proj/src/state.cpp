#include "tfplasma/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tfplasma/errors.hpp"

namespace tfp {

namespace {

double dot3(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 cross3(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

const char* species_name(Species s) {
    return s == Species::Ion ? "ion" : "electron";
}

void require_positive(double value, const char* what, Species s) {
    if (!(value > 0.0)) {
        throw AdmissibilityError(std::string("non-positive ") + what + " for " +
                                 species_name(s) + " species: " + std::to_string(value));
    }
}

} // namespace

void PhysParams::validate() const {
    if (!(gamma > 1.0)) throw ConfigError("gamma must be > 1");
    if (!(lambda_m >= 1.0)) throw ConfigError("lambda_m must be >= 1");
    if (!(r_hat_g > 0.0)) throw ConfigError("r_hat_g must be > 0");
    if (!(lambda_hat_d > 0.0)) throw ConfigError("lambda_hat_d must be > 0");
    if (!(c_hat > 0.0)) throw ConfigError("c_hat must be > 0");
    if (!(xi >= 0.0)) throw ConfigError("xi must be >= 0");
    if (!(kappa >= 0.0)) throw ConfigError("kappa must be >= 0");
}

double WaveSpeeds::max() const {
    return std::max({ion, electron, maxwell});
}

ConsState prim_to_cons(const PrimState& q, const PhysParams& params) {
    require_positive(q.rho_i, "density", Species::Ion);
    require_positive(q.rho_e, "density", Species::Electron);
    require_positive(q.p_i, "pressure", Species::Ion);
    require_positive(q.p_e, "pressure", Species::Electron);

    const double gm1 = params.gamma - 1.0;
    ConsState u{};
    u[RHO_I] = q.rho_i;
    u[MX_I] = q.rho_i * q.v_i[0];
    u[MY_I] = q.rho_i * q.v_i[1];
    u[MZ_I] = q.rho_i * q.v_i[2];
    u[EN_I] = q.p_i / gm1 + 0.5 * q.rho_i * dot3(q.v_i, q.v_i);
    u[RHO_E] = q.rho_e;
    u[MX_E] = q.rho_e * q.v_e[0];
    u[MY_E] = q.rho_e * q.v_e[1];
    u[MZ_E] = q.rho_e * q.v_e[2];
    u[EN_E] = q.p_e / gm1 + 0.5 * q.rho_e * dot3(q.v_e, q.v_e);
    u[BX] = q.B[0];
    u[BY] = q.B[1];
    u[BZ] = q.B[2];
    u[EX] = q.E[0];
    u[EY] = q.E[1];
    u[EZ] = q.E[2];
    u[PHI] = q.phi;
    u[PSI] = q.psi;
    return u;
}

PrimState cons_to_prim(const ConsState& u, const PhysParams& params) {
    const double gm1 = params.gamma - 1.0;
    PrimState q{};

    require_positive(u[RHO_I], "density", Species::Ion);
    q.rho_i = u[RHO_I];
    q.v_i = {u[MX_I] / q.rho_i, u[MY_I] / q.rho_i, u[MZ_I] / q.rho_i};
    q.p_i = gm1 * (u[EN_I] - 0.5 * q.rho_i * dot3(q.v_i, q.v_i));
    require_positive(q.p_i, "pressure", Species::Ion);

    require_positive(u[RHO_E], "density", Species::Electron);
    q.rho_e = u[RHO_E];
    q.v_e = {u[MX_E] / q.rho_e, u[MY_E] / q.rho_e, u[MZ_E] / q.rho_e};
    q.p_e = gm1 * (u[EN_E] - 0.5 * q.rho_e * dot3(q.v_e, q.v_e));
    require_positive(q.p_e, "pressure", Species::Electron);

    q.B = {u[BX], u[BY], u[BZ]};
    q.E = {u[EX], u[EY], u[EZ]};
    q.phi = u[PHI];
    q.psi = u[PSI];
    return q;
}

void check_admissible(const ConsState& u, const PhysParams& params) {
    (void)cons_to_prim(u, params);
}

namespace {

// Euler flux of one species in direction d (0 = x, 1 = y).
Vec5 fluid_flux(double rho, const Vec3& v, double p, double energy, int d) {
    const double vn = v[d];
    Vec5 f{};
    f[0] = rho * vn;
    f[1] = rho * vn * v[0];
    f[2] = rho * vn * v[1];
    f[3] = rho * vn * v[2];
    f[static_cast<std::size_t>(1 + d)] += p;
    f[4] = (energy + p) * vn;
    return f;
}

} // namespace

// Maxwell flux in direction dir; the B/E rows are the direction columns of
// the rotation matrices plus the cleaning-potential couplings.
Vec8 maxwell_flux(const ConsState& u, Axis dir, const PhysParams& params) {
    const double c2 = params.c_hat * params.c_hat;
    Vec8 f{};
    if (dir == Axis::X) {
        f[0] = params.kappa * u[PSI];
        f[1] = -u[EZ];
        f[2] = u[EY];
        f[3] = params.xi * c2 * u[PHI];
        f[4] = c2 * u[BZ];
        f[5] = -c2 * u[BY];
        f[6] = params.xi * u[EX];
        f[7] = params.kappa * c2 * u[BX];
    } else {
        f[0] = u[EZ];
        f[1] = params.kappa * u[PSI];
        f[2] = -u[EX];
        f[3] = -c2 * u[BZ];
        f[4] = params.xi * c2 * u[PHI];
        f[5] = c2 * u[BX];
        f[6] = params.xi * u[EY];
        f[7] = params.kappa * c2 * u[BY];
    }
    return f;
}

Vec18 physical_flux(const ConsState& u, Axis dir, const PhysParams& params) {
    const PrimState q = cons_to_prim(u, params);
    const int d = static_cast<int>(dir);
    const Vec5 fi = fluid_flux(q.rho_i, q.v_i, q.p_i, u[EN_I], d);
    const Vec5 fe = fluid_flux(q.rho_e, q.v_e, q.p_e, u[EN_E], d);
    const Vec8 fm = maxwell_flux(u, dir, params);

    Vec18 f{};
    for (int k = 0; k < 5; ++k) f[static_cast<std::size_t>(k)] = fi[static_cast<std::size_t>(k)];
    for (int k = 0; k < 5; ++k) f[static_cast<std::size_t>(5 + k)] = fe[static_cast<std::size_t>(k)];
    for (int k = 0; k < 8; ++k) f[static_cast<std::size_t>(10 + k)] = fm[static_cast<std::size_t>(k)];
    return f;
}

Vec18 source(const ConsState& u, const PhysParams& params) {
    const PrimState q = cons_to_prim(u, params);
    const double inv_rg = 1.0 / params.r_hat_g;
    const double inv_k = 1.0 / params.debye_k();

    const Vec3 fi = cross3(q.v_i, q.B);
    const Vec3 fe = cross3(q.v_e, q.B);

    Vec18 s{};
    // Lorentz force and work on each species; the electron carries the
    // charge-to-mass factor -lambda_m.
    s[MX_I] = inv_rg * q.rho_i * (q.E[0] + fi[0]);
    s[MY_I] = inv_rg * q.rho_i * (q.E[1] + fi[1]);
    s[MZ_I] = inv_rg * q.rho_i * (q.E[2] + fi[2]);
    s[EN_I] = inv_rg * q.rho_i * dot3(q.E, q.v_i);
    const double ce = -params.lambda_m * inv_rg;
    s[MX_E] = ce * q.rho_e * (q.E[0] + fe[0]);
    s[MY_E] = ce * q.rho_e * (q.E[1] + fe[1]);
    s[MZ_E] = ce * q.rho_e * (q.E[2] + fe[2]);
    s[EN_E] = ce * q.rho_e * dot3(q.E, q.v_e);
    // Current and charge feed the electric field and the phi potential.
    const double ri = params.r_i();
    const double re = params.r_e();
    s[EX] = -inv_k * (ri * u[MX_I] + re * u[MX_E]);
    s[EY] = -inv_k * (ri * u[MY_I] + re * u[MY_E]);
    s[EZ] = -inv_k * (ri * u[MZ_I] + re * u[MZ_E]);
    s[PHI] = params.xi * inv_k * (ri * q.rho_i + re * q.rho_e);
    return s;
}

namespace {

double fluid_entropy(double rho, double p, double gamma) {
    const double s = std::log(p) - gamma * std::log(rho);
    return -rho * s / (gamma - 1.0);
}

} // namespace

EntropyTriple entropy(const ConsState& u, const PhysParams& params) {
    const PrimState q = cons_to_prim(u, params);
    const double c2 = params.c_hat * params.c_hat;
    EntropyTriple e{};
    e.ion = fluid_entropy(q.rho_i, q.p_i, params.gamma);
    e.electron = fluid_entropy(q.rho_e, q.p_e, params.gamma);
    e.em = 0.5 * (dot3(q.B, q.B) + u[PHI] * u[PHI]) +
           0.5 * (dot3(q.E, q.E) + u[PSI] * u[PSI]) / c2;
    return e;
}

namespace {

// Gradient of the fluid entropy in the conservative variables of one species.
Vec5 fluid_entropy_vars(double rho, const Vec3& v, double p, double gamma) {
    const double s = std::log(p) - gamma * std::log(rho);
    const double rho_over_p = rho / p;
    Vec5 w{};
    w[0] = (gamma - s) / (gamma - 1.0) - 0.5 * rho_over_p * dot3(v, v);
    w[1] = rho_over_p * v[0];
    w[2] = rho_over_p * v[1];
    w[3] = rho_over_p * v[2];
    w[4] = -rho_over_p;
    return w;
}

} // namespace

EntropyVars entropy_vars(const ConsState& u, const PhysParams& params) {
    const PrimState q = cons_to_prim(u, params);
    const Vec5 wi = fluid_entropy_vars(q.rho_i, q.v_i, q.p_i, params.gamma);
    const Vec5 we = fluid_entropy_vars(q.rho_e, q.v_e, q.p_e, params.gamma);
    const double inv_c2 = 1.0 / (params.c_hat * params.c_hat);

    EntropyVars v{};
    for (int k = 0; k < 5; ++k) v[static_cast<std::size_t>(k)] = wi[static_cast<std::size_t>(k)];
    for (int k = 0; k < 5; ++k) v[static_cast<std::size_t>(5 + k)] = we[static_cast<std::size_t>(k)];
    v[BX] = u[BX];
    v[BY] = u[BY];
    v[BZ] = u[BZ];
    v[EX] = u[EX] * inv_c2;
    v[EY] = u[EY] * inv_c2;
    v[EZ] = u[EZ] * inv_c2;
    v[PHI] = u[PHI];
    v[PSI] = u[PSI] * inv_c2;
    return v;
}

EntropyTriple entropy_potential(const ConsState& u, Axis dir, const PhysParams& params) {
    const PrimState q = cons_to_prim(u, params);
    const int d = static_cast<int>(dir);

    EntropyTriple chi{};
    chi.ion = q.rho_i * q.v_i[d];
    chi.electron = q.rho_e * q.v_e[d];

    // The EM entropy is quadratic, so its potential is half the contraction
    // of the entropy variables with the linear flux.
    const Vec8 fm = maxwell_flux(u, dir, params);
    const EntropyVars v = entropy_vars(u, params);
    double acc = 0.0;
    for (int k = 0; k < 8; ++k) {
        acc += v[static_cast<std::size_t>(10 + k)] * fm[static_cast<std::size_t>(k)];
    }
    chi.em = 0.5 * acc;
    return chi;
}

WaveSpeeds wave_speeds(const ConsState& u, Axis dir, const PhysParams& params) {
    const PrimState q = cons_to_prim(u, params);
    const int d = static_cast<int>(dir);
    WaveSpeeds ws{};
    ws.ion = std::abs(q.v_i[d]) + std::sqrt(params.gamma * q.p_i / q.rho_i);
    ws.electron = std::abs(q.v_e[d]) + std::sqrt(params.gamma * q.p_e / q.rho_e);
    ws.maxwell = params.c_hat * std::max({1.0, params.xi, params.kappa});
    return ws;
}

} // namespace tfp
