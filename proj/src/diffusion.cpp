#include "tfplasma/diffusion.hpp"

#include <algorithm>
#include <cmath>

#include "tfplasma/ecflux.hpp"

namespace tfp {

namespace {

// Scaled right-eigenvector block of one Euler species, evaluated at
// (rho, v, p). Columns ordered (v_n - c, v_n, shear, shear, v_n + c); the
// column scalings make R R^T equal the entropy Hessian inverse.
std::array<std::array<double, 5>, 5> fluid_eigenvectors(double rho, const Vec3& v,
                                                        double p, double gamma,
                                                        Axis dir) {
    const double c = std::sqrt(gamma * p / rho);
    const double q2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    const double h = c * c / (gamma - 1.0) + 0.5 * q2;
    const double s_ac = std::sqrt(rho / (2.0 * gamma));       // acoustic columns
    const double s_en = std::sqrt(rho * (gamma - 1.0) / gamma); // entropy column
    const double s_sh = std::sqrt(p);                           // shear columns

    const int d = static_cast<int>(dir);
    const double vn = v[d];

    std::array<std::array<double, 5>, 5> r{};
    auto set_col = [&r](int col, double a0, double a1, double a2, double a3, double a4,
                        double scale) {
        r[0][static_cast<std::size_t>(col)] = scale * a0;
        r[1][static_cast<std::size_t>(col)] = scale * a1;
        r[2][static_cast<std::size_t>(col)] = scale * a2;
        r[3][static_cast<std::size_t>(col)] = scale * a3;
        r[4][static_cast<std::size_t>(col)] = scale * a4;
    };

    Vec3 vm = v;  // velocity of the minus-acoustic column
    Vec3 vp = v;  // velocity of the plus-acoustic column
    vm[static_cast<std::size_t>(d)] -= c;
    vp[static_cast<std::size_t>(d)] += c;

    set_col(0, 1.0, vm[0], vm[1], vm[2], h - c * vn, s_ac);
    set_col(1, 1.0, v[0], v[1], v[2], 0.5 * q2, s_en);
    if (dir == Axis::X) {
        set_col(2, 0.0, 0.0, 1.0, 0.0, v[1], s_sh);
    } else {
        set_col(2, 0.0, 1.0, 0.0, 0.0, v[0], s_sh);
    }
    set_col(3, 0.0, 0.0, 0.0, 1.0, v[2], s_sh);
    set_col(4, 1.0, vp[0], vp[1], vp[2], h + c * vn, s_ac);
    return r;
}

ConsState average_state(const ConsState& a, const ConsState& b) {
    ConsState m{};
    for (int k = 0; k < n_vars; ++k) {
        m[static_cast<std::size_t>(k)] =
            0.5 * (a[static_cast<std::size_t>(k)] + b[static_cast<std::size_t>(k)]);
    }
    return m;
}

} // namespace

EigenSystem eigen_system(const ConsState& left, const ConsState& right, Axis dir,
                         const PhysParams& params) {
    const ConsState avg = average_state(left, right);
    const PrimState q = cons_to_prim(avg, params);

    EigenSystem es{};
    es.ion = fluid_eigenvectors(q.rho_i, q.v_i, q.p_i, params.gamma, dir);
    es.electron = fluid_eigenvectors(q.rho_e, q.v_e, q.p_e, params.gamma, dir);

    // EM block: the quadratic entropy weight is diagonal, so orthogonal
    // eigenvectors with row scaling sqrt(c^2) on the E/psi rows give
    // R R^T = diag(1,1,1, c^2,c^2,c^2, 1, c^2) exactly.
    es.em_diag = {1.0, 1.0, 1.0,
                  params.c_hat, params.c_hat, params.c_hat,
                  1.0, params.c_hat};

    const WaveSpeeds wl = wave_speeds(left, dir, params);
    const WaveSpeeds wr = wave_speeds(right, dir, params);
    es.lam_ion = std::max(wl.ion, wr.ion);
    es.lam_electron = std::max(wl.electron, wr.electron);
    es.lam_global = std::max({es.lam_ion, es.lam_electron, wl.maxwell, wr.maxwell});
    return es;
}

Vec18 EigenSystem::scaled_vars(const Vec18& v) const {
    Vec18 w{};
    for (int col = 0; col < 5; ++col) {
        double wi = 0.0;
        double we = 0.0;
        for (int row = 0; row < 5; ++row) {
            wi += ion[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] *
                  v[static_cast<std::size_t>(row)];
            we += electron[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] *
                  v[static_cast<std::size_t>(5 + row)];
        }
        w[static_cast<std::size_t>(col)] = wi;
        w[static_cast<std::size_t>(5 + col)] = we;
    }
    for (int k = 0; k < 8; ++k) {
        w[static_cast<std::size_t>(10 + k)] =
            em_diag[static_cast<std::size_t>(k)] * v[static_cast<std::size_t>(10 + k)];
    }
    return w;
}

Vec18 EigenSystem::apply_r(const Vec18& w) const {
    Vec18 out{};
    for (int row = 0; row < 5; ++row) {
        double oi = 0.0;
        double oe = 0.0;
        for (int col = 0; col < 5; ++col) {
            oi += ion[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] *
                  w[static_cast<std::size_t>(col)];
            oe += electron[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] *
                  w[static_cast<std::size_t>(5 + col)];
        }
        out[static_cast<std::size_t>(row)] = oi;
        out[static_cast<std::size_t>(5 + row)] = oe;
    }
    for (int k = 0; k < 8; ++k) {
        out[static_cast<std::size_t>(10 + k)] =
            em_diag[static_cast<std::size_t>(k)] * w[static_cast<std::size_t>(10 + k)];
    }
    return out;
}

Vec18 EigenSystem::lambda_diag() const {
    Vec18 lam{};
    for (int k = 0; k < 5; ++k) lam[static_cast<std::size_t>(k)] = lam_ion;
    for (int k = 5; k < 10; ++k) lam[static_cast<std::size_t>(k)] = lam_electron;
    for (int k = 10; k < 18; ++k) lam[static_cast<std::size_t>(k)] = lam_global;
    return lam;
}

Vec18 EigenSystem::apply_r_lambda(const Vec18& w) const {
    Vec18 lw = w;
    const Vec18 lam = lambda_diag();
    for (int k = 0; k < n_vars; ++k) {
        lw[static_cast<std::size_t>(k)] *= lam[static_cast<std::size_t>(k)];
    }
    return apply_r(lw);
}

double minmod_phi(double theta) {
    if (theta < 0.0) return 0.0;
    if (theta <= 1.0) return theta;
    return 1.0;
}

double limited_jump(double delta_minus, double delta_centre, double delta_plus,
                    LimiterKind limiter) {
    (void)limiter;  // single limiter kind for now
    if (delta_centre == 0.0) return 0.0;
    const double theta_left = delta_minus / delta_centre;
    const double theta_right = delta_plus / delta_centre;
    return (1.0 - 0.5 * (minmod_phi(theta_left) + minmod_phi(theta_right))) * delta_centre;
}

double reconstruct_jump(double w_mm, double w_m, double w_p, double w_pp,
                        LimiterKind limiter) {
    return limited_jump(w_m - w_mm, w_p - w_m, w_pp - w_p, limiter);
}

namespace {

Vec18 jump_entropy_vars(const ConsState& left, const ConsState& right,
                        const PhysParams& params) {
    const Vec18 vl = entropy_vars(left, params);
    const Vec18 vr = entropy_vars(right, params);
    Vec18 dv{};
    for (int k = 0; k < n_vars; ++k) {
        dv[static_cast<std::size_t>(k)] =
            vr[static_cast<std::size_t>(k)] - vl[static_cast<std::size_t>(k)];
    }
    return dv;
}

} // namespace

Vec18 diffusion_jump_o1(const ConsState& left, const ConsState& right, Axis dir,
                        const PhysParams& params) {
    const EigenSystem es = eigen_system(left, right, dir, params);
    const Vec18 w = es.scaled_vars(jump_entropy_vars(left, right, params));
    return es.apply_r_lambda(w);
}

Vec18 diffusion_jump_o2(const std::array<ConsState, 4>& stencil, Axis dir,
                        const PhysParams& params) {
    // One eigensystem per interface; each cell's scaled variables use the
    // eigensystem of the interface they straddle.
    const EigenSystem es_l = eigen_system(stencil[0], stencil[1], dir, params);
    const EigenSystem es_c = eigen_system(stencil[1], stencil[2], dir, params);
    const EigenSystem es_r = eigen_system(stencil[2], stencil[3], dir, params);

    const Vec18 d_l = es_l.scaled_vars(jump_entropy_vars(stencil[0], stencil[1], params));
    const Vec18 d_c = es_c.scaled_vars(jump_entropy_vars(stencil[1], stencil[2], params));
    const Vec18 d_r = es_r.scaled_vars(jump_entropy_vars(stencil[2], stencil[3], params));

    Vec18 jt{};
    for (int k = 0; k < n_vars; ++k) {
        jt[static_cast<std::size_t>(k)] =
            limited_jump(d_l[static_cast<std::size_t>(k)], d_c[static_cast<std::size_t>(k)],
                         d_r[static_cast<std::size_t>(k)], LimiterKind::MinMod);
    }
    return es_c.apply_r_lambda(jt);
}

Vec18 es_interface_flux(const std::array<ConsState, 4>& stencil, Axis dir,
                        int order, const PhysParams& params) {
    Vec18 f = ec_flux(stencil[1], stencil[2], dir, params);
    const Vec18 d = (order == 1)
                        ? diffusion_jump_o1(stencil[1], stencil[2], dir, params)
                        : diffusion_jump_o2(stencil, dir, params);
    for (int k = 0; k < n_vars; ++k) {
        f[static_cast<std::size_t>(k)] -= 0.5 * d[static_cast<std::size_t>(k)];
    }
    return f;
}

} // namespace tfp
