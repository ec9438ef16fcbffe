#include "tfplasma/source_imex.hpp"

#include <cmath>
#include <limits>

#include "tfplasma/errors.hpp"
#include "tfplasma/mesh.hpp"

namespace tfp {

namespace {

constexpr std::array<int, 6> w1_slots = {RHO_I, RHO_E, BX, BY, BZ, PSI};
constexpr std::array<int, 9> w2_slots = {MX_I, MY_I, MZ_I, MX_E, MY_E, MZ_E, EX, EY, EZ};
constexpr std::array<int, 3> w3_slots = {EN_I, EN_E, PHI};

} // namespace

BlockSplit split(const ConsState& u) {
    BlockSplit b{};
    for (std::size_t k = 0; k < 6; ++k) b.w1[k] = u[static_cast<std::size_t>(w1_slots[k])];
    for (std::size_t k = 0; k < 9; ++k) b.w2[k] = u[static_cast<std::size_t>(w2_slots[k])];
    for (std::size_t k = 0; k < 3; ++k) b.w3[k] = u[static_cast<std::size_t>(w3_slots[k])];
    return b;
}

ConsState merge(const BlockSplit& b) {
    ConsState u{};
    for (std::size_t k = 0; k < 6; ++k) u[static_cast<std::size_t>(w1_slots[k])] = b.w1[k];
    for (std::size_t k = 0; k < 9; ++k) u[static_cast<std::size_t>(w2_slots[k])] = b.w2[k];
    for (std::size_t k = 0; k < 3; ++k) u[static_cast<std::size_t>(w3_slots[k])] = b.w3[k];
    return u;
}

CouplingMatrix assemble_A(const std::array<double, 6>& w1, const PhysParams& params) {
    const double rho_i = w1[0];
    const double rho_e = w1[1];
    const double bx = w1[2];
    const double by = w1[3];
    const double bz = w1[4];
    const double inv_rg_i = 1.0 / params.r_hat_g;
    const double inv_rg_e = 1.0 / params.r_eg();
    const double inv_k = 1.0 / params.debye_k();

    CouplingMatrix a{};
    // Ion momentum: rotation about B plus electric acceleration.
    a[0][1] = bz * inv_rg_i;
    a[0][2] = -by * inv_rg_i;
    a[0][6] = rho_i * inv_rg_i;
    a[1][0] = -bz * inv_rg_i;
    a[1][2] = bx * inv_rg_i;
    a[1][7] = rho_i * inv_rg_i;
    a[2][0] = by * inv_rg_i;
    a[2][1] = -bx * inv_rg_i;
    a[2][8] = rho_i * inv_rg_i;
    // Electron momentum: same structure with the signed electron factor.
    a[3][4] = bz * inv_rg_e;
    a[3][5] = -by * inv_rg_e;
    a[3][6] = rho_e * inv_rg_e;
    a[4][3] = -bz * inv_rg_e;
    a[4][5] = bx * inv_rg_e;
    a[4][7] = rho_e * inv_rg_e;
    a[5][3] = by * inv_rg_e;
    a[5][4] = -bx * inv_rg_e;
    a[5][8] = rho_e * inv_rg_e;
    // Electric field: minus the current.
    const double ci = -params.r_i() * inv_k;
    const double ce = -params.r_e() * inv_k;
    a[6][0] = ci;
    a[6][3] = ce;
    a[7][1] = ci;
    a[7][4] = ce;
    a[8][2] = ci;
    a[8][5] = ce;
    return a;
}

namespace {

using Mat9 = std::array<std::array<double, 9>, 9>;

// LU factorization with partial pivoting, in place; perm holds row swaps.
void lu_factor(Mat9& m, std::array<int, 9>& perm) {
    for (int col = 0; col < 9; ++col) {
        int pivot = col;
        double best = std::abs(m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)]);
        for (int r = col + 1; r < 9; ++r) {
            const double cand = std::abs(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]);
            if (cand > best) {
                best = cand;
                pivot = r;
            }
        }
        if (best < 1e-300) {
            throw SingularSystemError("implicit momentum system is singular");
        }
        perm[static_cast<std::size_t>(col)] = pivot;
        if (pivot != col) std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(col)]);
        const double inv = 1.0 / m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        for (int r = col + 1; r < 9; ++r) {
            const double factor = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] * inv;
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] = factor;
            if (factor == 0.0) continue;
            for (int c = col + 1; c < 9; ++c) {
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    factor * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
            }
        }
    }
}

std::array<double, 9> lu_solve(const Mat9& lu, const std::array<int, 9>& perm,
                               std::array<double, 9> b) {
    for (int r = 0; r < 9; ++r) {
        std::swap(b[static_cast<std::size_t>(r)], b[static_cast<std::size_t>(perm[static_cast<std::size_t>(r)])]);
        for (int c = 0; c < r; ++c) {
            b[static_cast<std::size_t>(r)] -=
                lu[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * b[static_cast<std::size_t>(c)];
        }
    }
    for (int r = 8; r >= 0; --r) {
        for (int c = r + 1; c < 9; ++c) {
            b[static_cast<std::size_t>(r)] -=
                lu[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * b[static_cast<std::size_t>(c)];
        }
        b[static_cast<std::size_t>(r)] /= lu[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)];
    }
    return b;
}

} // namespace

std::array<double, 9> implicit_momentum_solve(const std::array<double, 9>& g2,
                                              const CouplingMatrix& a, double dt) {
    Mat9 m{};
    for (int r = 0; r < 9; ++r) {
        for (int c = 0; c < 9; ++c) {
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                (r == c ? 1.0 : 0.0) - dt * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        }
    }
    Mat9 lu = m;
    std::array<int, 9> perm{};
    lu_factor(lu, perm);
    std::array<double, 9> x = lu_solve(lu, perm, g2);

    // One fixed residual-correction pass, residual in extended precision:
    // keeps the backward error at roundoff for poorly conditioned (I - dt A).
    std::array<double, 9> correction{};
    for (int r = 0; r < 9; ++r) {
        long double acc = g2[static_cast<std::size_t>(r)];
        for (int c = 0; c < 9; ++c) {
            acc -= static_cast<long double>(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) *
                   static_cast<long double>(x[static_cast<std::size_t>(c)]);
        }
        correction[static_cast<std::size_t>(r)] = static_cast<double>(acc);
    }
    const std::array<double, 9> dx = lu_solve(lu, perm, correction);
    for (int r = 0; r < 9; ++r) {
        x[static_cast<std::size_t>(r)] += dx[static_cast<std::size_t>(r)];
    }
    return x;
}

ConsState imex_substep(const ConsState& u, const Vec18& rhs, double dt,
                       const PhysParams& params) {
    const BlockSplit b = split(u);
    const BlockSplit l = split(rhs);

    BlockSplit out{};
    // Densities, magnetic field and psi have no source: plain explicit update.
    for (std::size_t k = 0; k < 6; ++k) out.w1[k] = b.w1[k] + dt * l.w1[k];

    // Momenta and electric field: exact solve of the linear implicit update.
    std::array<double, 9> g2{};
    for (std::size_t k = 0; k < 9; ++k) g2[k] = b.w2[k] + dt * l.w2[k];
    const CouplingMatrix a = assemble_A(out.w1, params);
    out.w2 = implicit_momentum_solve(g2, a, dt);

    // Energies and phi: explicit update plus sources evaluated at the
    // updated blocks. E.(rho v) products come straight from the W2 slots.
    const double ex = out.w2[6];
    const double ey = out.w2[7];
    const double ez = out.w2[8];
    const double work_i = (ex * out.w2[0] + ey * out.w2[1] + ez * out.w2[2]) / params.r_hat_g;
    const double work_e = (ex * out.w2[3] + ey * out.w2[4] + ez * out.w2[5]) / params.r_eg();
    const double charge = params.xi * (params.r_i() * out.w1[0] + params.r_e() * out.w1[1]) /
                          params.debye_k();
    out.w3[0] = b.w3[0] + dt * (l.w3[0] + work_i);
    out.w3[1] = b.w3[1] + dt * (l.w3[1] + work_e);
    out.w3[2] = b.w3[2] + dt * (l.w3[2] + charge);

    const ConsState result = merge(out);
    check_admissible(result, params);
    return result;
}

double source_matrix_inf_norm(const ConsState& u, const PhysParams& params) {
    const BlockSplit b = split(u);
    const CouplingMatrix a = assemble_A(b.w1, params);
    double norm = 0.0;
    for (int r = 0; r < 9; ++r) {
        double row = 0.0;
        for (int c = 0; c < 9; ++c) {
            row += std::abs(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        }
        norm = std::max(norm, row);
    }
    return norm;
}

double explicit_source_dt(const Field& field, const PhysParams& params, double sigma) {
    double norm = 0.0;
    field.for_each_interior([&](const ConsState& u, int, int) {
        norm = std::max(norm, source_matrix_inf_norm(u, params));
    });
    if (norm == 0.0) return std::numeric_limits<double>::infinity();
    return sigma / norm;
}

} // namespace tfp
