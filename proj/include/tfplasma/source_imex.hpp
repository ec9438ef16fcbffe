#pragma once

#include "tfplasma/state.hpp"

namespace tfp {

struct Field;

/// The state reordered into the three blocks of the stiff-source update:
/// W1 evolves without source, W2 couples linearly through the source,
/// W3 receives energy/charge sources computed from updated W1 and W2.
struct BlockSplit {
    std::array<double, 6> w1;  // rho_i, rho_e, Bx, By, Bz, psi
    std::array<double, 9> w2;  // ion momentum, electron momentum, E
    std::array<double, 3> w3;  // E_i, E_e, phi
};

using CouplingMatrix = std::array<std::array<double, 9>, 9>;

BlockSplit split(const ConsState& u);
ConsState merge(const BlockSplit& b);

/// Source coupling matrix A(W1) acting on the momentum/electric block:
/// dW2/dt = A(W1) W2. Depends only on densities and the magnetic field.
CouplingMatrix assemble_A(const std::array<double, 6>& w1, const PhysParams& params);

/// Solves (I - dt A) W2 = g2 by dense elimination with partial pivoting.
/// Throws SingularSystemError when a pivot underflows.
std::array<double, 9> implicit_momentum_solve(const std::array<double, 9>& g2,
                                              const CouplingMatrix& a, double dt);

/// One backward-Euler-in-source update from u with explicit increment
/// dt*rhs: W1 explicitly, W2 through the exact linear solve, W3 from the
/// updated blocks. The result is checked for admissibility.
ConsState imex_substep(const ConsState& u, const Vec18& rhs, double dt,
                       const PhysParams& params);

/// Row-sum norm of A(W1) at one state; bounds the source spectral radius.
double source_matrix_inf_norm(const ConsState& u, const PhysParams& params);

/// Stability bound for explicit source integration:
/// sigma / max over cells of the row-sum norm of A. +inf when A vanishes.
double explicit_source_dt(const Field& field, const PhysParams& params, double sigma);

} // namespace tfp
