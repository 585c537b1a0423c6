#pragma once

#include "pzt/material.hpp"
#include "pzt/types.hpp"

namespace pzt {

// Pointwise first-order state: displacement gradient (grad_u[i][j] = du_i/dx_j),
// potential gradient, temperature deviation T = theta - theta0 and its gradient.
struct KinematicState {
    Mat3 grad_u{};
    Vec3 grad_phi{};
    Vec3 grad_T{};
    double T = 0.0;
};

// Compressed strain with engineering shears: S4 = 2*S_23 etc.
Voigt6 strain(const KinematicState& s);

// Stress  t_p = C_pq S_q - e_kp E_k - beta_p T,  with E = -grad_phi.
Voigt6 stress(const Material& m, const KinematicState& s);

// Electric displacement  D_k = e_kp S_p + eps_kl E_l + omega_k T.
Vec3 electric_displacement(const Material& m, const KinematicState& s);

// Heat flux  q_k = -kappa_kl dT/dx_l + kappaE_kl dphi/dx_l.
Vec3 heat_flux(const Material& m, const KinematicState& s);

} // namespace pzt
