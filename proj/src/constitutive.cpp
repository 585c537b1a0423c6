#include "pzt/constitutive.hpp"

namespace pzt {

Voigt6 strain(const KinematicState& s)
{
    const Mat3& g = s.grad_u;
    return {
        g[0][0],
        g[1][1],
        g[2][2],
        g[1][2] + g[2][1],
        g[2][0] + g[0][2],
        g[0][1] + g[1][0],
    };
}

Voigt6 stress(const Material& m, const KinematicState& s)
{
    const Voigt6 S = strain(s);
    const Vec3 E = {-s.grad_phi[0], -s.grad_phi[1], -s.grad_phi[2]};
    Voigt6 t;
    t[0] = m.c11 * S[0] + m.c12 * S[1] + m.c13 * S[2] - m.e31 * E[2] - m.beta1 * s.T;
    t[1] = m.c12 * S[0] + m.c11 * S[1] + m.c13 * S[2] - m.e31 * E[2] - m.beta2 * s.T;
    t[2] = m.c13 * S[0] + m.c13 * S[1] + m.c33 * S[2] - m.e33 * E[2] - m.beta3 * s.T;
    t[3] = m.c44 * S[3] - m.e15 * E[1];
    t[4] = m.c44 * S[4] - m.e15 * E[0];
    t[5] = m.c66 * S[5];
    return t;
}

Vec3 electric_displacement(const Material& m, const KinematicState& s)
{
    const Voigt6 S = strain(s);
    const Vec3 E = {-s.grad_phi[0], -s.grad_phi[1], -s.grad_phi[2]};
    Vec3 D;
    D[0] = m.e15 * S[4] + m.eps11 * E[0] + m.omega1 * s.T;
    D[1] = m.e15 * S[3] + m.eps11 * E[1] + m.omega2 * s.T;
    D[2] = m.e31 * (S[0] + S[1]) + m.e33 * S[2] + m.eps33 * E[2] + m.omega3 * s.T;
    return D;
}

Vec3 heat_flux(const Material& m, const KinematicState& s)
{
    Vec3 q;
    q[0] = -m.kappa11 * s.grad_T[0] + m.kappaE11 * s.grad_phi[0];
    q[1] = -m.kappa11 * s.grad_T[1] + m.kappaE11 * s.grad_phi[1];
    q[2] = -m.kappa33 * s.grad_T[2] + m.kappaE33 * s.grad_phi[2];
    return q;
}

} // namespace pzt
