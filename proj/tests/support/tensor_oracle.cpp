#include "support/tensor_oracle.hpp"

#include "pzt/types.hpp"

namespace pzt::testing {

FullTensors expand(const Material& m)
{
    // Compressed 6x6 stiffness and 3x6 piezo patterns of class 6mm.
    const double cv[6][6] = {
        {m.c11, m.c12, m.c13, 0, 0, 0}, {m.c12, m.c11, m.c13, 0, 0, 0},
        {m.c13, m.c13, m.c33, 0, 0, 0}, {0, 0, 0, m.c44, 0, 0},
        {0, 0, 0, 0, m.c44, 0},         {0, 0, 0, 0, 0, m.c66},
    };
    const double ev[3][6] = {
        {0, 0, 0, 0, m.e15, 0},
        {0, 0, 0, m.e15, 0, 0},
        {m.e31, m.e31, m.e33, 0, 0, 0},
    };

    FullTensors t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    t.c[i][j][k][l] = cv[voigt_index(i, j)][voigt_index(k, l)];
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l)
                t.e[i][k][l] = ev[i][voigt_index(k, l)];

    t.eps[0][0] = m.eps11;
    t.eps[1][1] = m.eps11;
    t.eps[2][2] = m.eps33;
    t.beta[0][0] = m.beta1;
    t.beta[1][1] = m.beta2;
    t.beta[2][2] = m.beta3;
    t.omega[0] = m.omega1;
    t.omega[1] = m.omega2;
    t.omega[2] = m.omega3;
    t.kappa[0][0] = m.kappa11;
    t.kappa[1][1] = m.kappa11;
    t.kappa[2][2] = m.kappa33;
    t.kappaE[0][0] = m.kappaE11;
    t.kappaE[1][1] = m.kappaE11;
    t.kappaE[2][2] = m.kappaE33;
    return t;
}

namespace {

// True (tensor) strain: S_kl = (u_k,l + u_l,k) / 2.
void tensor_strain(const KinematicState& s, double S[3][3])
{
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
            S[k][l] = 0.5 * (s.grad_u[k][l] + s.grad_u[l][k]);
}

} // namespace

Voigt6 stress_by_contraction(const Material& m, const KinematicState& s)
{
    const FullTensors t = expand(m);
    double S[3][3];
    tensor_strain(s, S);
    const Vec3 E = {-s.grad_phi[0], -s.grad_phi[1], -s.grad_phi[2]};

    double tij[3][3] = {};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double v = 0.0;
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    v += t.c[i][j][k][l] * S[k][l];
            for (int k = 0; k < 3; ++k)
                v -= t.e[k][i][j] * E[k];
            v -= t.beta[i][j] * s.T;
            tij[i][j] = v;
        }

    Voigt6 out;
    for (int p = 0; p < 6; ++p) {
        const auto [i, j] = voigt_pair(p);
        out[p] = tij[i][j];
    }
    return out;
}

Vec3 electric_displacement_by_contraction(const Material& m, const KinematicState& s)
{
    const FullTensors t = expand(m);
    double S[3][3];
    tensor_strain(s, S);
    const Vec3 E = {-s.grad_phi[0], -s.grad_phi[1], -s.grad_phi[2]};

    Vec3 D{};
    for (int i = 0; i < 3; ++i) {
        double v = 0.0;
        for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l)
                v += t.e[i][k][l] * S[k][l];
        for (int k = 0; k < 3; ++k)
            v += t.eps[i][k] * E[k];
        v += t.omega[i] * s.T;
        D[i] = v;
    }
    return D;
}

Vec3 heat_flux_by_contraction(const Material& m, const KinematicState& s)
{
    const FullTensors t = expand(m);
    Vec3 q{};
    for (int i = 0; i < 3; ++i) {
        double v = 0.0;
        for (int k = 0; k < 3; ++k)
            v += -t.kappa[i][k] * s.grad_T[k] + t.kappaE[i][k] * s.grad_phi[k];
        q[i] = v;
    }
    return q;
}

} // namespace pzt::testing
