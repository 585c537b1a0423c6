#pragma once

#include "pzt/material.hpp"

namespace pzt {

// Scalar prototype every coupled field takes: y(x) = gamma e^{a x} + b
// (amplitude gamma, offset b; satisfies y' = a (y - b)).
double first_order_solution(double a, double b, double gamma, double x);

// Integration constants of the coupled through-thickness system.  T1 scales
// the shared exponential, (T2, F1, F2) the affine parts of T and phi, and
// (U11, U12, U21, U22, U31, U32) the slopes/offsets of u1, u2, u3.
struct SolutionCoefficients {
    double T1 = 0, T2 = 0;
    double F1 = 0, F2 = 0;
    double U11 = 0, U12 = 0;
    double U21 = 0, U22 = 0;
    double U31 = 0, U32 = 0;
};

// One field of the general solution: amp*e^{rate*(x - x0)} + slope*x + offset.
// The anchor x0 keeps the stored amplitude at face scale, so evaluation never
// forms a growing bare exponential for a decaying profile.
struct ExpAffine {
    double amp = 0, slope = 0, offset = 0;

    double value(double rate, double x0, double x) const;
    double deriv(double rate, double x0, double x) const;
    double second_deriv(double rate, double x0, double x) const;
};

// The coupled triple (temperature deviation, potential, thickness
// displacement) of the general solution at x, with coefficients anchored at
// x0 = 0:
//   T   = T1 e^{a x} + T2
//   phi = K T1 e^{a x} + F1 x + F2
//   u   = (V/(a c)) T1 e^{a x} + U31 x + U32
struct ReducedState {
    double T = 0, phi = 0, u = 0;
};

ReducedState evaluate_general(const ReducedParams& p, const SolutionCoefficients& c, double x);

// Limit form of the general solution when the exponential rate vanishes
// (a = 0, i.e. A = beta*e + c*omega = 0).  T1 becomes the temperature slope:
//   T   = T1 x + T2
//   phi = (K T1 + F1) x + F2
//   u   = (beta T1 / (2c)) x^2 + U31 x + U32
// This branch exists for cross-checking against the finite-difference path;
// the boundary-value solvers refuse a = 0 instead of assembling it.
ReducedState evaluate_general_degenerate(const ReducedParams& p, const SolutionCoefficients& c,
                                         double x);

// Residuals of the three coupled field equations at x:
//   mech = c u'' - beta T' + e' phi''
//   elec = e u'' + omega T' - eps phi''
//   heat = -k T'' + k' phi''
struct SystemResidual {
    double mech = 0, elec = 0, heat = 0;
};

SystemResidual residual_system(const ReducedParams& p, const SolutionCoefficients& c, double x);

// Same residuals for independently chosen exponential amplitudes of T, phi
// and u (affine parts contribute nothing to these equations).  With the
// coupled amplitudes (K*T_amp, (V/(a c))*T_amp) all three vanish; perturbing
// one amplitude must light up the corresponding residual, which is what the
// negative-control tests check.
SystemResidual residual_system(const ReducedParams& p, double T_amp, double phi_amp, double u_amp,
                               double x);

} // namespace pzt
