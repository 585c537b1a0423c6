#pragma once

#include "pzt/errors.hpp"

namespace pzt {

// Fully coupled thermo-electro-elastic constants of a hexagonal (6mm) crystal
// whose six-fold axis is the x3 axis.  Only the independent entries of each
// tensor are stored; the constitutive layer expands them by symmetry.
struct Material {
    // elastic stiffness (constant field / constant temperature), Pa
    double c11 = 0, c12 = 0, c13 = 0, c33 = 0, c44 = 0, c66 = 0;
    // piezoelectric stress constants, C/m^2
    double e15 = 0, e31 = 0, e33 = 0;
    // dielectric permittivity at constant strain, F/m
    double eps11 = 0, eps33 = 0;
    // pyroelectric-type coefficients coupling temperature into charge, C/(m^2 K)
    double omega1 = 0, omega2 = 0, omega3 = 0;
    // thermal stress moduli (stiffness times expansion), Pa/K
    double beta1 = 0, beta2 = 0, beta3 = 0;
    // heat conductivity, W/(m K)
    double kappa11 = 0, kappa33 = 0;
    // electro-thermal cross-flux coefficients (potential gradient -> heat flux)
    double kappaE11 = 0, kappaE33 = 0;
    // reference temperature, K; reference mass density, kg/m^3
    double theta0 = 0;
    double rho0 = 0;
};

// Which plate normal the through-thickness problem is posed along.  The
// material's symmetry axis is always x3; `thickness1` cuts the plate across
// x1, `thickness3` across the poling axis.
enum class Orientation { thickness1, thickness3 };

// Index (0-based) of the thickness coordinate for an orientation.
constexpr int thickness_axis(Orientation o)
{
    return o == Orientation::thickness1 ? 0 : 2;
}

const char* orientation_name(Orientation o);

// Checks 6mm structure and basic physical admissibility:
//   - every entry finite (NonPhysical otherwise),
//   - c66 == (c11 - c12)/2 to 1e-12 relative (SymmetryViolation),
//   - c11, c33, c44, eps11, eps33, kappa11, kappa33, theta0, rho0 > 0
//     (NonPhysical),
//   - kappaE11 != 0 and kappaE33 != 0 (DegenerateCrossFlux): the reduced
//     thickness problems divide by the cross-flux coefficient.
void validate_material(const Material& m);

// Scalar coefficients of the one-dimensional coupled system along the
// thickness coordinate, plus the derived combinations every solver needs.
struct ReducedParams {
    double c = 0;      // stiffness multiplying u''
    double e = 0;      // piezo constant in the charge law (D = e u' - eps phi' + omega T)
    double eprime = 0; // piezo constant in the stress law (t = c u' + e' phi' - beta T)
    double beta = 0;   // thermal stress modulus (0 for thickness1)
    double omega = 0;  // temperature-to-charge coefficient
    double eps = 0;    // permittivity
    double k = 0;      // heat conductivity
    double kprime = 0; // electro-thermal cross-flux coefficient

    double K = 0;      // k / k'
    double A = 0;      // beta*e + c*omega
    double B = 0;      // e*eprime + c*eps
    double a = 0;      // exponential rate A / (K*B)
    double V = 0;      // beta - K*a*eprime == c*(beta*eps - eprime*omega)/B;
                       // u-amplitude is V/(a*c) per unit T1
    bool stable = false; // a > 0: exponential decays away from the upper face
};

ReducedParams reduce(const Material& m, Orientation o);

} // namespace pzt
