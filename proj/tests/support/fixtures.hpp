#pragma once

#include "pzt/problem.hpp"

#include <filesystem>

namespace pzt::testing {

// Hand-checkable 6mm material: every coefficient the thickness-1 reduction
// touches equals 1 (and beta1 = 0), so that reduction gives
//   K = 1, A = 1, B = 2, a = 1/2, V = -1/2,
// while the thickness-3 reduction (with beta3 = 1) gives
//   K = 1, A = 2, B = 2, a = 1, V = 0.
inline Material unit_material()
{
    Material m;
    m.c11 = 2.0;
    m.c12 = 0.0;
    m.c13 = 0.0;
    m.c33 = 1.0;
    m.c44 = 1.0;
    m.c66 = 1.0; // (c11 - c12)/2
    m.e15 = 1.0;
    m.e31 = 0.0;
    m.e33 = 1.0;
    m.eps11 = 1.0;
    m.eps33 = 1.0;
    m.omega1 = 1.0;
    m.omega2 = 1.0;
    m.omega3 = 1.0;
    m.beta1 = 0.0;
    m.beta2 = 0.0;
    m.beta3 = 1.0;
    m.kappa11 = 1.0;
    m.kappa33 = 1.0;
    m.kappaE11 = 1.0;
    m.kappaE33 = 1.0;
    m.theta0 = 300.0;
    m.rho0 = 1.0;
    return m;
}

// unit_material with omega3 = -1: the thickness-3 coupling combination
// beta3*e33 + c33*omega3 = 1 - 1 vanishes exactly, so the exponential rate
// is zero there.  The closed-form assembly must refuse this material while
// the finite-difference solver still handles it (the fields degenerate to
// polynomials).  The thickness-1 reduction is unaffected (a = 1/2).
inline Material degenerate_material()
{
    Material m = unit_material();
    m.omega3 = -1.0;
    return m;
}

// Location of the shipped sample inputs (injected by the build).
inline std::filesystem::path data_dir()
{
    return std::filesystem::path{PZT_DATA_DIR};
}

// The four orientation/variant combinations every structural test loops over.
struct Combo {
    Orientation orientation;
    Variant variant;
};

inline constexpr Combo all_combos[] = {
    {Orientation::thickness1, Variant::charge},
    {Orientation::thickness1, Variant::potential},
    {Orientation::thickness3, Variant::charge},
    {Orientation::thickness3, Variant::potential},
};

} // namespace pzt::testing
