#pragma once

#include "pzt/constitutive.hpp"
#include "pzt/general_solution.hpp"
#include "pzt/problem.hpp"
#include "pzt/types.hpp"

#include <vector>

namespace pzt {

// Through-thickness profiles of all five fields, each in anchored form
// amp*e^{rate*(x - x0)} + slope*x + offset with the anchor at the upper face
// (x0 = h).  Storing face-scale amplitudes avoids ever forming the bare
// e^{a h} of a decaying exponential.
struct PlateProfile {
    double rate = 0;
    double x0 = 0;
    ExpAffine u1, u2, u3, T, phi;
};

// Closed-form solution of one panel problem.
struct PanelSolution {
    ProblemSpec spec;
    ReducedParams params;
    SolutionCoefficients coeffs;
    PlateProfile profile;
};

// Full local state at one thickness position.
struct StateSample {
    double x = 0;
    double T = 0, phi = 0;
    Vec3 u{};
    Voigt6 t{};
    Vec3 D{};
    Vec3 q{};
};

// Integration constants satisfying the variant's ten boundary conditions,
// obtained by forward substitution in the order the conditions decouple
// (heat flux -> electric condition -> temperature -> potential -> tractions
// -> displacements).  Errors: DegenerateCoupling when the exponential rate
// vanishes, NonFiniteData / OutOfDomain via check_problem, NonPhysical /
// SymmetryViolation / DegenerateCrossFlux via validate_material,
// SingularDenominator if a variant-I assembly is attempted with
// beta*e + c*omega = 0 (unreachable through solve_panel: that condition is
// exactly a = 0).
SolutionCoefficients assemble_coefficients(const ProblemSpec& spec);

// assemble_coefficients plus the anchored profiles, packaged for evaluation.
PanelSolution solve_panel(const ProblemSpec& spec);

// Rebuilds anchored profiles from raw integration constants (exponentials
// anchored at x = 0).  Used by solve_panel and by consumers that re-evaluate
// a solution from a stored coefficient report.
PlateProfile profile_from_coefficients(const Material& m, Orientation o, double h,
                                       const ReducedParams& p, const SolutionCoefficients& c);

// Displacement/potential/temperature gradients at x (only the thickness
// derivative is nonzero in this one-dimensional family).
KinematicState kinematic_state(const PanelSolution& sol, double x);

// Fields plus stress, electric displacement and heat flux at x through the
// constitutive layer.  Errors: OutOfDomain if |x| > h (up to a 4-ulp slack
// so computed face coordinates pass).
StateSample evaluate_state(const PanelSolution& sol, double x);

// Temperature and potential reached on the uncontrolled lower face, from the
// data alone (independent of the assembled coefficients; tests compare this
// route against evaluate_state at x = -h).
struct FaceSummary {
    double phi_lower = 0;
    double T_lower = 0;
};

FaceSummary lower_face_summary(const PanelSolution& sol);

// Uniformly spaced profile samples from the lower to the upper face
// (endpoints exact).  samples >= 2.  The parallel path is the OpenMP kernel;
// both paths produce bitwise-identical output.
std::vector<StateSample> tabulate(const PanelSolution& sol, int samples,
                                  Exec exec = Exec::parallel);

} // namespace pzt
