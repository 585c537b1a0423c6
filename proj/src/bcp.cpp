#include "pzt/bcp.hpp"

#include <cmath>
#include <exception>
#include <limits>

namespace pzt {

namespace {

// The traction datum that enters the coupled (u3, T, phi) triple: the
// component conjugate to the thickness displacement.  thickness1 prescribes
// it as tbar3 (the t13 shear), thickness3 as tbar1 (the t33 normal stress).
double coupled_traction(const ProblemSpec& spec)
{
    return spec.orientation == Orientation::thickness1 ? spec.data.tbar3 : spec.data.tbar1;
}

struct Assembly {
    ReducedParams params;
    SolutionCoefficients coeffs;
    PlateProfile profile;
};

// Forward substitution through the ten boundary conditions.  The heat and
// electric/potential conditions fix the temperature pair (exponential
// amplitude, offset), the potential pair follows, then each traction fixes a
// displacement slope and each lower-face displacement an offset.  Every
// exponential is evaluated in decaying form e^{-a h}, e^{-2 a h}; amplitudes
// are stored at upper-face scale.
Assembly assemble(const ProblemSpec& spec)
{
    check_problem(spec);
    validate_material(spec.material);

    Assembly out;
    ReducedParams& p = out.params;
    p = reduce(spec.material, spec.orientation);
    if (p.a == 0.0)
        fail(Errc::degenerate_coupling,
             "coupling combination beta*e + c*omega vanishes: the exponential mode "
             "degenerates and the closed-form assembly does not apply");

    const Material& m = spec.material;
    const BoundaryData& d = spec.data;
    const double h = spec.h;
    const double a = p.a;
    const double e_mah = std::exp(-a * h);
    const double e_m2ah = e_mah * e_mah;
    const double em2 = std::expm1(-2.0 * a * h); // e^{-2ah} - 1, exact near 0

    const double tn = coupled_traction(spec);

    // --- coupled triple -------------------------------------------------
    // ampT is the exponential amplitude of T at the upper face: T(x) =
    // ampT e^{a(x-h)} + T2.
    double ampT = 0.0, T2 = 0.0;
    if (spec.variant == Variant::charge) {
        // The normal electric displacement is constant in x; combining it
        // with the (also constant) coupled traction and the heat condition
        // eliminates everything but T2.
        if (p.A == 0.0)
            fail(Errc::singular_denominator,
                 "variant-I temperature offset divides by beta*e + c*omega");
        T2 = -(p.c * d.Dbar + p.e * tn + p.B * d.qbar / p.kprime) / p.A;
        ampT = d.Tbar - T2;
    } else {
        // Potential difference between the faces fixes the amplitude:
        // K*ampT*(1 - e^{-2ah}) = (phibar - phibar2) + 2h*qbar/k'.
        const double bracket = 2.0 * h * d.qbar + p.kprime * (d.phibar - d.phibar2);
        ampT = bracket / (-p.k * em2);
        T2 = d.Tbar - ampT;
    }

    const double F1 = -d.qbar / p.kprime;
    const double F2 = d.phibar - h * F1 - p.K * ampT;

    // The coupled traction is constant in x (its exponential parts cancel
    // because a = A/(K B)): tn = c*U31 + e'*F1 - beta*T2.
    const double U31 = (tn + p.beta * T2 - p.eprime * F1) / p.c;
    const double u3amp = p.V / (a * p.c) * ampT;
    const double U32 = d.ubar3 + h * U31 - u3amp * e_m2ah;

    // --- remaining displacements ---------------------------------------
    double U11 = 0.0, U12 = 0.0, U21 = 0.0, U22 = 0.0, u1amp = 0.0;
    if (spec.orientation == Orientation::thickness1) {
        // u1 feels the temperature through the thermal stress modulus:
        // c11 u1'' = beta1 T', so it carries its own exponential, and its
        // traction c11*U11 - beta1*T2 is again constant in x.
        U11 = (d.tbar1 + m.beta1 * T2) / m.c11;
        u1amp = m.beta1 / (a * m.c11) * ampT;
        U12 = d.ubar1 + h * U11 - u1amp * e_m2ah;
        U21 = d.tbar2 / m.c66;
        U22 = d.ubar2 + h * U21;
    } else {
        // Both in-plane displacements are pure shear modes: affine profiles.
        U11 = d.tbar3 / m.c44;
        U12 = d.ubar1 + h * U11;
        U21 = d.tbar2 / m.c44;
        U22 = d.ubar2 + h * U21;
    }

    out.coeffs = SolutionCoefficients{
        .T1 = ampT * e_mah,
        .T2 = T2,
        .F1 = F1,
        .F2 = F2,
        .U11 = U11,
        .U12 = U12,
        .U21 = U21,
        .U22 = U22,
        .U31 = U31,
        .U32 = U32,
    };

    PlateProfile& pr = out.profile;
    pr.rate = a;
    pr.x0 = h;
    pr.T = ExpAffine{ampT, 0.0, T2};
    pr.phi = ExpAffine{p.K * ampT, F1, F2};
    pr.u1 = ExpAffine{u1amp, U11, U12};
    pr.u2 = ExpAffine{0.0, U21, U22};
    pr.u3 = ExpAffine{u3amp, U31, U32};
    return out;
}

} // namespace

SolutionCoefficients assemble_coefficients(const ProblemSpec& spec)
{
    return assemble(spec).coeffs;
}

PanelSolution solve_panel(const ProblemSpec& spec)
{
    Assembly parts = assemble(spec);
    PanelSolution sol;
    sol.spec = spec;
    sol.params = parts.params;
    sol.coeffs = parts.coeffs;
    sol.profile = parts.profile;
    return sol;
}

PlateProfile profile_from_coefficients(const Material& m, Orientation o, double h,
                                       const ReducedParams& p, const SolutionCoefficients& c)
{
    if (p.a == 0.0)
        fail(Errc::degenerate_coupling, "anchored profiles are defined for a != 0");
    const double scale = std::exp(p.a * h); // coefficient -> upper-face amplitude
    const double ampT = c.T1 * scale;
    PlateProfile pr;
    pr.rate = p.a;
    pr.x0 = h;
    pr.T = ExpAffine{ampT, 0.0, c.T2};
    pr.phi = ExpAffine{p.K * ampT, c.F1, c.F2};
    pr.u1 = ExpAffine{o == Orientation::thickness1 ? m.beta1 / (p.a * m.c11) * ampT : 0.0,
                      c.U11, c.U12};
    pr.u2 = ExpAffine{0.0, c.U21, c.U22};
    pr.u3 = ExpAffine{p.V / (p.a * p.c) * ampT, c.U31, c.U32};
    return pr;
}

KinematicState kinematic_state(const PanelSolution& sol, double x)
{
    const PlateProfile& pr = sol.profile;
    const int axis = thickness_axis(sol.spec.orientation);
    KinematicState ks;
    ks.grad_u[0][axis] = pr.u1.deriv(pr.rate, pr.x0, x);
    ks.grad_u[1][axis] = pr.u2.deriv(pr.rate, pr.x0, x);
    ks.grad_u[2][axis] = pr.u3.deriv(pr.rate, pr.x0, x);
    ks.grad_phi[axis] = pr.phi.deriv(pr.rate, pr.x0, x);
    ks.grad_T[axis] = pr.T.deriv(pr.rate, pr.x0, x);
    ks.T = pr.T.value(pr.rate, pr.x0, x);
    return ks;
}

StateSample evaluate_state(const PanelSolution& sol, double x)
{
    const double h = sol.spec.h;
    const double slack = h * (4.0 * std::numeric_limits<double>::epsilon());
    if (!(std::fabs(x) <= h + slack))
        fail(Errc::out_of_domain, "evaluation point lies outside the plate");

    const PlateProfile& pr = sol.profile;
    StateSample s;
    s.x = x;
    s.T = pr.T.value(pr.rate, pr.x0, x);
    s.phi = pr.phi.value(pr.rate, pr.x0, x);
    s.u = {pr.u1.value(pr.rate, pr.x0, x), pr.u2.value(pr.rate, pr.x0, x),
           pr.u3.value(pr.rate, pr.x0, x)};
    const KinematicState ks = kinematic_state(sol, x);
    s.t = stress(sol.spec.material, ks);
    s.D = electric_displacement(sol.spec.material, ks);
    s.q = heat_flux(sol.spec.material, ks);
    return s;
}

FaceSummary lower_face_summary(const PanelSolution& sol)
{
    const ProblemSpec& spec = sol.spec;
    const ReducedParams& p = sol.params;
    const BoundaryData& d = spec.data;
    const double h = spec.h;

    FaceSummary f;
    if (spec.variant == Variant::potential) {
        // Both lower-face values follow from the data without touching the
        // assembled coefficients.
        f.T_lower = d.Tbar - 2.0 * h * d.qbar / p.k - p.kprime / p.k * (d.phibar - d.phibar2);
        f.phi_lower = d.phibar2;
    } else {
        const double em2 = std::expm1(-2.0 * p.a * h);
        const double tn = coupled_traction(spec);
        // M = -T2 expressed directly in the data.
        const double M = (p.c * d.Dbar + p.e * tn + p.B * d.qbar / p.kprime) / p.A;
        f.T_lower = em2 * M + (em2 + 1.0) * d.Tbar;
        f.phi_lower = p.K * (d.Tbar + M) * em2 + 2.0 * h / p.kprime * d.qbar + d.phibar;
    }
    return f;
}

std::vector<StateSample> tabulate(const PanelSolution& sol, int samples, Exec exec)
{
    if (samples < 2)
        fail(Errc::schema_error, "profile tabulation needs at least two samples");
    const double h = sol.spec.h;
    std::vector<StateSample> out(static_cast<std::size_t>(samples));
    auto at = [&](int i) {
        const double w = static_cast<double>(i) / static_cast<double>(samples - 1);
        return evaluate_state(sol, (1.0 - w) * -h + w * h);
    };
    if (exec == Exec::parallel) {
        std::exception_ptr err;
#pragma omp parallel for schedule(static)
        for (int i = 0; i < samples; ++i) {
            try {
                out[static_cast<std::size_t>(i)] = at(i);
            } catch (...) {
#pragma omp critical
                if (!err)
                    err = std::current_exception();
            }
        }
        if (err)
            std::rethrow_exception(err);
    } else {
        for (int i = 0; i < samples; ++i)
            out[static_cast<std::size_t>(i)] = at(i);
    }
    return out;
}

} // namespace pzt
