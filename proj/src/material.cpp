#include "pzt/material.hpp"

#include <cmath>
#include <string>

namespace pzt {

const char* orientation_name(Orientation o)
{
    return o == Orientation::thickness1 ? "thickness1" : "thickness3";
}

namespace {

void require_finite(double v, const char* name)
{
    if (!std::isfinite(v))
        fail(Errc::non_physical, std::string(name) + " is not finite");
}

void require_positive(double v, const char* name)
{
    if (!(v > 0.0))
        fail(Errc::non_physical, std::string(name) + " must be positive");
}

} // namespace

void validate_material(const Material& m)
{
    const struct {
        double value;
        const char* name;
    } entries[] = {
        {m.c11, "c11"},         {m.c12, "c12"},         {m.c13, "c13"},
        {m.c33, "c33"},         {m.c44, "c44"},         {m.c66, "c66"},
        {m.e15, "e15"},         {m.e31, "e31"},         {m.e33, "e33"},
        {m.eps11, "eps11"},     {m.eps33, "eps33"},     {m.omega1, "omega1"},
        {m.omega2, "omega2"},   {m.omega3, "omega3"},   {m.beta1, "beta1"},
        {m.beta2, "beta2"},     {m.beta3, "beta3"},     {m.kappa11, "kappa11"},
        {m.kappa33, "kappa33"}, {m.kappaE11, "kappaE11"}, {m.kappaE33, "kappaE33"},
        {m.theta0, "theta0"},   {m.rho0, "rho0"},
    };
    for (const auto& entry : entries)
        require_finite(entry.value, entry.name);

    const double c66_expected = 0.5 * (m.c11 - m.c12);
    const double scale = std::max(std::fabs(m.c66), std::fabs(c66_expected));
    if (std::fabs(m.c66 - c66_expected) > 1e-12 * scale)
        fail(Errc::symmetry_violation, "c66 must equal (c11 - c12)/2 for 6mm symmetry");

    require_positive(m.c11, "c11");
    require_positive(m.c33, "c33");
    require_positive(m.c44, "c44");
    require_positive(m.eps11, "eps11");
    require_positive(m.eps33, "eps33");
    require_positive(m.kappa11, "kappa11");
    require_positive(m.kappa33, "kappa33");
    require_positive(m.theta0, "theta0");
    require_positive(m.rho0, "rho0");

    if (m.kappaE11 == 0.0)
        fail(Errc::degenerate_cross_flux, "kappaE11 must be nonzero");
    if (m.kappaE33 == 0.0)
        fail(Errc::degenerate_cross_flux, "kappaE33 must be nonzero");
}

ReducedParams reduce(const Material& m, Orientation o)
{
    ReducedParams p;
    if (o == Orientation::thickness1) {
        // Thickness along x1: shear-coupled triple (u3, T, phi); no thermal
        // stress enters the reduced mechanical equation (beta = 0).
        p.c = m.c44;
        p.e = m.e15;
        p.eprime = m.e15;
        p.beta = 0.0;
        p.omega = m.omega1;
        p.eps = m.eps11;
        p.k = m.kappa11;
        p.kprime = m.kappaE11;
    } else {
        // Thickness along the poling axis x3: extensional triple.
        p.c = m.c33;
        p.e = m.e33;
        p.eprime = m.e33;
        p.beta = m.beta3;
        p.omega = m.omega3;
        p.eps = m.eps33;
        p.k = m.kappa33;
        p.kprime = m.kappaE33;
    }
    p.K = p.k / p.kprime;
    p.A = p.beta * p.e + p.c * p.omega;
    p.B = p.e * p.eprime + p.c * p.eps;
    p.a = p.A / (p.K * p.B);
    // V = beta - K*a*eprime, evaluated in the algebraically equal form
    // c*(beta*eps - eprime*omega)/B: the direct subtraction can lose all
    // significant digits when beta and K*a*eprime nearly coincide, and the
    // resulting absolute error would leak into the charge balance through
    // the displacement amplitude V/(a*c).
    p.V = p.c * (p.beta * p.eps - p.eprime * p.omega) / p.B;
    p.stable = p.a > 0.0;
    return p;
}

} // namespace pzt
