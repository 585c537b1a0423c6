#include "pzt/general_solution.hpp"

#include <cmath>

namespace pzt {

double first_order_solution(double a, double b, double gamma, double x)
{
    return gamma * std::exp(a * x) + b;
}

double ExpAffine::value(double rate, double x0, double x) const
{
    return amp * std::exp(rate * (x - x0)) + slope * x + offset;
}

double ExpAffine::deriv(double rate, double x0, double x) const
{
    return rate * amp * std::exp(rate * (x - x0)) + slope;
}

double ExpAffine::second_deriv(double rate, double x0, double x) const
{
    return rate * rate * amp * std::exp(rate * (x - x0));
}

ReducedState evaluate_general(const ReducedParams& p, const SolutionCoefficients& c, double x)
{
    if (p.a == 0.0)
        fail(Errc::degenerate_coupling,
             "exponential rate a is zero; use the degenerate branch");
    const double E = c.T1 * std::exp(p.a * x);
    ReducedState s;
    s.T = E + c.T2;
    s.phi = p.K * E + c.F1 * x + c.F2;
    s.u = p.V / (p.a * p.c) * E + c.U31 * x + c.U32;
    return s;
}

ReducedState evaluate_general_degenerate(const ReducedParams& p, const SolutionCoefficients& c,
                                         double x)
{
    if (p.a != 0.0)
        fail(Errc::degenerate_coupling, "degenerate branch requires a == 0");
    ReducedState s;
    s.T = c.T1 * x + c.T2;
    s.phi = (p.K * c.T1 + c.F1) * x + c.F2;
    s.u = p.beta * c.T1 / (2.0 * p.c) * x * x + c.U31 * x + c.U32;
    return s;
}

SystemResidual residual_system(const ReducedParams& p, const SolutionCoefficients& c, double x)
{
    if (p.a == 0.0)
        fail(Errc::degenerate_coupling,
             "exponential rate a is zero; use the degenerate branch");
    return residual_system(p, c.T1, p.K * c.T1, p.V / (p.a * p.c) * c.T1, x);
}

SystemResidual residual_system(const ReducedParams& p, double T_amp, double phi_amp, double u_amp,
                               double x)
{
    const double E = std::exp(p.a * x);
    const double a = p.a;
    const double T_x = a * T_amp * E;
    const double T_xx = a * a * T_amp * E;
    const double phi_xx = a * a * phi_amp * E;
    const double u_xx = a * a * u_amp * E;
    SystemResidual r;
    r.mech = p.c * u_xx - p.beta * T_x + p.eprime * phi_xx;
    r.elec = p.e * u_xx + p.omega * T_x - p.eps * phi_xx;
    r.heat = -p.k * T_xx + p.kprime * phi_xx;
    return r;
}

} // namespace pzt
