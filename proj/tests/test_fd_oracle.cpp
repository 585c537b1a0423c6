#include "pzt/fd_oracle.hpp"

#include "pzt/bcp.hpp"
#include "pzt/general_solution.hpp"
#include "pzt/verify.hpp"
#include "support/fixtures.hpp"
#include "support/random_spec.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace pzt;
using pzt::testing::degenerate_material;
using pzt::testing::unit_material;

namespace {

template <typename Fn> Errc thrown_code(Fn&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a pzt::Error");
    return Errc::schema_error; // unreachable
}

// Polynomial solution of the zero-rate (degenerate-coupling) thickness-3
// system, with the in-plane displacements affine.  The coupled triple comes
// from the degenerate closed-form branch; the boundary data it generates are
// fed to the finite-difference solver, which must reproduce polynomials of
// degree <= 2 to roundoff (every stencil used is exact on quadratics).
struct ManufacturedDegenerate {
    ReducedParams p;
    SolutionCoefficients c;
    double U11 = 0.31, U12 = 0.12, U21 = -0.41, U22 = 0.05;
    double h = 0.8;

    ManufacturedDegenerate()
    {
        p = reduce(degenerate_material(), Orientation::thickness3);
        c.T1 = 0.7;
        c.T2 = -0.3;
        c.F1 = 0.4;
        c.F2 = 1.1;
        c.U31 = 0.25;
        c.U32 = -0.6;
    }

    ReducedState coupled(double x) const { return evaluate_general_degenerate(p, c, x); }
    double u1(double x) const { return U11 * x + U12; }
    double u2(double x) const { return U21 * x + U22; }
    double du3(double x) const { return p.beta * c.T1 / p.c * x + c.U31; }
    double dphi() const { return p.K * c.T1 + c.F1; }

    ProblemSpec spec(Variant v) const
    {
        ProblemSpec s;
        s.material = degenerate_material();
        s.orientation = Orientation::thickness3;
        s.variant = v;
        s.h = h;

        const Material& m = s.material;
        s.data.Tbar = coupled(h).T;
        s.data.phibar = coupled(h).phi;
        // Upper-face tractions (t33, t32, t31).
        s.data.tbar1 = p.c * du3(h) + p.eprime * dphi() - p.beta * coupled(h).T;
        s.data.tbar2 = m.c44 * U21;
        s.data.tbar3 = m.c44 * U11;
        s.data.ubar1 = u1(-h);
        s.data.ubar2 = u2(-h);
        s.data.ubar3 = coupled(-h).u;
        // Inward normal heat flux at the lower face: -q3 = k T' - k' phi'.
        s.data.qbar = p.k * c.T1 - p.kprime * dphi();
        if (v == Variant::charge) {
            // Inward normal electric displacement: -D3.
            const double D3 = p.e * du3(-h) - p.eps * dphi() + p.omega * coupled(-h).T;
            s.data.Dbar = -D3;
        } else {
            s.data.phibar2 = coupled(-h).phi;
        }
        return s;
    }
};

} // namespace

TEST_CASE("grid geometry")
{
    const Grid g{8, 2.0};
    CHECK(g.spacing() == 0.5);
    CHECK(g.node(0) == -2.0);
    CHECK(g.node(4) == 0.0);
    CHECK(g.node(8) == 2.0);
}

TEST_CASE("coarse grids and mismatched geometry are refused")
{
    ProblemSpec spec;
    spec.material = unit_material();
    spec.orientation = Orientation::thickness1;
    spec.variant = Variant::charge;
    spec.h = 0.5;
    spec.data.Tbar = 1.0;

    CHECK(thrown_code([&] { (void)solve_fd(spec, Grid{4, spec.h}); })
          == Errc::grid_too_coarse);
    CHECK(thrown_code([&] { (void)solve_fd(spec, Grid{64, 2.0 * spec.h}); })
          == Errc::spec_mismatch);
}

TEST_CASE("degenerate coupling: closed form refuses, discrete solver is exact")
{
    const ManufacturedDegenerate mfg;

    for (Variant v : {Variant::charge, Variant::potential}) {
        const ProblemSpec spec = mfg.spec(v);
        CHECK(thrown_code([&] { (void)assemble_coefficients(spec); })
              == Errc::degenerate_coupling);

        const DiscreteSolution fd = solve_fd(spec, Grid{64, mfg.h});
        CHECK(fd.residual_norm <= 1e-12);

        double worst = 0.0;
        for (int i = 0; i <= fd.grid.n; ++i) {
            const double x = fd.grid.node(i);
            const ReducedState ref = mfg.coupled(x);
            const auto rel = [](double got, double want) {
                return std::fabs(got - want) / std::max(1.0, std::fabs(want));
            };
            worst = std::max({worst, rel(fd.T[i], ref.T), rel(fd.phi[i], ref.phi),
                              rel(fd.u3[i], ref.u), rel(fd.u1[i], mfg.u1(x)),
                              rel(fd.u2[i], mfg.u2(x))});
        }
        INFO("variant " << variant_name(v) << " nodal error " << worst);
        REQUIRE(worst <= 1e-9);
    }
}

TEST_CASE("discrete solution converges to the closed form at second order")
{
    std::mt19937_64 rng(606u);
    for (const auto& combo : pzt::testing::all_combos) {
        const ProblemSpec spec =
            pzt::testing::random_spec(rng, combo.orientation, combo.variant, 0.5, 2.0);
        const PanelSolution closed = solve_panel(spec);
        const DiscreteSolution coarse = solve_fd(spec, Grid{256, spec.h});
        const DiscreteSolution fine = solve_fd(spec, Grid{512, spec.h});

        CHECK(coarse.residual_norm <= 1e-10);
        CHECK(fine.residual_norm <= 1e-10);

        const ErrorReport rep = compare(closed, coarse, fine);
        INFO("orientation " << orientation_name(combo.orientation) << " variant "
                            << variant_name(combo.variant) << ": max_rel "
                            << rep.overall_max_rel << ", order " << rep.overall_order);
        REQUIRE(rep.overall_max_rel > 0.0);
        REQUIRE(rep.overall_max_rel < 1e-4);
        REQUIRE(rep.overall_order == Catch::Approx(2.0).margin(0.4));
    }
}

TEST_CASE("single-grid comparison reports errors but no order")
{
    std::mt19937_64 rng(607u);
    const ProblemSpec spec =
        pzt::testing::random_spec(rng, Orientation::thickness1, Variant::potential, 0.5, 2.0);
    const PanelSolution closed = solve_panel(spec);
    const DiscreteSolution fd = solve_fd(spec, Grid{128, spec.h});

    const ErrorReport rep = compare(closed, fd);
    CHECK(rep.overall_max_rel > 0.0);
    CHECK(std::isnan(rep.overall_order));
    for (const FieldError& f : rep.fields) {
        CHECK(std::isnan(f.order));
        CHECK(f.l2_rel <= f.max_rel * 1.0000001);
    }
}

TEST_CASE("comparison refuses solutions of different problems")
{
    std::mt19937_64 rng(608u);
    const ProblemSpec spec =
        pzt::testing::random_spec(rng, Orientation::thickness3, Variant::charge, 0.5, 2.0);
    ProblemSpec other = spec;
    other.data.Tbar += 1.0;

    const PanelSolution closed = solve_panel(spec);
    const DiscreteSolution fd = solve_fd(other, Grid{64, other.h});
    CHECK(thrown_code([&] { (void)compare(closed, fd); }) == Errc::spec_mismatch);
}
