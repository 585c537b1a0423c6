#include "pzt/control.hpp"

#include "support/fixtures.hpp"
#include "support/random_spec.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <string>
#include <vector>

using namespace pzt;
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

ProblemSpec unit_spec(Orientation o, Variant v, double h)
{
    ProblemSpec spec;
    spec.material = unit_material();
    spec.orientation = o;
    spec.variant = v;
    spec.h = h;
    return spec;
}

// Magnitude of the steered field's profile at x (|exp| + |slope x| + |offset|):
// the natural backward-error scale of a pointwise target.
double field_magnitude(const PanelSolution& sol, TargetField f, double x)
{
    const ExpAffine& pr = f == TargetField::temperature ? sol.profile.T : sol.profile.phi;
    const double E = std::exp(sol.profile.rate * (x - sol.profile.x0));
    return std::fabs(pr.amp * E) + std::fabs(pr.slope * x) + std::fabs(pr.offset);
}

} // namespace

TEST_CASE("datum accessors cover every slot")
{
    const FreeDatum all[] = {FreeDatum::Tbar,  FreeDatum::phibar, FreeDatum::tbar1,
                             FreeDatum::tbar2, FreeDatum::tbar3,  FreeDatum::ubar1,
                             FreeDatum::ubar2, FreeDatum::ubar3,  FreeDatum::qbar,
                             FreeDatum::Dbar,  FreeDatum::phibar2};
    BoundaryData data;
    double v = 1.0;
    for (FreeDatum d : all)
        set_datum(data, d, v += 1.0);
    v = 1.0;
    for (FreeDatum d : all)
        CHECK(get_datum(data, d) == (v += 1.0));

    for (FreeDatum d : all)
        CHECK(free_datum_from_name(free_datum_name(d)) == d);
    CHECK(std::string(free_datum_name(FreeDatum::phibar2)) == "phibar2");
    CHECK(thrown_code([] { (void)free_datum_from_name("bogus"); }) == Errc::schema_error);

    CHECK(target_field_from_name("temperature") == TargetField::temperature);
    CHECK(target_field_from_name("potential") == TargetField::potential);
    CHECK(thrown_code([] { (void)target_field_from_name("charge"); }) == Errc::schema_error);
}

TEST_CASE("steering the lower-face temperature through the second potential")
{
    // k = k', h = 1: T(-h) = Tbar - (phibar - phibar2), so reaching 4 from
    // Tbar = 10, phibar = 2 needs phibar2 = -4; the sensitivity is k'/k = 1.
    ControlQuery query;
    query.spec = unit_spec(Orientation::thickness1, Variant::potential, 1.0);
    query.spec.data.Tbar = 10.0;
    query.spec.data.phibar = 2.0;
    query.free_datum = FreeDatum::phibar2;
    query.target_field = TargetField::temperature;
    query.x_target = -1.0;
    query.target_value = 4.0;

    const ControlResult r = invert(query);
    CHECK(r.sensitivity == Catch::Approx(1.0).epsilon(1e-12));
    CHECK(r.free_value == Catch::Approx(-4.0).epsilon(1e-12));
    CHECK(get_datum(r.solution.spec.data, FreeDatum::phibar2) == r.free_value);
    CHECK(evaluate_state(r.solution, -1.0).T == Catch::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("lower-face temperature sensitivity to the second potential is k'/k")
{
    std::mt19937_64 rng(314u);
    for (int iter = 0; iter < 20; ++iter) {
        const Orientation o =
            iter % 2 == 0 ? Orientation::thickness1 : Orientation::thickness3;
        const ProblemSpec spec = pzt::testing::random_spec(rng, o, Variant::potential);
        const double s =
            sensitivity(spec, FreeDatum::phibar2, TargetField::temperature, -spec.h);
        const double expected = spec.orientation == Orientation::thickness1
                                    ? spec.material.kappaE11 / spec.material.kappa11
                                    : spec.material.kappaE33 / spec.material.kappa33;
        REQUIRE(s == Catch::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("charge-variant sensitivities match the closed expressions")
{
    const ProblemSpec spec = unit_spec(Orientation::thickness1, Variant::charge, 0.8);
    const ReducedParams p = reduce(spec.material, spec.orientation);

    // T(x) responds to Tbar through the exponential alone: dT/dTbar = e^{a(x-h)}.
    CHECK(sensitivity(spec, FreeDatum::Tbar, TargetField::temperature, 0.0)
          == Catch::Approx(std::exp(-p.a * spec.h)).epsilon(1e-12));
    // phi(x) responds with gain K through the same mode minus its upper-face
    // value: dphi/dTbar = K (e^{a(x-h)} - 1).
    CHECK(sensitivity(spec, FreeDatum::Tbar, TargetField::potential, 0.0)
          == Catch::Approx(p.K * (std::exp(-p.a * spec.h) - 1.0)).epsilon(1e-12));
}

TEST_CASE("admissible round-trips hit their targets")
{
    std::mt19937_64 rng(2718u);
    std::uniform_real_distribution<double> span(-1.0, 0.95);
    std::uniform_real_distribution<double> tgt(-5.0, 5.0);

    const std::vector<FreeDatum> charge_t1 = {FreeDatum::tbar3, FreeDatum::Dbar,
                                              FreeDatum::qbar, FreeDatum::Tbar};
    const std::vector<FreeDatum> charge_t3 = {FreeDatum::tbar1, FreeDatum::Dbar,
                                              FreeDatum::qbar, FreeDatum::Tbar};
    const std::vector<FreeDatum> potential_any = {FreeDatum::Tbar, FreeDatum::qbar,
                                                  FreeDatum::phibar, FreeDatum::phibar2};

    for (int iter = 0; iter < 60; ++iter) {
        const auto& combo = pzt::testing::all_combos[iter % 4];
        const ProblemSpec spec =
            pzt::testing::random_spec(rng, combo.orientation, combo.variant);

        ControlQuery query;
        query.spec = spec;
        if (combo.variant == Variant::charge) {
            const auto& pool = combo.orientation == Orientation::thickness1 ? charge_t1
                                                                            : charge_t3;
            query.free_datum = pool[static_cast<std::size_t>(iter / 4) % pool.size()];
            query.target_field =
                iter % 8 < 4 ? TargetField::temperature : TargetField::potential;
        } else {
            query.free_datum = potential_any[static_cast<std::size_t>(iter / 4)
                                             % potential_any.size()];
            query.target_field = TargetField::temperature;
        }
        query.x_target = span(rng) * spec.h;
        query.target_value = tgt(rng);

        const ControlResult r = invert(query);
        const StateSample s = evaluate_state(r.solution, query.x_target);
        const double achieved =
            query.target_field == TargetField::temperature ? s.T : s.phi;
        // |sensitivity * free_value| joins the scale: installing a large
        // datum cancels forward-solve terms of exactly that size, so the
        // achieved value cannot resolve the target any finer.
        const double scale =
            std::max({1.0, std::fabs(query.target_value),
                      field_magnitude(r.solution, query.target_field, query.x_target),
                      std::fabs(r.sensitivity * r.free_value)});
        REQUIRE(std::fabs(achieved - query.target_value) <= 1e-10 * scale);
        REQUIRE(get_datum(r.solution.spec.data, query.free_datum) == r.free_value);
    }
}

TEST_CASE("pinned targets are reported as uncontrollable")
{
    // The upper-face temperature is the Tbar datum itself: no other datum
    // reaches it, and the sensitivity vanishes exactly.
    ControlQuery query;
    query.spec = unit_spec(Orientation::thickness1, Variant::potential, 1.0);
    query.spec.data.Tbar = 1.0;
    query.free_datum = FreeDatum::qbar;
    query.target_field = TargetField::temperature;
    query.x_target = 1.0;
    query.target_value = 5.0;
    CHECK(thrown_code([&] { (void)invert(query); }) == Errc::uncontrollable);

    query.free_datum = FreeDatum::phibar2;
    CHECK(thrown_code([&] { (void)invert(query); }) == Errc::uncontrollable);
}

TEST_CASE("inadmissible datum/target pairs are refused")
{
    auto expect_invalid = [](Orientation o, Variant v, FreeDatum d, TargetField f) {
        ControlQuery query;
        query.spec = unit_spec(o, v, 1.0);
        query.free_datum = d;
        query.target_field = f;
        query.x_target = 0.0;
        query.target_value = 1.0;
        CHECK(thrown_code([&] { (void)invert(query); }) == Errc::invalid_free_datum);
    };

    // Variant II pins the potential on both faces.
    expect_invalid(Orientation::thickness1, Variant::potential, FreeDatum::qbar,
                   TargetField::potential);
    // Variant II owns no charge datum.
    expect_invalid(Orientation::thickness1, Variant::potential, FreeDatum::Dbar,
                   TargetField::temperature);
    expect_invalid(Orientation::thickness1, Variant::potential, FreeDatum::tbar1,
                   TargetField::temperature);
    // Variant I owns no second potential.
    expect_invalid(Orientation::thickness1, Variant::charge, FreeDatum::phibar2,
                   TargetField::temperature);
    // Displacements never reach the coupled triple.
    expect_invalid(Orientation::thickness1, Variant::charge, FreeDatum::ubar3,
                   TargetField::temperature);
    // Only the coupled traction component steers: t13 for thickness1, t33 for
    // thickness3.
    expect_invalid(Orientation::thickness1, Variant::charge, FreeDatum::tbar1,
                   TargetField::temperature);
    expect_invalid(Orientation::thickness3, Variant::charge, FreeDatum::tbar3,
                   TargetField::temperature);

    ControlQuery ok;
    ok.spec = unit_spec(Orientation::thickness3, Variant::charge, 1.0);
    ok.free_datum = FreeDatum::tbar1;
    ok.target_field = TargetField::potential;
    ok.x_target = 0.0;
    ok.target_value = 0.5;
    CHECK_NOTHROW((void)invert(ok));
}

TEST_CASE("targets outside the plate are refused")
{
    ControlQuery query;
    query.spec = unit_spec(Orientation::thickness1, Variant::charge, 1.0);
    query.free_datum = FreeDatum::qbar;
    query.target_field = TargetField::temperature;
    query.x_target = 2.0;
    query.target_value = 1.0;
    CHECK(thrown_code([&] { (void)invert(query); }) == Errc::out_of_domain);
}
