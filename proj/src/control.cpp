#include "pzt/control.hpp"

#include <cmath>
#include <string>

namespace pzt {

namespace {

const struct {
    FreeDatum datum;
    const char* name;
    double BoundaryData::* member;
} datum_table[] = {
    {FreeDatum::Tbar, "Tbar", &BoundaryData::Tbar},
    {FreeDatum::phibar, "phibar", &BoundaryData::phibar},
    {FreeDatum::tbar1, "tbar1", &BoundaryData::tbar1},
    {FreeDatum::tbar2, "tbar2", &BoundaryData::tbar2},
    {FreeDatum::tbar3, "tbar3", &BoundaryData::tbar3},
    {FreeDatum::ubar1, "ubar1", &BoundaryData::ubar1},
    {FreeDatum::ubar2, "ubar2", &BoundaryData::ubar2},
    {FreeDatum::ubar3, "ubar3", &BoundaryData::ubar3},
    {FreeDatum::qbar, "qbar", &BoundaryData::qbar},
    {FreeDatum::Dbar, "Dbar", &BoundaryData::Dbar},
    {FreeDatum::phibar2, "phibar2", &BoundaryData::phibar2},
};

double BoundaryData::* datum_member(FreeDatum d)
{
    for (const auto& row : datum_table)
        if (row.datum == d)
            return row.member;
    fail(Errc::invalid_free_datum, "unknown datum");
}

// The data through which the coupled triple can actually be steered.
// Variant I: the coupled traction, the charge datum, the heat flux and the
// upper-face temperature reach both T and phi.  Variant II pins the
// potential on both faces, so only the temperature can be steered, through
// Tbar, qbar and the two potentials.
void check_admissible(const ProblemSpec& spec, FreeDatum d, TargetField f)
{
    const bool t1 = spec.orientation == Orientation::thickness1;
    bool datum_ok = false;
    if (spec.variant == Variant::charge) {
        const FreeDatum coupled = t1 ? FreeDatum::tbar3 : FreeDatum::tbar1;
        datum_ok = d == coupled || d == FreeDatum::Dbar || d == FreeDatum::qbar
                   || d == FreeDatum::Tbar;
    } else {
        if (f == TargetField::potential)
            fail(Errc::invalid_free_datum,
                 "variant II pins the potential on both faces; only the temperature "
                 "can be steered");
        datum_ok = d == FreeDatum::Tbar || d == FreeDatum::qbar || d == FreeDatum::phibar
                   || d == FreeDatum::phibar2;
    }
    if (!datum_ok)
        fail(Errc::invalid_free_datum,
             std::string(free_datum_name(d)) + " does not influence the "
                 + target_field_name(f) + " profile for variant "
                 + variant_name(spec.variant) + " (" + orientation_name(spec.orientation)
                 + ")");
}

double target_value_at(const PanelSolution& sol, TargetField f, double x)
{
    const StateSample s = evaluate_state(sol, x);
    return f == TargetField::temperature ? s.T : s.phi;
}

} // namespace

const char* free_datum_name(FreeDatum d)
{
    for (const auto& row : datum_table)
        if (row.datum == d)
            return row.name;
    return "unknown";
}

FreeDatum free_datum_from_name(const std::string& name)
{
    for (const auto& row : datum_table)
        if (name == row.name)
            return row.datum;
    fail(Errc::schema_error, "unknown boundary datum name: " + name);
}

const char* target_field_name(TargetField f)
{
    return f == TargetField::temperature ? "temperature" : "potential";
}

TargetField target_field_from_name(const std::string& name)
{
    if (name == "temperature")
        return TargetField::temperature;
    if (name == "potential")
        return TargetField::potential;
    fail(Errc::schema_error, "unknown target field name: " + name);
}

void set_datum(BoundaryData& data, FreeDatum d, double value)
{
    data.*datum_member(d) = value;
}

double get_datum(const BoundaryData& data, FreeDatum d)
{
    return data.*datum_member(d);
}

double sensitivity(const ProblemSpec& spec, FreeDatum d, TargetField f, double x)
{
    check_admissible(spec, d, f);
    // Every profile value is affine in the data with no constant part, so a
    // unit probe on an otherwise zero data set returns the slope exactly.
    ProblemSpec probe = spec;
    probe.data = BoundaryData{};
    set_datum(probe.data, d, 1.0);
    return target_value_at(solve_panel(probe), f, x);
}

ControlResult invert(const ControlQuery& query)
{
    const double s = sensitivity(query.spec, query.free_datum, query.target_field,
                                 query.x_target);
    if (s == 0.0)
        fail(Errc::uncontrollable,
             std::string("the ") + target_field_name(query.target_field) + " at x = "
                 + std::to_string(query.x_target) + " does not respond to "
                 + free_datum_name(query.free_datum));

    ProblemSpec base = query.spec;
    set_datum(base.data, query.free_datum, 0.0);
    const double base_value =
        target_value_at(solve_panel(base), query.target_field, query.x_target);

    ControlResult result;
    result.sensitivity = s;
    result.free_value = (query.target_value - base_value) / s;

    ProblemSpec solved = query.spec;
    set_datum(solved.data, query.free_datum, result.free_value);
    result.solution = solve_panel(solved);
    return result;
}

} // namespace pzt
