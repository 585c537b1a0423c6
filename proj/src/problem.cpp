#include "pzt/problem.hpp"

#include <array>
#include <cmath>
#include <string>

namespace pzt {

const char* variant_name(Variant v)
{
    return v == Variant::charge ? "I" : "II";
}

std::span<const DatumField> boundary_fields(Variant v)
{
    static constexpr std::array<DatumField, 10> charge_fields = {{
        {"Tbar", &BoundaryData::Tbar},
        {"phibar", &BoundaryData::phibar},
        {"tbar1", &BoundaryData::tbar1},
        {"tbar2", &BoundaryData::tbar2},
        {"tbar3", &BoundaryData::tbar3},
        {"ubar1", &BoundaryData::ubar1},
        {"ubar2", &BoundaryData::ubar2},
        {"ubar3", &BoundaryData::ubar3},
        {"qbar", &BoundaryData::qbar},
        {"Dbar", &BoundaryData::Dbar},
    }};
    static constexpr std::array<DatumField, 10> potential_fields = {{
        {"Tbar", &BoundaryData::Tbar},
        {"phibar", &BoundaryData::phibar},
        {"tbar1", &BoundaryData::tbar1},
        {"tbar2", &BoundaryData::tbar2},
        {"tbar3", &BoundaryData::tbar3},
        {"ubar1", &BoundaryData::ubar1},
        {"ubar2", &BoundaryData::ubar2},
        {"ubar3", &BoundaryData::ubar3},
        {"qbar", &BoundaryData::qbar},
        {"phibar2", &BoundaryData::phibar2},
    }};
    return v == Variant::charge ? std::span<const DatumField>(charge_fields)
                                : std::span<const DatumField>(potential_fields);
}

void check_problem(const ProblemSpec& spec)
{
    if (!std::isfinite(spec.h) || spec.h <= 0.0)
        fail(Errc::out_of_domain, "half-thickness h must be positive and finite");
    for (const auto& field : boundary_fields(spec.variant))
        if (!std::isfinite(spec.data.*(field.member)))
            fail(Errc::non_finite_data, std::string("boundary datum ") + field.name
                                            + " is not finite");
}

} // namespace pzt
