#include "pzt/errors.hpp"

namespace pzt {

const char* errc_name(Errc code)
{
    switch (code) {
    case Errc::symmetry_violation: return "SymmetryViolation";
    case Errc::non_physical: return "NonPhysical";
    case Errc::degenerate_cross_flux: return "DegenerateCrossFlux";
    case Errc::degenerate_coupling: return "DegenerateCoupling";
    case Errc::non_finite_data: return "NonFiniteData";
    case Errc::singular_denominator: return "SingularDenominator";
    case Errc::out_of_domain: return "OutOfDomain";
    case Errc::uncontrollable: return "Uncontrollable";
    case Errc::invalid_free_datum: return "InvalidFreeDatum";
    case Errc::singular_system: return "SingularSystem";
    case Errc::grid_too_coarse: return "GridTooCoarse";
    case Errc::spec_mismatch: return "SpecMismatch";
    case Errc::out_of_schedule: return "OutOfSchedule";
    case Errc::schema_error: return "SchemaError";
    }
    return "UnknownError";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code)
{
}

void fail(Errc code, const std::string& message)
{
    throw Error(code, message);
}

} // namespace pzt
