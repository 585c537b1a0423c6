#pragma once

#include <stdexcept>
#include <string>

namespace pzt {

// Machine-readable failure kinds.  The CLI prints the CamelCase name on
// stderr and maps the kind to its exit code, so tests and calling scripts can
// dispatch on the name without parsing prose.
enum class Errc {
    symmetry_violation,
    non_physical,
    degenerate_cross_flux,
    degenerate_coupling,
    non_finite_data,
    singular_denominator,
    out_of_domain,
    uncontrollable,
    invalid_free_datum,
    singular_system,
    grid_too_coarse,
    spec_mismatch,
    out_of_schedule,
    schema_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message);

    Errc code() const { return code_; }
    const char* name() const { return errc_name(code_); }

private:
    Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

} // namespace pzt
