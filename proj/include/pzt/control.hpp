#pragma once

#include "pzt/bcp.hpp"

namespace pzt {

// Which boundary datum is left free for the inverse problem.
enum class FreeDatum {
    Tbar,
    phibar,
    tbar1,
    tbar2,
    tbar3,
    ubar1,
    ubar2,
    ubar3,
    qbar,
    Dbar,
    phibar2,
};

const char* free_datum_name(FreeDatum d);
FreeDatum free_datum_from_name(const std::string& name);

// Field whose pointwise value is steered.
enum class TargetField { temperature, potential };

const char* target_field_name(TargetField f);
TargetField target_field_from_name(const std::string& name);

// Inverse problem: choose the free datum so that the target field reaches
// target_value at x_target.  spec.data supplies every other datum; the free
// slot's incoming value is irrelevant (the solve replaces it).
struct ControlQuery {
    ProblemSpec spec;
    FreeDatum free_datum = FreeDatum::qbar;
    TargetField target_field = TargetField::temperature;
    double x_target = 0;
    double target_value = 0;
};

struct ControlResult {
    double free_value = 0;   // datum achieving the target
    double sensitivity = 0;  // d(target)/d(free datum), independent of the rest
    PanelSolution solution;  // forward solve with the free datum installed
};

void set_datum(BoundaryData& data, FreeDatum d, double value);
double get_datum(const BoundaryData& data, FreeDatum d);

// Slope of the target value with respect to the free datum.  The target is
// affine in every datum, so one forward solve with all data zeroed and the
// free datum at 1 gives the exact slope with no cancellation.  Errors:
// InvalidFreeDatum if the datum/target pair is not admissible for the
// variant (variant II steers temperature only, through Tbar, qbar, phibar or
// phibar2; variant I steers temperature or potential through the coupled
// traction, Dbar, qbar or Tbar), OutOfDomain if |x| > h.
double sensitivity(const ProblemSpec& spec, FreeDatum d, TargetField f, double x);

// Solves the inverse problem: free_value = (target - base)/sensitivity,
// then re-solves forward with the datum installed.  Errors: Uncontrollable
// when the sensitivity vanishes (e.g. any variant-II datum steering the
// temperature at the upper face x = h, where T is pinned to Tbar), plus
// everything sensitivity can raise.
ControlResult invert(const ControlQuery& query);

} // namespace pzt
