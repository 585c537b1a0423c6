#pragma once

#include "pzt/material.hpp"

#include <span>

namespace pzt {

// Electric condition imposed on the lower face: variant I prescribes the
// inward normal electric displacement, variant II the potential.
enum class Variant { charge, potential };

const char* variant_name(Variant v);

// Face data of one through-thickness boundary-value problem.
//
// Upper face x = +h:  temperature Tbar, potential phibar, tractions
// tbar1..tbar3 (components ordered per orientation: thickness1 prescribes
// (t11, t12, t13), thickness3 prescribes (t33, t32, t31)).
// Lower face x = -h:  displacements ubar1..ubar3, inward normal heat flux
// qbar, and Dbar (variant I, inward normal electric displacement) or phibar2
// (variant II, potential).  The slot the variant does not use stays zero.
struct BoundaryData {
    double Tbar = 0, phibar = 0;
    double tbar1 = 0, tbar2 = 0, tbar3 = 0;
    double ubar1 = 0, ubar2 = 0, ubar3 = 0;
    double qbar = 0;
    double Dbar = 0;
    double phibar2 = 0;
};

// Name/member table for the ten data slots a variant actually uses, in the
// documented order.  Shared by the JSON layer, schedule interpolation and the
// control module so the field list exists in exactly one place.
struct DatumField {
    const char* name;
    double BoundaryData::* member;
};

std::span<const DatumField> boundary_fields(Variant v);

// One fully specified panel problem: material, plate orientation, electric
// boundary variant, half-thickness h (plate occupies -h <= x <= h), and the
// ten face data.
struct ProblemSpec {
    Material material;
    Orientation orientation = Orientation::thickness3;
    Variant variant = Variant::charge;
    double h = 0;
    BoundaryData data;
};

// Geometry/data sanity shared by the closed-form and finite-difference
// solvers: h > 0 (OutOfDomain) and all data finite (NonFiniteData).
// Material admissibility is checked separately by validate_material.
void check_problem(const ProblemSpec& spec);

} // namespace pzt
