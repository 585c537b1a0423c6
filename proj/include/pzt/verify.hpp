#pragma once

#include "pzt/bcp.hpp"
#include "pzt/fd_oracle.hpp"

#include <array>

namespace pzt {

// Per-field discrepancy between a closed-form and a discrete solution.
// Relative errors are normalized by max(1, max_i |closed-form value|) so
// near-zero fields don't explode the quotient.  `order` is NaN unless
// produced by the two-grid overload; fields whose fine-grid error sits at
// roundoff also report NaN there (no resolvable convergence rate).
struct FieldError {
    double max_rel = 0;
    double l2_rel = 0; // RMS of the differences over the same normalization
    double order = 0;
};

struct ErrorReport {
    static constexpr std::array<const char*, 5> field_names = {"u1", "u2", "u3", "T", "phi"};
    std::array<FieldError, 5> fields{};
    double overall_max_rel = 0;
    double overall_order = 0; // from the dominant-error field pair; NaN if single grid
};

// Samples the closed-form solution on the grid nodes and reports the
// discrepancies.  SpecMismatch unless both solutions describe the same
// problem.
ErrorReport compare(const PanelSolution& closed, const DiscreteSolution& discrete);

// Same on two grids (fine = 2x coarse refinement expected, but any pair
// works); reports fine-grid errors plus per-field and overall convergence
// orders log2(err_coarse / err_fine).
ErrorReport compare(const PanelSolution& closed, const DiscreteSolution& coarse,
                    const DiscreteSolution& fine);

// Worst normalized mismatch of the ten boundary conditions, with the
// achieved values taken through the constitutive layer.  Each condition is
// normalized by max(1, |datum|, sum of |term|): with coefficients spanning
// many decades, a large legitimately cancelling term pair bounds the
// attainable accuracy, so the mismatch is measured against the expression's
// own magnitude (backward-error sense).
double boundary_residual(const PanelSolution& sol);

// Worst normalized residual of the five field equations at x, same
// normalization.  Zero (to roundoff) for any assembled solution; feeding a
// corrupted amplitude through the lower-level residual overloads is the
// negative control.
double interior_residual(const PanelSolution& sol, double x);

} // namespace pzt
